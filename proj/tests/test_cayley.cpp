#include <doctest.h>

#include <algorithm>

#include "d2tf/canonical.hpp"
#include "d2tf/cayley.hpp"
#include "d2tf/constructions.hpp"
#include "d2tf/properties.hpp"
#include "test_helpers.hpp"

using namespace d2tf;
namespace th = d2tf::testing;

namespace {

ConnectionSet cs(std::vector<int> factors, std::vector<int> elements) {
    return make_connection_set(AbelianGroup(std::move(factors)), std::move(elements));
}

const std::vector<int> kClebschSet = {1, 2, 4, 8, 15};

// Seeded random inverse-closed sets over random groups of order <= 64.
std::vector<ConnectionSet> random_sets(int count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<ConnectionSet> out;
    while (static_cast<int>(out.size()) < count) {
        std::vector<int> factors;
        int order = 1;
        do {
            const int f = 2 + static_cast<int>(rng.below(7));
            if (order * f > 64) break;
            factors.push_back(f);
            order *= f;
        } while (rng.below(100) < 70);
        if (factors.empty()) continue;
        AbelianGroup g(std::move(factors));
        std::vector<int> elements;
        const std::uint64_t density = 1 + rng.below(60);
        for (int x = 1; x < g.order(); ++x) {
            if (static_cast<int>(g.negate(x)) < x) continue;
            if (rng.below(100) < density) {
                elements.push_back(x);
                if (g.negate(x) != x) elements.push_back(g.negate(x));
            }
        }
        out.push_back(make_connection_set(std::move(g), std::move(elements)));
    }
    return out;
}

}  // namespace

TEST_CASE("group arithmetic") {
    AbelianGroup z12({3, 4});
    CHECK(z12.order() == 12);
    for (int a = 0; a < 12; ++a) {
        CHECK(z12.add(a, 0) == a);
        CHECK(z12.add(a, z12.negate(a)) == 0);
        for (int b = 0; b < 12; ++b) CHECK(z12.add(a, b) == z12.add(b, a));
    }
    CHECK(AbelianGroup({2, 2, 2}).elementary_two());
    CHECK_FALSE(AbelianGroup({2, 4}).elementary_two());
    CHECK_THROWS(AbelianGroup({1}));
    CHECK_THROWS(AbelianGroup({}));
    CHECK_THROWS(AbelianGroup({64, 65}));  // order over 4096

    CHECK_THROWS(cs({5}, {0, 1}));  // contains identity
    CHECK_THROWS(cs({5}, {1}));     // not inverse-closed
}

TEST_CASE("cayley graphs") {
    CHECK(canonical_form(cayley_graph(cs({5}, {1, 4}))) == canonical_form(named_graph("c5")));
    CHECK(canonical_form(cayley_graph(cs({2, 2, 2, 2}, kClebschSet))) ==
          canonical_form(named_graph("clebsch")));

    const Graph z13 = cayley_graph(cs({13}, {1, 5, 8, 12}));
    CHECK(z13.order() == 13);
    CHECK(z13.edge_count() == 26);
    for (int v = 0; v < 13; ++v) CHECK(z13.degree(v) == 4);
    CHECK(witness_report(z13, 2, 3).is_witness);
    CHECK(girth_class(z13) == GirthClass::four);

    // |S|-regular and vertex-transitive in general.
    for (const auto& set : random_sets(25, 11)) {
        if (set.group.order() > 512) continue;
        const Graph g = cayley_graph(set);
        for (int v = 0; v < g.order(); ++v)
            CHECK(g.degree(v) == static_cast<int>(set.elements.size()));
        CHECK(canonicalize(g).orbit_count == 1);
    }
}

TEST_CASE("algebraic condition examples") {
    CHECK(triangle_condition(cs({2, 2, 2, 2}, kClebschSet)));
    CHECK_FALSE(triangle_condition(cs({7}, {1, 2, 5, 6})));  // 1+1=2
    CHECK(triangle_condition(cs({9}, {})));

    CHECK(diameter2_condition(cs({2, 2, 2, 2}, kClebschSet)));
    CHECK_FALSE(diameter2_condition(cs({8}, {1, 7})));  // z=4 unreachable
    std::vector<int> all_nonzero;
    for (int x = 1; x < 7; ++x) all_nonzero.push_back(x);
    CHECK(diameter2_condition(cs({7}, all_nonzero)));  // complete graph

    CHECK(k23_condition(cs({2, 2, 2, 2}, kClebschSet)));
    CHECK(k23_condition(cs({13}, {1, 5, 8, 12})));
    CHECK_FALSE(k23_condition(cs({9}, {1, 8, 3, 6})));
}

TEST_CASE("double set") {
    CHECK(double_set(cs({5}, {1, 4})) == std::vector<int>{2, 3});
    CHECK(double_set(cs({2, 2, 2, 2}, kClebschSet)) == std::vector<int>{0});
    // Odd order: |T| = |S|.
    for (const auto& set : random_sets(30, 21)) {
        if (set.group.order() % 2 == 1)
            CHECK(double_set(set).size() == set.elements.size());
    }
}

TEST_CASE("parity of co-degrees") {
    const auto clebsch = codegree_parity_check(cs({2, 2, 2, 2}, kClebschSet));
    CHECK(clebsch.holds);
    const auto c5 = codegree_parity_check(cs({5}, {1, 4}));
    CHECK(c5.holds);

    for (const auto& set : random_sets(100, 31)) {
        if (set.group.order() > 512) continue;
        const auto rep = codegree_parity_check(set);
        CHECK(rep.holds);
        if (rep.odd_order_check_ran) CHECK(rep.odd_order_check_holds);
    }
}

TEST_CASE("counting feasibility") {
    const auto n25 = counting_feasibility(AbelianGroup({25}), std::nullopt);
    CHECK(n25.status == Feasibility::feasible);
    CHECK(n25.implied_k == 6);

    CHECK(counting_feasibility(AbelianGroup({7}), std::nullopt).status ==
          Feasibility::infeasible);

    const auto d4 = counting_feasibility(AbelianGroup({2, 2, 2, 2}), std::nullopt);
    CHECK(d4.status == Feasibility::feasible);
    CHECK(d4.implied_k == 5);
    for (int d : {3, 5, 6})
        CHECK(counting_feasibility(AbelianGroup(std::vector<int>(d, 2)), std::nullopt).status ==
              Feasibility::infeasible);

    CHECK(counting_feasibility(AbelianGroup({2, 3}), std::nullopt).status ==
          Feasibility::inapplicable);

    // Mismatched k downgrades a feasible order.
    CHECK(counting_feasibility(AbelianGroup({25}), 4).status == Feasibility::infeasible);
    CHECK(counting_feasibility(AbelianGroup({25}), 6).status == Feasibility::feasible);
}

TEST_CASE("ramanujan-nagell") {
    CHECK(ramanujan_nagell(60) == std::vector<int>{3, 4, 5, 7, 15});
    CHECK(ramanujan_nagell(2).empty());
    CHECK(ramanujan_nagell(7) == std::vector<int>{3, 4, 5, 7});
    CHECK_THROWS(ramanujan_nagell(63));
}

TEST_CASE("connection set enumeration") {
    const auto clebsch_classes = enumerate_connection_sets(AbelianGroup({2, 2, 2, 2}), 5);
    REQUIRE(clebsch_classes.size() == 1);
    CHECK(clebsch_classes[0].report.canonical_form == canonical_form(named_graph("clebsch")));
    CHECK(srg_params(clebsch_classes[0].graph) == SrgParams{16, 5, 0, 2});

    for (int k = 1; k <= 7; ++k)
        CHECK(enumerate_connection_sets(AbelianGroup({2, 2, 2}), k).empty());

    const auto c5_classes = enumerate_connection_sets(AbelianGroup({5}), 2);
    REQUIRE(c5_classes.size() == 1);
    CHECK(c5_classes[0].report.canonical_form == canonical_form(named_graph("c5")));

    const auto z13 = enumerate_connection_sets(AbelianGroup({13}), 4);
    REQUIRE(z13.size() == 1);
    CHECK(z13[0].set.elements == std::vector<int>{1, 5, 8, 12});

    // Coprime-to-6 identity re-derived from outputs: (k+1)^2 = 2n-1.
    for (const auto& cls : z13) {
        const long long k = static_cast<long long>(cls.set.elements.size());
        CHECK((k + 1) * (k + 1) == 2 * 13 - 1);
    }
}

TEST_CASE("elementary 2-group outputs satisfy the srg corollary") {
    for (int d = 2; d <= 5; ++d) {
        const AbelianGroup g(std::vector<int>(d, 2));
        for (int k = 1; k <= std::min(10, g.order() - 1); ++k)
            for (const auto& cls : enumerate_connection_sets(g, k)) {
                const auto p = srg_params(cls.graph);
                REQUIRE(p.has_value());
                CHECK(*p == SrgParams{g.order(), static_cast<long long>(cls.set.elements.size()),
                                      0, 2});
            }
    }
}

TEST_CASE("lemma conditions agree with graph-level checks") {
    for (const auto& set : random_sets(120, 2024)) {
        if (set.group.order() > 512) continue;
        const Graph g = cayley_graph(set);
        CHECK(triangle_condition(set) == is_triangle_free(g));
        CHECK(diameter2_condition(set) ==
              (diameter(g).has_value() && *diameter(g) <= 2));
        CHECK(k23_condition(set) == !has_kst(g, 2, 3));
    }
}

TEST_CASE("abelian group catalogue") {
    const auto g25 = abelian_groups_of_order(25);
    REQUIRE(g25.size() == 2);
    CHECK(g25[0] == std::vector<int>{5, 5});
    CHECK(g25[1] == std::vector<int>{25});
    CHECK(abelian_groups_of_order(13) == std::vector<std::vector<int>>{{13}});
    CHECK(abelian_groups_of_order(12).size() == 2);  // 4x3 and 2x2x3
}

TEST_CASE("prime power classification at desk scale") {
    const auto rows = classify_prime_power_orders(41);
    std::vector<int> feasible;
    for (const auto& row : rows)
        if (row.feasible) feasible.push_back(row.n);
    CHECK(feasible == std::vector<int>{5, 13, 25, 41});
    for (const auto& row : rows) {
        if (!row.feasible) continue;
        int total = 0;
        for (const auto& g : row.groups) total += g.witness_classes;
        if (row.n == 5 || row.n == 13) CHECK(total >= 1);
        if (row.n == 25) CHECK(total == 0);
        if (row.n == 25) CHECK(row.groups.size() == 2);
    }
}
