#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "d2tf/canonical.hpp"
#include "d2tf/constructions.hpp"
#include "d2tf/graph6.hpp"
#include "d2tf/properties.hpp"
#include "d2tf/search.hpp"
#include "test_helpers.hpp"

using namespace d2tf;
namespace th = d2tf::testing;

namespace {

struct FrozenRow {
    int n, edges;
    std::vector<std::pair<int, int>> degrees;
    GirthClass girth;
    std::uint64_t aut;  // 0 when the row has several graphs
    int orbits;
};

// Reference census for (2,3)-witnesses up to 13 vertices, single-graph rows
// carrying the symmetry columns.
const std::vector<FrozenRow>& frozen_census() {
    static const std::vector<FrozenRow> rows = {
        {4, 4, {{2, 4}}, GirthClass::four, 8, 1},
        {5, 5, {{2, 5}}, GirthClass::five, 10, 1},
        {6, 7, {{2, 4}, {3, 2}}, GirthClass::four, 4, 3},
        {7, 9, {{2, 4}, {3, 2}, {4, 1}}, GirthClass::four, 8, 3},
        {8, 12, {{3, 8}}, GirthClass::four, 16, 1},
        {9, 14, {{3, 8}, {4, 1}}, GirthClass::four, 8, 3},
        {10, 15, {{3, 10}}, GirthClass::five, 120, 1},
        {10, 17, {{3, 6}, {4, 4}}, GirthClass::four, 4, 4},
        {11, 19, {{3, 6}, {4, 5}}, GirthClass::four, 24, 3},
        {11, 20, {{3, 5}, {4, 5}, {5, 1}}, GirthClass::four, 10, 3},
        {12, 23, {{3, 3}, {4, 8}, {5, 1}}, GirthClass::four, 12, 4},
        {12, 24, {{4, 12}}, GirthClass::four, 48, 1},
        {13, 24, {{3, 4}, {4, 9}}, GirthClass::four, 48, 3},
        {13, 26, {{4, 13}}, GirthClass::four, 52, 1},
        {13, 27, {{3, 1}, {4, 9}, {5, 3}}, GirthClass::four, 12, 4},
    };
    return rows;
}

void check_against_frozen(const SearchResult& res, int n_max) {
    std::size_t expected_rows = 0;
    for (const auto& fr : frozen_census()) {
        if (fr.n > n_max) continue;
        ++expected_rows;
        bool found = false;
        for (const auto& row : res.census) {
            if (row.n != fr.n || row.edges != fr.edges) continue;
            found = true;
            CHECK(row.degrees == fr.degrees);
            CHECK(row.girth == fr.girth);
            CHECK(row.count == 1);
            CHECK(row.aut_min == fr.aut);
            CHECK(row.aut_max == fr.aut);
            CHECK(row.orbit_min == fr.orbits);
            CHECK(row.orbit_max == fr.orbits);
        }
        CHECK(found);
    }
    CHECK(res.census.size() == expected_rows);
}

}  // namespace

TEST_CASE("census to ten vertices") {
    SearchConfig cfg;
    cfg.n_max = 10;
    const auto res = enumerate_witnesses(cfg);
    CHECK(res.counts_per_order ==
          std::vector<int>{0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2});
    check_against_frozen(res, 10);
    CHECK(res.theorem_violations == 0);

    // Isomorph-freeness and witness-ness of everything emitted.
    std::set<std::string> forms;
    for (const auto& w : res.witnesses) {
        CHECK(forms.insert(w.graph6).second);
        const Graph g = from_graph6(w.graph6);
        const auto rep = witness_report(g, 2, 3);
        CHECK(rep.is_witness);
        // (2,3)-witnesses: non-adjacent co-degrees are exactly 1 or 2.
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (!g.adjacent(u, v)) {
                    const int c = g.codegree(u, v);
                    CHECK(c >= 1);
                    CHECK(c <= 2);
                }
    }

    // The known members appear.
    const auto has_form = [&](const Graph& g) {
        return std::any_of(res.witnesses.begin(), res.witnesses.end(),
                           [&](const WitnessRecord& w) {
                               return w.graph6 == canonical_form(g);
                           });
    };
    CHECK(has_form(named_graph("c4")));
    CHECK(has_form(named_graph("c5")));
    CHECK(has_form(named_graph("subdivided_k23")));
    CHECK(has_form(named_graph("mobius8")));
    CHECK(has_form(named_graph("petersen")));
}

TEST_CASE("determinism across runs and worker counts") {
    SearchConfig cfg;
    cfg.n_max = 9;
    const auto a = enumerate_witnesses(cfg);
    const auto b = enumerate_witnesses(cfg);
    cfg.workers = 3;
    const auto c = enumerate_witnesses(cfg);
    const auto forms = [](const SearchResult& r) {
        std::vector<std::string> out;
        for (const auto& w : r.witnesses) out.push_back(w.graph6);
        return out;
    };
    CHECK(forms(a) == forms(b));
    CHECK(forms(a) == forms(c));
    CHECK(a.counts_per_order == c.counts_per_order);
}

namespace {

// Exhaustive pass over all 2^C(n,2) labeled graphs with raw popcount
// filters, independent of the library's predicates and of the augmentation
// machinery. Returns the canonical forms of all (2,3)-witness classes.
std::set<std::string> mask_oracle_witnesses(int n) {
    const int npairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::set<std::string> forms;
    for (std::uint32_t mask = 0; mask < (1u << npairs); ++mask) {
        std::uint32_t adj[8] = {0};
        for (int i = 0; i < npairs; ++i)
            if (mask >> i & 1) {
                adj[pairs[i].first] |= 1u << pairs[i].second;
                adj[pairs[i].second] |= 1u << pairs[i].first;
            }
        bool ok = true;
        int max_deg = 0;
        for (int u = 0; u < n && ok; ++u) {
            max_deg = std::max(max_deg, std::popcount(adj[u]));
            for (int v = u + 1; v < n && ok; ++v) {
                const int common = std::popcount(adj[u] & adj[v]);
                if (adj[u] >> v & 1) {
                    if (common > 0) ok = false;  // triangle
                } else {
                    if (common == 0 || common > 2) ok = false;  // diameter / K_{2,3}
                }
            }
        }
        if (!ok || max_deg == n - 1) continue;  // stars (and K1/K2 cannot occur: n >= 4)
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < npairs; ++i)
            if (mask >> i & 1) edges.push_back(pairs[i]);
        const Graph g(n, edges);
        REQUIRE(witness_report(g, 2, 3).is_witness);
        forms.insert(canonical_form(g));
    }
    return forms;
}

// Vertex-by-vertex labeled enumeration with the hereditary constraints
// re-derived from scratch, connectivity and witness filters at the end.
std::set<std::string> recursive_oracle_witnesses(int n) {
    std::set<std::string> forms;
    GraphBuilder b(n);
    std::vector<std::vector<int>> chosen(n);
    const std::function<void(int)> rec_vertex = [&](int v) {
        if (v == n) {
            const Graph g = b.build();
            if (witness_report(g, 2, 3).is_witness) forms.insert(canonical_form(g));
            return;
        }
        const std::function<void(int)> rec_nbhd = [&](int from) {
            rec_vertex(v + 1);
            for (int u = from; u < v; ++u) {
                bool feasible = true;
                for (int w : chosen[v])
                    if (b.adjacent(u, w) || b.codegree(u, w) > 1) {
                        feasible = false;
                        break;
                    }
                if (feasible) {
                    const BitRow& nu = b.neighbours(u);
                    for (int x = nu.first_set(1); x >= 0; x = nu.next_set(x, 1)) {
                        int hits = 0;
                        for (int w : chosen[v])
                            if (b.adjacent(x, w)) ++hits;
                        if (hits >= 2) {
                            feasible = false;
                            break;
                        }
                    }
                }
                if (!feasible) continue;
                chosen[v].push_back(u);
                b.add_edge(u, v);
                rec_nbhd(u + 1);
                b.remove_edge(u, v);
                chosen[v].pop_back();
            }
        };
        rec_nbhd(0);
    };
    rec_vertex(0);
    return forms;
}

}  // namespace

TEST_CASE("augmentation agrees with independent oracles to n = 8") {
    for (int n = 4; n <= 8; ++n) {
        SearchConfig cfg;
        cfg.n_max = n;
        const auto res = enumerate_witnesses(cfg);
        std::set<std::string> got;
        for (const auto& w : res.witnesses)
            if (w.n == n) got.insert(w.graph6);
        if (n <= 7) CHECK(got == mask_oracle_witnesses(n));
        CHECK(got == recursive_oracle_witnesses(n));
    }
}

TEST_CASE("edge rotations") {
    const Graph pet = named_graph("petersen");
    for (const auto& h : edge_rotation_neighbors(pet, 2, 3)) {
        CHECK(witness_report(h, 2, 3).is_witness);
        // Reversibility: rotating back reaches the original class.
        bool back = false;
        for (const auto& back_graph : edge_rotation_neighbors(h, 2, 3))
            if (canonical_form(back_graph) == canonical_form(pet)) back = true;
        CHECK(back);
    }
}

TEST_CASE("ryser switches") {
    const Graph grz = named_graph("groetzsch");
    const auto neighbors = ryser_switch_neighbors(grz, 2, 3);
    for (const auto& h : neighbors) {
        CHECK(witness_report(h, 2, 3).is_witness);
        CHECK(degree_multiset(h) == degree_multiset(grz));
    }
    CHECK(ryser_switch_neighbors(th::cycle(4), 2, 3).size() <= 1);
    CHECK(ryser_switch_neighbors(Graph(5, {{0, 1}}), 2, 3).empty());
}

TEST_CASE("closure basics") {
    ClosureOptions opts;
    const auto c4_closure = closure({named_graph("c4")}, opts);
    CHECK(c4_closure.members.size() == 1);
    CHECK_FALSE(c4_closure.truncated);

    ClosureOptions induced_only;
    induced_only.rotations = false;
    induced_only.switches = false;
    const auto pet_closure = closure({named_graph("petersen")}, induced_only);
    for (const auto& [form, g] : pet_closure.members)
        CHECK(witness_report(g, 2, 3).is_witness);

    CHECK_THROWS(closure({th::cycle(6)}, opts));  // seeds must be witnesses

    ClosureOptions tight;
    tight.max_graphs = 1;
    const auto truncated = closure({named_graph("c5")}, tight);
    CHECK(truncated.members.size() <= 1);
}
