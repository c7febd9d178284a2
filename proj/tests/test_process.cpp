#include <doctest.h>

#include <cmath>

#include "d2tf/constructions.hpp"
#include "d2tf/graph6.hpp"
#include "d2tf/incremental.hpp"
#include "d2tf/process.hpp"
#include "test_helpers.hpp"

using namespace d2tf;
namespace th = d2tf::testing;

TEST_CASE("small processes saturate into maximal triangle-free graphs") {
    // K_{3,4} does not fit in 4 vertices, so only the triangle rule binds.
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto trace = run_process(4, 3, 4, seed);
        CHECK(trace.saturated);
        CHECK(is_triangle_free(trace.final_graph));
        CHECK(is_edge_maximal_triangle_free(trace.final_graph));
    }
}

TEST_CASE("final graphs stay in the class and certificates re-verify") {
    for (auto [s, t] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}}) {
        for (std::uint64_t seed = 100; seed < 110; ++seed) {
            const auto trace = run_process(30, s, t, seed);
            const Graph& g = trace.final_graph;
            CHECK(is_triangle_free(g));
            CHECK_FALSE(has_kst(g, s, t));
            CHECK(trace.saturated);
            CHECK(static_cast<int>(trace.accepted.size()) == g.edge_count());
            CHECK(trace.accepted.size() + trace.rejected_count == 30u * 29 / 2);

            // Independent re-verification of every certificate entry.
            std::size_t nonedges = 0;
            for (int u = 0; u < 30; ++u)
                for (int v = u + 1; v < 30; ++v)
                    if (!g.adjacent(u, v)) ++nonedges;
            CHECK(trace.certificate.size() == nonedges);
            for (const auto& blocked : trace.certificate) {
                const Graph h = g.with_edge(blocked.u, blocked.v);
                if (blocked.triangle) {
                    const auto [a, b, c] = blocked.triangle->vertices;
                    CHECK(h.adjacent(a, b));
                    CHECK(h.adjacent(b, c));
                    CHECK(h.adjacent(a, c));
                } else {
                    REQUIRE(blocked.biclique.has_value());
                    CHECK(blocked.biclique->side_s.size() == static_cast<std::size_t>(s));
                    CHECK(blocked.biclique->side_t.size() == static_cast<std::size_t>(t));
                    for (int x : blocked.biclique->side_s)
                        for (int y : blocked.biclique->side_t) CHECK(h.adjacent(x, y));
                }
            }
        }
    }
}

TEST_CASE("prefix graphs stay in the class") {
    const auto trace = run_process(40, 2, 3, 7);
    const int m = static_cast<int>(trace.accepted.size());
    for (int checkpoint = 1; checkpoint <= 10; ++checkpoint) {
        const int take = m * checkpoint / 10;
        GraphBuilder b(40);
        for (int i = 0; i < take; ++i) b.add_edge(trace.accepted[i].first, trace.accepted[i].second);
        const Graph g = std::move(b).build();
        CHECK(is_triangle_free(g));
        CHECK_FALSE(has_kst(g, 2, 3));
    }
}

TEST_CASE("determinism") {
    const auto a = run_process(25, 2, 3, 12345);
    const auto b = run_process(25, 2, 3, 12345);
    CHECK(a.permutation_id == b.permutation_id);
    CHECK(a.accepted == b.accepted);
    CHECK(a.final_graph == b.final_graph);
    const auto c = run_process(25, 2, 3, 54321);
    CHECK(a.permutation_id != c.permutation_id);
}

TEST_CASE("connectivity and edge-count floor for (2,3)") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto trace = run_process(20, 2, 3, seed);
        CHECK(is_connected(trace.final_graph));
        CHECK(trace.final_graph.edge_count() >= 19);
    }
}

TEST_CASE("threshold and uncovered-pair formulas") {
    CHECK(diameter2_threshold(100) == doctest::Approx(1517.427).epsilon(1e-5));
    CHECK(diameter2_threshold(2) == doctest::Approx(1.66511).epsilon(1e-4));
    CHECK(diameter2_threshold(1000) > diameter2_threshold(999));

    CHECK(expected_uncovered_pairs(100, diameter2_threshold(100)) == doctest::Approx(0.5));
    CHECK(expected_uncovered_pairs(100, 0) == doctest::Approx(5000.0));
    CHECK(expected_uncovered_pairs(100, 1000) == doctest::Approx(5000.0 * std::exp(-4.0)));
}

namespace {

// Reference: largest diameter-2 induced subgraph by scanning all 2^n subsets.
int brute_force_probe(const Graph& g) {
    const int n = g.order();
    int best = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) verts.push_back(v);
        if (static_cast<int>(verts.size()) <= best) continue;
        const Graph h = induced_subgraph(g, verts);
        const auto d = diameter(h);
        if (d.has_value() && *d <= 2) best = static_cast<int>(verts.size());
    }
    return best;
}

}  // namespace

TEST_CASE("probe on known graphs") {
    const auto pet = max_diameter2_subgraph(named_graph("petersen"));
    CHECK(pet.exact);
    CHECK(pet.order == 10);

    const auto hex = max_diameter2_subgraph(th::cycle(6));
    CHECK(hex.exact);
    CHECK(hex.order == 3);
}

TEST_CASE("probe matches subset brute force up to 12 vertices") {
    Rng rng(2026);
    for (int iter = 0; iter < 50; ++iter) {
        const int n = 4 + static_cast<int>(rng.below(9));
        const Graph g = th::random_graph(n, 100 + static_cast<int>(rng.below(500)), rng);
        const auto probe = max_diameter2_subgraph(g);
        REQUIRE(probe.exact);
        CHECK(probe.order == brute_force_probe(g));
        const Graph h = induced_subgraph(g, probe.vertices);
        const auto d = diameter(h);
        CHECK(d.has_value());
        CHECK(*d <= 2);
    }
}

TEST_CASE("heuristic probe is a lower bound and respects the result invariant") {
    Rng rng(31337);
    for (int iter = 0; iter < 20; ++iter) {
        const int n = 8 + static_cast<int>(rng.below(5));
        const Graph g = th::random_graph(n, 150 + static_cast<int>(rng.below(400)), rng);
        ProbeOptions heuristic;
        heuristic.exact_limit = 0;
        const auto lower = max_diameter2_subgraph(g, heuristic);
        CHECK_FALSE(lower.exact);
        const auto exact = max_diameter2_subgraph(g);
        REQUIRE(exact.exact);
        CHECK(lower.order <= exact.order);
        CHECK(lower.order >= 1);
        const Graph h = induced_subgraph(g, lower.vertices);
        CHECK(diameter(h).value_or(99) <= 2);
    }
}

TEST_CASE("experiment aggregation") {
    const auto sum = experiment(30, 2, 3, 8, 99, 2);
    CHECK(sum.per_trial.size() == 8);
    CHECK(sum.all_saturated);
    CHECK(sum.edges_min <= sum.edges_max);
    CHECK(sum.edges_mean >= sum.edges_min);
    CHECK(sum.probe_max >= 1);
    for (const auto& ts : sum.per_trial) {
        CHECK(ts.saturated);
        CHECK(ts.edges_over_mstar > 0);
    }
    const auto again = experiment(30, 2, 3, 8, 99, 1);
    for (int i = 0; i < 8; ++i) {
        CHECK(sum.per_trial[i].permutation_id == again.per_trial[i].permutation_id);
        CHECK(sum.per_trial[i].edges == again.per_trial[i].edges);
        CHECK(sum.per_trial[i].probe_order == again.per_trial[i].probe_order);
        CHECK(sum.per_trial[i].final_graph6 == again.per_trial[i].final_graph6);
    }
}

TEST_CASE("incremental structure finders") {
    // K_{2,3} through a specific edge.
    Graph g = th::complete_bipartite(2, 3);
    auto b = find_kst_through(g, 0, 2, 2, 3);
    REQUIRE(b.has_value());
    for (int x : b->side_s)
        for (int y : b->side_t) CHECK(g.adjacent(x, y));

    // No K_{2,3} once an edge is gone.
    CHECK_FALSE(find_kst_through(g.without_edge(0, 2), 0, 3, 2, 3).has_value());

    const Graph tri = th::complete(3);
    const auto t = find_triangle_through(tri, 0, 1);
    REQUIRE(t.has_value());
    CHECK(t->vertices[2] == 2);
}
