#ifndef D2TF_PROCESS_HPP
#define D2TF_PROCESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "d2tf/graph.hpp"
#include "d2tf/properties.hpp"

namespace d2tf {

// What blocks the insertion of a non-edge into the final graph.
struct BlockedEdge {
    int u = 0, v = 0;
    std::optional<Triangle> triangle;
    std::optional<Biclique> biclique;
};

// Full record of one constrained {K_3, K_{s,t}}-free process run. The final
// graph equals the empty graph plus the accepted edges, and the certificate
// names a violating structure for every remaining non-edge.
struct ProcessTrace {
    int n = 0, s = 3, t = 4;
    std::uint64_t seed = 0;
    std::uint64_t permutation_id = 0;  // hash of the shuffled edge order
    std::vector<std::pair<int, int>> accepted;
    std::uint64_t rejected_count = 0;
    Graph final_graph{1};
    std::vector<BlockedEdge> certificate;
    bool saturated = false;
};

ProcessTrace run_process(int n, int s, int t, std::uint64_t seed);

// Edge count at which a uniform random graph reaches diameter 2:
// sqrt(n^3 ln(n) / 2).
double diameter2_threshold(int n);

// Heuristic expected number of pairs without a common neighbour at m edges:
// n^2/2 * exp(-4 m^2 / n^3).
double expected_uncovered_pairs(int n, double m);

struct ProbeResult {
    std::vector<int> vertices;
    int order = 0;
    bool exact = false;
};

struct ProbeOptions {
    int exact_limit = 20;
    std::uint64_t node_budget = 20'000'000;
    int heuristic_restarts = 8;
    std::uint64_t heuristic_seed = 1;
};

// Largest induced subgraph of diameter <= 2: exact branch-and-bound on
// violating pairs up to exact_limit vertices (subject to the node budget),
// randomized peeling beyond.
ProbeResult max_diameter2_subgraph(const Graph& g, const ProbeOptions& opts = {});

struct TrialSummary {
    int trial = 0;
    std::uint64_t seed = 0;
    std::uint64_t permutation_id = 0;
    int edges = 0;
    std::uint64_t rejected = 0;
    double edges_over_mstar = 0;
    bool saturated = false;
    int probe_order = 0;
    bool probe_exact = false;
    std::string final_graph6;
};

struct ExperimentSummary {
    int n = 0, s = 3, t = 4, trials = 0;
    std::uint64_t seed = 0;
    int edges_min = 0, edges_max = 0;
    double edges_mean = 0;
    double ratio_mean = 0;  // edges / m*
    int probe_max = 0;
    bool all_saturated = true;
    std::vector<TrialSummary> per_trial;
};

// Independent seeded trials (trial i uses splitmix64(seed ^ i)); aggregation
// is order-independent.
ExperimentSummary experiment(int n, int s, int t, int trials, std::uint64_t seed,
                             int workers = 1, const ProbeOptions& probe = {});

}  // namespace d2tf

#endif
