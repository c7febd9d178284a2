#include "d2tf/process.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "d2tf/graph6.hpp"
#include "d2tf/incremental.hpp"
#include "d2tf/rng.hpp"

namespace d2tf {

ProcessTrace run_process(int n, int s, int t, std::uint64_t seed) {
    if (n < 4 || n > kMaxVertices) throw std::invalid_argument("process requires 4 <= n <= 512");
    if (s < 2 || s > t) throw std::invalid_argument("process requires 2 <= s <= t");
    if (s > 4) throw std::invalid_argument("process supports s <= 4 only");

    ProcessTrace trace;
    trace.n = n;
    trace.s = s;
    trace.t = t;
    trace.seed = seed;

    std::vector<std::pair<int, int>> order;
    order.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) order.emplace_back(u, v);
    Rng rng(seed);
    rng.shuffle(order);

    std::uint64_t h = kFnvBasis;
    for (auto [u, v] : order) h = fnv1a(h, (static_cast<std::uint64_t>(u) << 32) | v);
    trace.permutation_id = h;

    GraphBuilder b(n);
    const int nw = b.words();
    for (auto [u, v] : order) {
        if (b.neighbours(u).intersects(b.neighbours(v), nw)) {
            ++trace.rejected_count;
            continue;
        }
        b.add_edge(u, v);
        if (find_kst_through(b, u, v, s, t)) {
            b.remove_edge(u, v);
            ++trace.rejected_count;
            continue;
        }
        trace.accepted.emplace_back(u, v);
    }
    trace.final_graph = b.build();

    // Refresh the certificate over the final graph: monotonicity keeps every
    // rejection reason valid, so each non-edge must exhibit one now.
    trace.saturated = true;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (b.adjacent(u, v)) continue;
            BlockedEdge blocked;
            blocked.u = u;
            blocked.v = v;
            BitRow common = b.neighbours(u);
            common.and_with(b.neighbours(v), nw);
            const int w = common.first_set(nw);
            if (w >= 0) {
                blocked.triangle = Triangle{{u, v, w}};
            } else {
                b.add_edge(u, v);
                blocked.biclique = find_kst_through(b, u, v, s, t);
                b.remove_edge(u, v);
                if (!blocked.biclique) trace.saturated = false;
            }
            trace.certificate.push_back(std::move(blocked));
        }
    return trace;
}

double diameter2_threshold(int n) {
    if (n < 2) throw std::invalid_argument("threshold needs n >= 2");
    const double nn = n;
    return std::sqrt(0.5 * nn * nn * nn * std::log(nn));
}

double expected_uncovered_pairs(int n, double m) {
    if (n < 2 || m < 0) throw std::invalid_argument("expected_uncovered_pairs needs n >= 2, m >= 0");
    const double nn = n;
    return 0.5 * nn * nn * std::exp(-4.0 * m * m / (nn * nn * nn));
}

namespace {

// First pair in W that is non-adjacent with no common neighbour inside W.
std::optional<std::pair<int, int>> violating_pair(const Graph& g, const BitRow& w, int nw) {
    for (int u = w.first_set(nw); u >= 0; u = w.next_set(u, nw))
        for (int v = w.next_set(u, nw); v >= 0; v = w.next_set(v, nw)) {
            if (g.adjacent(u, v)) continue;
            BitRow common = g.neighbours(u);
            common.and_with(g.neighbours(v), nw);
            common.and_with(w, nw);
            if (!common.any(nw)) return std::pair{u, v};
        }
    return std::nullopt;
}

struct ExactProbe {
    const Graph* g = nullptr;
    int nw = 0;
    std::uint64_t budget = 0;
    std::uint64_t nodes = 0;
    bool aborted = false;
    BitRow best_set;
    int best = 0;

    void rec(BitRow w, int size) {
        if (aborted || size <= best) return;
        if (++nodes > budget) {
            aborted = true;
            return;
        }
        const auto pair = violating_pair(*g, w, nw);
        if (!pair) {
            best = size;
            best_set = w;
            return;
        }
        BitRow wu = w;
        wu.reset(pair->first);
        rec(wu, size - 1);
        BitRow wv = w;
        wv.reset(pair->second);
        rec(wv, size - 1);
    }
};

int count_violations(const Graph& g, const BitRow& w, int nw, std::vector<int>& per_vertex) {
    std::fill(per_vertex.begin(), per_vertex.end(), 0);
    int total = 0;
    for (int u = w.first_set(nw); u >= 0; u = w.next_set(u, nw))
        for (int v = w.next_set(u, nw); v >= 0; v = w.next_set(v, nw)) {
            if (g.adjacent(u, v)) continue;
            BitRow common = g.neighbours(u);
            common.and_with(g.neighbours(v), nw);
            common.and_with(w, nw);
            if (!common.any(nw)) {
                ++per_vertex[u];
                ++per_vertex[v];
                ++total;
            }
        }
    return total;
}

// Peel vertices of maximal violation count (ties: lowest index, or a seeded
// choice among the maxima on randomized restarts) until no violating pair
// remains.
BitRow peel(const Graph& g, Rng* rng) {
    const int n = g.order(), nw = g.words();
    BitRow w;
    for (int v = 0; v < n; ++v) w.set(v);
    std::vector<int> viol(n);
    while (count_violations(g, w, nw, viol) > 0) {
        int max_count = 0;
        for (int v = w.first_set(nw); v >= 0; v = w.next_set(v, nw))
            max_count = std::max(max_count, viol[v]);
        std::vector<int> top;
        for (int v = w.first_set(nw); v >= 0; v = w.next_set(v, nw))
            if (viol[v] == max_count) top.push_back(v);
        const int pick = rng ? top[rng->below(top.size())] : top.front();
        w.reset(pick);
    }
    return w;
}

}  // namespace

ProbeResult max_diameter2_subgraph(const Graph& g, const ProbeOptions& opts) {
    const int n = g.order(), nw = g.words();
    ProbeResult res;
    if (n <= opts.exact_limit) {
        ExactProbe probe;
        probe.g = &g;
        probe.nw = nw;
        probe.budget = opts.node_budget;
        BitRow all;
        for (int v = 0; v < n; ++v) all.set(v);
        probe.rec(all, n);
        if (!probe.aborted) {
            res.exact = true;
            res.order = probe.best;
            res.vertices = row_to_vector(probe.best_set, nw);
            return res;
        }
        // Budget exhausted: fall through to the heuristic, keeping the bound
        // already found.
        res.order = probe.best;
        res.vertices = row_to_vector(probe.best_set, nw);
    }
    res.exact = false;
    BitRow core = peel(g, nullptr);
    if (core.count(nw) > res.order) {
        res.order = core.count(nw);
        res.vertices = row_to_vector(core, nw);
    }
    Rng rng(opts.heuristic_seed);
    for (int r = 1; r < opts.heuristic_restarts; ++r) {
        BitRow w = peel(g, &rng);
        if (w.count(nw) > res.order) {
            res.order = w.count(nw);
            res.vertices = row_to_vector(w, nw);
        }
    }
    return res;
}

ExperimentSummary experiment(int n, int s, int t, int trials, std::uint64_t seed, int workers,
                             const ProbeOptions& probe) {
    if (trials < 1) throw std::invalid_argument("experiment requires trials >= 1");
    ExperimentSummary sum;
    sum.n = n;
    sum.s = s;
    sum.t = t;
    sum.trials = trials;
    sum.seed = seed;
    sum.per_trial.resize(trials);

    const double mstar = diameter2_threshold(n);
    const auto run_trial = [&](int i) {
        const std::uint64_t trial_seed = splitmix64(seed ^ static_cast<std::uint64_t>(i));
        ProcessTrace trace = run_process(n, s, t, trial_seed);
        TrialSummary ts;
        ts.trial = i;
        ts.seed = trial_seed;
        ts.permutation_id = trace.permutation_id;
        ts.edges = static_cast<int>(trace.accepted.size());
        ts.rejected = trace.rejected_count;
        ts.edges_over_mstar = ts.edges / mstar;
        ts.saturated = trace.saturated;
        ProbeOptions po = probe;
        po.heuristic_seed = splitmix64(trial_seed ^ 0x70726f6265ULL);
        const auto pr = max_diameter2_subgraph(trace.final_graph, po);
        ts.probe_order = pr.order;
        ts.probe_exact = pr.exact;
        ts.final_graph6 = to_graph6(trace.final_graph);
        sum.per_trial[i] = std::move(ts);
    };

    if (workers <= 1) {
        for (int i = 0; i < trials; ++i) run_trial(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                while (true) {
                    const int i = next.fetch_add(1);
                    if (i >= trials) break;
                    run_trial(i);
                }
            });
        for (auto& th : pool) th.join();
    }

    sum.edges_min = sum.per_trial.front().edges;
    sum.edges_max = sum.per_trial.front().edges;
    double edge_sum = 0, ratio_sum = 0;
    for (const auto& ts : sum.per_trial) {
        sum.edges_min = std::min(sum.edges_min, ts.edges);
        sum.edges_max = std::max(sum.edges_max, ts.edges);
        edge_sum += ts.edges;
        ratio_sum += ts.edges_over_mstar;
        sum.probe_max = std::max(sum.probe_max, ts.probe_order);
        sum.all_saturated = sum.all_saturated && ts.saturated;
    }
    sum.edges_mean = edge_sum / trials;
    sum.ratio_mean = ratio_sum / trials;
    return sum;
}

}  // namespace d2tf
