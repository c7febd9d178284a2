#include "d2tf/search.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "d2tf/canonical.hpp"
#include "d2tf/graph6.hpp"

namespace d2tf {

std::vector<std::pair<int, int>> degree_multiset(const Graph& g) {
    auto degs = g.degrees();
    std::sort(degs.begin(), degs.end());
    std::vector<std::pair<int, int>> out;
    for (int d : degs) {
        if (!out.empty() && out.back().first == d)
            ++out.back().second;
        else
            out.emplace_back(d, 1);
    }
    return out;
}

namespace {

struct Collector {
    std::vector<WitnessRecord> witnesses;
    std::uint64_t nodes = 0;
    std::uint64_t violations = 0;

    void merge(Collector&& other) {
        witnesses.insert(witnesses.end(), std::make_move_iterator(other.witnesses.begin()),
                         std::make_move_iterator(other.witnesses.end()));
        nodes += other.nodes;
        violations += other.violations;
    }
};

// Vertices removable without disconnecting the graph.
std::vector<bool> non_cut_vertices(const Graph& g) {
    const int n = g.order();
    std::vector<bool> ok(n, false);
    if (n == 1) {
        ok[0] = true;
        return ok;
    }
    for (int v = 0; v < n; ++v) {
        std::vector<int> keep;
        keep.reserve(n - 1);
        for (int u = 0; u < n; ++u)
            if (u != v) keep.push_back(u);
        ok[v] = is_connected(induced_subgraph(g, keep));
    }
    return ok;
}

class Searcher {
public:
    Searcher(const SearchConfig& cfg) : cfg_(cfg) {
        if (cfg.n_max < 1 || cfg.n_max > 20)
            throw std::invalid_argument("exhaustive search supports n_max <= 20");
        if (cfg.s < 2 || cfg.s > cfg.t)
            throw std::invalid_argument("search requires 2 <= s <= t");
        if (cfg.s > 4) throw std::invalid_argument("search supports s <= 4 only");
    }

    SearchResult run() {
        Collector all;
        const Graph root(1);
        process_accepted(root, canonicalize_full(root), all);
        if (cfg_.workers <= 1) {
            explore(root, all);
        } else {
            // Split the augmentation tree at a shallow frontier and hand the
            // subtrees to a worker pool; merging is commutative.
            const int split_order = std::min(std::max(cfg_.n_max - 2, 2), 8);
            std::vector<Graph> frontier;
            collect_frontier(root, split_order, all, frontier);
            std::atomic<std::size_t> next{0};
            std::mutex merge_mutex;
            std::vector<std::thread> pool;
            for (int w = 0; w < cfg_.workers; ++w)
                pool.emplace_back([&] {
                    Collector local;
                    while (true) {
                        const std::size_t i = next.fetch_add(1);
                        if (i >= frontier.size()) break;
                        explore(frontier[i], local);
                    }
                    std::lock_guard<std::mutex> lock(merge_mutex);
                    all.merge(std::move(local));
                });
            for (auto& th : pool) th.join();
        }
        return finalize(std::move(all));
    }

private:
    SearchConfig cfg_;

    SearchResult finalize(Collector&& all) {
        SearchResult res;
        res.nodes_explored = all.nodes;
        res.theorem_violations = all.violations;
        res.witnesses = std::move(all.witnesses);
        std::sort(res.witnesses.begin(), res.witnesses.end(),
                  [](const WitnessRecord& a, const WitnessRecord& b) {
                      return std::tie(a.n, a.graph6) < std::tie(b.n, b.graph6);
                  });
        // Top-order children skip the canonical-parent filter, so the same
        // class can arrive from several parents (and several workers).
        res.witnesses.erase(std::unique(res.witnesses.begin(), res.witnesses.end(),
                                        [](const WitnessRecord& a, const WitnessRecord& b) {
                                            return a.n == b.n && a.graph6 == b.graph6;
                                        }),
                            res.witnesses.end());
        res.census = census_rows(res.witnesses);
        res.counts_per_order.assign(cfg_.n_max + 1, 0);
        for (const auto& w : res.witnesses) ++res.counts_per_order[w.n];
        return res;
    }

    // No vertex of a witness on n <= n_max vertices exceeds this degree:
    // counting common neighbours around a vertex of degree D gives
    // D (min_deg - 1) <= (t-1)(n-1-D) with min_deg >= 2 for non-stars.
    int degree_cap() const {
        if (cfg_.s != 2) return kMaxVertices;
        return (cfg_.t - 1) * (cfg_.n_max - 1) / cfg_.t;
    }

    // All valid neighborhoods for a new vertex: nonempty independent sets
    // whose insertion keeps the graph triangle-free and K_{s,t}-free.
    void candidate_neighborhoods(const Graph& g, std::vector<std::vector<int>>& out) {
        const int n = g.order(), nw = g.words();
        std::vector<int> chosen;
        std::vector<int> hit(n, 0);  // |N ∩ N(x)| per vertex
        const int cap = cfg_.t - 1;  // co-degree cap for s = 2
        const int deg_cap = degree_cap();

        const std::function<void(int)> rec = [&](int from) {
            if (static_cast<int>(chosen.size()) >= deg_cap) return;
            for (int u = from; u < n; ++u) {
                bool feasible = g.degree(u) < deg_cap;
                for (int a : chosen)
                    if (!feasible || g.adjacent(a, u)) {
                        feasible = false;
                        break;
                    }
                if (feasible && cfg_.s == 2) {
                    for (int a : chosen)
                        if (g.codegree(a, u) > cap - 1) {
                            feasible = false;
                            break;
                        }
                    if (feasible) {
                        const BitRow& nu = g.neighbours(u);
                        for (int x = nu.first_set(nw); x >= 0; x = nu.next_set(x, nw))
                            if (hit[x] + 1 > cap) {
                                feasible = false;
                                break;
                            }
                    }
                }
                if (!feasible) continue;
                chosen.push_back(u);
                const BitRow& nu = g.neighbours(u);
                for (int x = nu.first_set(nw); x >= 0; x = nu.next_set(x, nw)) ++hit[x];
                out.push_back(chosen);
                rec(u + 1);
                for (int x = nu.first_set(nw); x >= 0; x = nu.next_set(x, nw)) --hit[x];
                chosen.pop_back();
            }
        };
        rec(0);
    }

    Graph extend(const Graph& g, const std::vector<int>& nbhd) {
        GraphBuilder b(g.order() + 1);
        for (int u = 0; u < g.order(); ++u)
            for (int v = g.neighbours(u).next_set(u, g.words()); v >= 0;
                 v = g.neighbours(u).next_set(v, g.words()))
                b.add_edge(u, v);
        for (int u : nbhd) b.add_edge(u, g.order());
        return std::move(b).build();
    }

    // Canonical-augmentation acceptance: the new vertex must lie in the
    // automorphism orbit of the canonically chosen deletable vertex.
    bool augmentation_canonical(const Graph& h, const CanonicalResult& cr) {
        const auto ok = non_cut_vertices(h);
        int chosen = -1, chosen_pos = h.order();
        for (int v = 0; v < h.order(); ++v)
            if (ok[v] && cr.labeling[v] < chosen_pos) {
                chosen = v;
                chosen_pos = cr.labeling[v];
            }
        return cr.orbit[h.order() - 1] == cr.orbit[chosen];
    }

    void process_accepted(const Graph& g, const CanonicalResult& cr, Collector& col) {
        ++col.nodes;
        if (g.order() < 4) return;
        if (!has_diameter_at_most_two(g) || is_star(g)) return;
        WitnessRecord rec;
        rec.n = g.order();
        rec.graph6 = cr.form;
        rec.edges = g.edge_count();
        rec.degrees = degree_multiset(g);
        rec.girth = girth_class(g);
        rec.aut_order = cr.aut_order;
        rec.orbit_count = cr.orbit_count;
        if (cfg_.verify_theorems) {
            if (!check_degree_bound(g, cfg_.t)) ++col.violations;
            if (!check_degree_sum_inequalities(g, cfg_.t).holds) ++col.violations;
            if (!max_degree_floor(g)) ++col.violations;
        }
        col.witnesses.push_back(std::move(rec));
    }

    void for_each_child(const Graph& g, const std::function<void(Graph&&, const CanonicalResult&)>& fn) {
        std::vector<std::vector<int>> candidates;
        candidate_neighborhoods(g, candidates);
        std::set<std::string> seen;
        // Children at the top order never recurse, so the canonical-parent
        // filter is unnecessary there; reject non-witnesses before paying
        // for a canonical form (isomorph duplicates are dropped at merge).
        const bool top_order = g.order() + 1 == cfg_.n_max;
        for (const auto& nbhd : candidates) {
            Graph h = extend(g, nbhd);
            if (cfg_.s != 2 && has_kst(h, cfg_.s, cfg_.t)) continue;
            if (top_order && (!has_diameter_at_most_two(h) || is_star(h))) continue;
            const auto cr = canonicalize_full(h);
            if (!seen.insert(cr.form).second) continue;
            if (!top_order && !augmentation_canonical(h, cr)) continue;
            fn(std::move(h), cr);
        }
    }

    void explore(const Graph& g, Collector& col) {
        if (g.order() >= cfg_.n_max) return;
        for_each_child(g, [&](Graph&& h, const CanonicalResult& cr) {
            process_accepted(h, cr, col);
            explore(h, col);
        });
    }

    void collect_frontier(const Graph& g, int split_order, Collector& col,
                          std::vector<Graph>& frontier) {
        if (g.order() >= cfg_.n_max) return;
        for_each_child(g, [&](Graph&& h, const CanonicalResult& cr) {
            process_accepted(h, cr, col);
            if (h.order() == split_order)
                frontier.push_back(std::move(h));
            else
                collect_frontier(h, split_order, col, frontier);
        });
    }
};

}  // namespace

SearchResult enumerate_witnesses(const SearchConfig& cfg) { return Searcher(cfg).run(); }

std::vector<CensusRow> census_rows(const std::vector<WitnessRecord>& records) {
    std::map<std::tuple<int, int, std::vector<std::pair<int, int>>, int>, CensusRow> rows;
    for (const auto& w : records) {
        auto key = std::make_tuple(w.n, w.edges, w.degrees, static_cast<int>(w.girth));
        auto it = rows.find(key);
        if (it == rows.end()) {
            CensusRow row;
            row.n = w.n;
            row.edges = w.edges;
            row.degrees = w.degrees;
            row.girth = w.girth;
            row.aut_min = row.aut_max = w.aut_order;
            row.orbit_min = row.orbit_max = w.orbit_count;
            row.count = 1;
            rows.emplace(std::move(key), std::move(row));
        } else {
            CensusRow& row = it->second;
            row.aut_min = std::min(row.aut_min, w.aut_order);
            row.aut_max = std::max(row.aut_max, w.aut_order);
            row.orbit_min = std::min(row.orbit_min, w.orbit_count);
            row.orbit_max = std::max(row.orbit_max, w.orbit_count);
            ++row.count;
        }
    }
    std::vector<CensusRow> out;
    for (auto& [key, row] : rows) out.push_back(std::move(row));
    return out;
}

std::vector<Graph> edge_rotation_neighbors(const Graph& g, int s, int t) {
    const int n = g.order(), nw = g.words();
    std::map<std::string, Graph> reps;
    for (int u = 0; u < n; ++u) {
        const BitRow& nu = g.neighbours(u);
        for (int v = nu.first_set(nw); v >= 0; v = nu.next_set(v, nw))
            for (int w = 0; w < n; ++w) {
                if (w == u || w == v || g.adjacent(u, w)) continue;
                Graph h = g.without_edge(u, v).with_edge(u, w);
                const auto rep = witness_report(h, s, t);
                if (!rep.is_witness) continue;
                reps.emplace(canonical_form(h), std::move(h));
            }
    }
    std::vector<Graph> out;
    for (auto& [form, h] : reps) out.push_back(std::move(h));
    return out;
}

std::vector<Graph> ryser_switch_neighbors(const Graph& g, int s, int t) {
    const int n = g.order(), nw = g.words();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = g.neighbours(u).next_set(u, nw); v >= 0; v = g.neighbours(u).next_set(v, nw))
            edges.emplace_back(u, v);
    std::map<std::string, Graph> reps;
    const auto consider = [&](int u, int v, int w, int x) {
        // removes uv, wx; inserts uw, vx
        if (g.adjacent(u, w) || g.adjacent(v, x)) return;
        Graph h = g.without_edge(u, v).without_edge(w, x).with_edge(u, w).with_edge(v, x);
        const auto rep = witness_report(h, s, t);
        if (!rep.is_witness) return;
        reps.emplace(canonical_form(h), std::move(h));
    };
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto [u, v] = edges[i];
            const auto [w, x] = edges[j];
            if (u == w || u == x || v == w || v == x) continue;
            consider(u, v, w, x);
            consider(u, v, x, w);
            consider(v, u, w, x);
            consider(v, u, x, w);
        }
    std::vector<Graph> out;
    for (auto& [form, h] : reps) out.push_back(std::move(h));
    return out;
}

ClosureResult closure(const std::vector<Graph>& seeds, const ClosureOptions& opts) {
    ClosureResult res;
    std::deque<std::string> queue;
    const auto offer = [&](Graph&& g) {
        if (res.members.size() >= opts.max_graphs) {
            res.truncated = true;
            return;
        }
        std::string form = canonical_form(g);
        if (res.members.contains(form)) return;
        queue.push_back(form);
        res.members.emplace(std::move(form), std::move(g));
    };

    for (const Graph& g : seeds) {
        if (!witness_report(g, opts.s, opts.t).is_witness)
            throw std::invalid_argument("closure seeds must be witnesses");
        offer(Graph(g));
    }

    std::uint64_t expansions = 0;
    while (!queue.empty()) {
        if (++expansions > opts.max_expansions) {
            res.truncated = true;
            break;
        }
        const Graph g = res.members.at(queue.front());
        queue.pop_front();
        if (opts.rotations)
            for (auto& h : edge_rotation_neighbors(g, opts.s, opts.t)) offer(std::move(h));
        if (opts.switches)
            for (auto& h : ryser_switch_neighbors(g, opts.s, opts.t)) offer(std::move(h));
        if (opts.induced_subgraphs && g.order() > 1)
            for (int v = 0; v < g.order(); ++v) {
                std::vector<int> keep;
                for (int u = 0; u < g.order(); ++u)
                    if (u != v) keep.push_back(u);
                Graph h = induced_subgraph(g, keep);
                if (witness_report(h, opts.s, opts.t).is_witness) offer(std::move(h));
            }
    }
    return res;
}

}  // namespace d2tf
