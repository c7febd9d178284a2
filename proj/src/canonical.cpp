#include "d2tf/canonical.hpp"

#include <algorithm>
#include <climits>
#include <cstring>
#include <numeric>

#include "d2tf/graph6.hpp"

namespace d2tf {

namespace {

// Ordered partition of the vertex set: `order` lists vertices cell by cell,
// `pos` inverts it, and cell_start[p] gives the start index of the cell
// containing position p.
struct Partition {
    std::vector<int> order;
    std::vector<int> pos;
    std::vector<int> cell_start;

    explicit Partition(int n) : order(n), pos(n), cell_start(n, 0) {
        std::iota(order.begin(), order.end(), 0);
        std::iota(pos.begin(), pos.end(), 0);
    }

    int cell_end(int start) const {
        const int n = static_cast<int>(order.size());
        int e = start + 1;
        while (e < n && cell_start[e] == start) ++e;
        return e;
    }

    bool discrete() const {
        for (int p = 0; p < static_cast<int>(order.size()); ++p)
            if (cell_start[p] != p) return false;
        return true;
    }
};

// Packed upper-triangle adjacency under a candidate labeling; words compare
// lexicographically because bits are packed most-significant first.
using LeafString = std::vector<std::uint64_t>;

class Canonizer {
public:
    explicit Canonizer(const Graph& g)
        : g_(g), n_(g.order()), nw_(g.words()) {}

    CanonicalResult run() {
        Partition root(n_);
        std::vector<int> worklist{0};
        refine(root, worklist);
        descend(root, /*depth=*/0, /*on_first_path=*/true);

        CanonicalResult res;
        res.labeling = best_labeling_;
        res.form = to_graph6(g_.permuted(best_labeling_));
        res.aut_order = aut_order_;
        res.aut_order_exact = !saturated_;
        res.generators = generators_;

        std::vector<int> uf(n_);
        std::iota(uf.begin(), uf.end(), 0);
        for (const auto& gen : generators_)
            for (int v = 0; v < n_; ++v) unite(uf, v, gen[v]);
        res.orbit.resize(n_);
        int count = 0;
        std::vector<int> smallest(n_, -1);
        for (int v = 0; v < n_; ++v) {
            int r = find(uf, v);
            if (smallest[r] < 0) {
                smallest[r] = v;  // v is minimal in its orbit: scan order
                ++count;
            }
            res.orbit[v] = smallest[r];
        }
        res.orbit_count = count;
        return res;
    }

private:
    const Graph& g_;
    int n_, nw_;

    bool have_first_ = false;
    LeafString first_string_;
    std::vector<int> first_labeling_;  // vertex -> position
    std::vector<int> first_order_;     // position -> vertex
    std::vector<int> first_prefix_;

    LeafString best_string_;
    std::vector<int> best_labeling_;
    std::vector<int> best_order_;

    std::vector<std::vector<int>> generators_;
    std::uint64_t aut_order_ = 1;
    bool saturated_ = false;

    int unwind_to_ = INT_MAX;
    std::vector<int> cur_prefix_;

    static int find(std::vector<int>& uf, int v) {
        while (uf[v] != v) {
            uf[v] = uf[uf[v]];
            v = uf[v];
        }
        return v;
    }

    static void unite(std::vector<int>& uf, int a, int b) {
        uf[find(uf, a)] = find(uf, b);
    }

    // Union-find over the generators that fix the current prefix pointwise.
    std::vector<int> prefix_orbits() const {
        std::vector<int> uf(n_);
        std::iota(uf.begin(), uf.end(), 0);
        for (const auto& gen : generators_) {
            bool fixes = true;
            for (int v : cur_prefix_)
                if (gen[v] != v) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) unite(uf, v, gen[v]);
        }
        return uf;
    }

    // Split every cell by neighbour counts into the splitter cell until the
    // partition is equitable. Splitter cells are identified by start index;
    // starts never disappear once created.
    void refine(Partition& pi, std::vector<int>& worklist) {
        std::vector<char> queued(n_, 0);
        for (int s : worklist) queued[s] = 1;
        std::vector<int> counts(n_);
        std::vector<int> bucket_members;
        while (!worklist.empty()) {
            const int ws = worklist.back();
            worklist.pop_back();
            queued[ws] = 0;
            BitRow splitter;
            const int we = pi.cell_end(ws);
            for (int p = ws; p < we; ++p) splitter.set(pi.order[p]);

            for (int s = 0; s < n_;) {
                const int e = pi.cell_end(s);
                if (e - s == 1) {
                    s = e;
                    continue;
                }
                int lo = INT_MAX, hi = INT_MIN;
                for (int p = s; p < e; ++p) {
                    const int c = g_.neighbours(pi.order[p]).count_and(splitter, nw_);
                    counts[pi.order[p]] = c;
                    lo = std::min(lo, c);
                    hi = std::max(hi, c);
                }
                if (lo == hi) {
                    s = e;
                    continue;
                }
                // Stable bucket sort of the cell by count, ascending.
                bucket_members.assign(pi.order.begin() + s, pi.order.begin() + e);
                std::stable_sort(bucket_members.begin(), bucket_members.end(),
                                 [&](int a, int b) { return counts[a] < counts[b]; });
                int p = s;
                for (std::size_t i = 0; i < bucket_members.size(); ++i, ++p) {
                    const int v = bucket_members[i];
                    pi.order[p] = v;
                    pi.pos[v] = p;
                }
                int sub = s;
                for (p = s; p < e; ++p) {
                    if (p > s && counts[pi.order[p]] != counts[pi.order[p - 1]]) sub = p;
                    pi.cell_start[p] = sub;
                }
                for (p = s; p < e; p = pi.cell_end(p))
                    if (!queued[p]) {
                        queued[p] = 1;
                        worklist.push_back(p);
                    }
                s = e;
            }
        }
    }

    Partition individualized(const Partition& pi, int v) {
        Partition child = pi;
        const int s = child.cell_start[child.pos[v]];
        const int vp = child.pos[v];
        std::swap(child.order[s], child.order[vp]);
        child.pos[child.order[vp]] = vp;
        child.pos[v] = s;
        const int e = child.cell_end(s);
        for (int p = s + 1; p < e; ++p) child.cell_start[p] = s + 1;
        std::vector<int> worklist{s};
        refine(child, worklist);
        return child;
    }

    LeafString leaf_string(const Partition& pi) const {
        const long nbits = static_cast<long>(n_) * (n_ - 1) / 2;
        LeafString str((nbits + 63) / 64, 0);
        long k = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j, ++k)
                if (g_.adjacent(pi.order[i], pi.order[j]))
                    str[k >> 6] |= std::uint64_t{1} << (63 - (k & 63));
        return str;
    }

    static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
        int k = 0;
        const int lim = static_cast<int>(std::min(a.size(), b.size()));
        while (k < lim && a[k] == b[k]) ++k;
        return k;
    }

    void add_generator(const std::vector<int>& ref_order, const std::vector<int>& labeling) {
        std::vector<int> perm(n_);
        bool identity = true;
        for (int v = 0; v < n_; ++v) {
            perm[v] = ref_order[labeling[v]];
            if (perm[v] != v) identity = false;
        }
        if (!identity) generators_.push_back(std::move(perm));
    }

    void handle_leaf(const Partition& pi) {
        std::vector<int> labeling(n_), ord(n_);
        for (int p = 0; p < n_; ++p) {
            labeling[pi.order[p]] = p;
            ord[p] = pi.order[p];
        }
        LeafString str = leaf_string(pi);
        if (!have_first_) {
            have_first_ = true;
            first_string_ = str;
            first_labeling_ = labeling;
            first_order_ = ord;
            first_prefix_ = cur_prefix_;
            best_string_ = std::move(str);
            best_labeling_ = std::move(labeling);
            best_order_ = std::move(ord);
            return;
        }
        if (str == first_string_) {
            add_generator(first_order_, labeling);
            unwind_to_ = common_prefix(cur_prefix_, first_prefix_);
            return;
        }
        if (str < best_string_) {
            best_string_ = std::move(str);
            best_labeling_ = std::move(labeling);
            best_order_ = std::move(ord);
            return;
        }
        if (str == best_string_) add_generator(best_order_, labeling);
    }

    void descend(const Partition& pi, int depth, bool on_first_path) {
        if (pi.discrete()) {
            handle_leaf(pi);
            return;
        }
        int target = 0;
        while (pi.cell_end(target) == target + 1) target = pi.cell_end(target);
        const int tend = pi.cell_end(target);
        std::vector<int> members(pi.order.begin() + target, pi.order.begin() + tend);

        std::vector<int> explored;
        std::vector<int> uf;
        std::size_t uf_gen_count = SIZE_MAX;
        for (int v : members) {
            if (!explored.empty()) {
                if (uf_gen_count != generators_.size()) {
                    uf = prefix_orbits();
                    uf_gen_count = generators_.size();
                }
                bool skip = false;
                for (int u : explored)
                    if (find(uf, u) == find(uf, v)) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
            }
            explored.push_back(v);
            Partition child = individualized(pi, v);
            cur_prefix_.push_back(v);
            descend(child, depth + 1, on_first_path && explored.size() == 1);
            cur_prefix_.pop_back();
            if (unwind_to_ < depth) return;
            if (unwind_to_ == depth) unwind_to_ = INT_MAX;
        }

        if (on_first_path) {
            // Orbit-stabilizer step: by now every member of the target cell
            // equivalent to the first child under the prefix stabilizer has
            // been merged into its orbit.
            uf = prefix_orbits();
            const int root = find(uf, explored.front());
            std::uint64_t index = 0;
            for (int v : members)
                if (find(uf, v) == root) ++index;
            if (aut_order_ > UINT64_MAX / index) {
                saturated_ = true;
                aut_order_ = UINT64_MAX;
            } else {
                aut_order_ *= index;
            }
        }
    }
};

}  // namespace

CanonicalResult canonicalize_full(const Graph& g) { return Canonizer(g).run(); }

CanonicalReport canonicalize(const Graph& g) { return canonicalize_full(g).report(); }

std::string canonical_form(const Graph& g) { return canonicalize_full(g).form; }

}  // namespace d2tf
