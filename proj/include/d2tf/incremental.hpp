#ifndef D2TF_INCREMENTAL_HPP
#define D2TF_INCREMENTAL_HPP

#include <optional>
#include <stdexcept>

#include "d2tf/graph.hpp"
#include "d2tf/properties.hpp"

namespace d2tf {

// Incremental structure tests used by edge-by-edge processes. Both assume
// the edge uv is already present in g and look only at structures that use
// that edge, which is exhaustive when the graph without uv was free of the
// structure. G may be a Graph or a GraphBuilder.

template <class G>
std::optional<Triangle> find_triangle_through(const G& g, int u, int v) {
    BitRow common = g.neighbours(u);
    common.and_with(g.neighbours(v), g.words());
    const int w = common.first_set(g.words());
    if (w < 0) return std::nullopt;
    return Triangle{{u, v, w}};
}

namespace detail {

template <class G>
std::optional<Biclique> kst_with_u_in_small_side(const G& g, int u, int v, int s, int t) {
    const int nw = g.words();
    // Remaining s-side vertices are neighbours of v other than u.
    std::vector<int> cand = row_to_vector(g.neighbours(v), nw);
    std::erase(cand, u);
    std::vector<int> side(1, u);
    const auto emit = [&](const BitRow& common) -> std::optional<Biclique> {
        if (common.count(nw) < t) return std::nullopt;
        std::vector<int> side_t{v};
        for (int x = common.first_set(nw);
             x >= 0 && static_cast<int>(side_t.size()) < t; x = common.next_set(x, nw))
            if (x != v) side_t.push_back(x);
        return Biclique{side, side_t};
    };
    if (s == 1) return emit(g.neighbours(u));
    const int m = static_cast<int>(cand.size());
    for (int i = 0; i < m; ++i) {
        BitRow r1 = g.neighbours(u);
        r1.and_with(g.neighbours(cand[i]), nw);
        if (r1.count(nw) < t) continue;
        if (s == 2) {
            side = {u, cand[i]};
            if (auto b = emit(r1)) return b;
            continue;
        }
        for (int j = i + 1; j < m; ++j) {
            BitRow r2 = r1;
            r2.and_with(g.neighbours(cand[j]), nw);
            if (r2.count(nw) < t) continue;
            if (s == 3) {
                side = {u, cand[i], cand[j]};
                if (auto b = emit(r2)) return b;
                continue;
            }
            for (int l = j + 1; l < m; ++l) {
                BitRow r3 = r2;
                r3.and_with(g.neighbours(cand[l]), nw);
                side = {u, cand[i], cand[j], cand[l]};
                if (auto b = emit(r3)) return b;
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

// K_{s,t} whose cross edges include uv: u on the s-side and v on the t-side,
// or the other way around.
template <class G>
std::optional<Biclique> find_kst_through(const G& g, int u, int v, int s, int t) {
    if (s < 1 || s > t) throw std::invalid_argument("find_kst_through requires 1 <= s <= t");
    if (s > 4) throw std::invalid_argument("find_kst_through supports s <= 4 only");
    if (auto b = detail::kst_with_u_in_small_side(g, u, v, s, t)) return b;
    return detail::kst_with_u_in_small_side(g, v, u, s, t);
}

}  // namespace d2tf

#endif
