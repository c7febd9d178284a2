#include "d2tf/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "d2tf/canonical.hpp"
#include "d2tf/graph6.hpp"
#include "d2tf/incremental.hpp"
#include "d2tf/properties.hpp"

namespace d2tf {

namespace {

Graph cycle(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return std::move(b).build();
}

Graph mobius_ladder8() {
    GraphBuilder b(8);
    for (int i = 0; i < 8; ++i) b.add_edge(i, (i + 1) % 8);
    for (int i = 0; i < 4; ++i) b.add_edge(i, i + 4);
    return std::move(b).build();
}

Graph petersen() {
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
        b.add_edge(i, 5 + i);
    }
    return std::move(b).build();
}

Graph groetzsch() {
    // Mycielski construction over C5: shadow vertex 5+i sees the two cycle
    // neighbours of i, apex 10 sees every shadow.
    GraphBuilder b(11);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(5 + i, (i + 1) % 5);
        b.add_edge(5 + i, (i + 4) % 5);
        b.add_edge(5 + i, 10);
    }
    return std::move(b).build();
}

Graph clebsch() {
    // Cayley graph on Z_2^4 with connection set {e1, e2, e3, e4, 1111}.
    GraphBuilder b(16);
    for (int x = 0; x < 16; ++x)
        for (int y = x + 1; y < 16; ++y) {
            const int d = x ^ y;
            if (d == 1 || d == 2 || d == 4 || d == 8 || d == 15) b.add_edge(x, y);
        }
    return std::move(b).build();
}

Graph hoffman_singleton() {
    // Five pentagons P_h and five pentagrams Q_k; P_h(i) ~ Q_k(j) iff
    // j = hk + i (mod 5).
    GraphBuilder b(50);
    const auto P = [](int h, int i) { return 5 * h + i; };
    const auto Q = [](int k, int j) { return 25 + 5 * k + j; };
    for (int h = 0; h < 5; ++h)
        for (int i = 0; i < 5; ++i) {
            b.add_edge(P(h, i), P(h, (i + 1) % 5));
            b.add_edge(Q(h, i), Q(h, (i + 2) % 5));
        }
    for (int h = 0; h < 5; ++h)
        for (int k = 0; k < 5; ++k)
            for (int i = 0; i < 5; ++i) b.add_edge(P(h, i), Q(k, (h * k + i) % 5));
    return std::move(b).build();
}

// srg(56,10,0,2); regenerate with scripts/generate_gewirtz.py.
constexpr const char* kGewirtzG6 =
    "w?????????????????????BK?r??]?@`_E@_AOc?KC_@GK?@T??Ai???l???Sg??S?S?M_A_?t?A_"
    "EA_D?E@_W?K?cH?B?C_o@_?KC_E??Ko?o??r??o??WW@_??@w?W???G`D@GQOPGcGQD?g_cIGHAAI"
    "AQGO_cH@OPO_OcGcGcCCB?d?b?_B?oKCSC?_a_Pa@C?IGGaaAG?PAH@CGo?AHCOGcS??GSaGQCO??"
    "Q`GQC`??AOOhCGc??CGHGaPC???";

constexpr const char* kSubdividedK23G6 = "EMq_";

}  // namespace

Graph named_graph(const std::string& name) {
    if (name == "c4") return cycle(4);
    if (name == "c5") return cycle(5);
    if (name == "subdivided_k23") return from_graph6(kSubdividedK23G6);
    if (name == "mobius8") return mobius_ladder8();
    if (name == "petersen") return petersen();
    if (name == "groetzsch") return groetzsch();
    if (name == "clebsch") return clebsch();
    if (name == "hoffman_singleton") return hoffman_singleton();
    if (name == "gewirtz") return from_graph6(kGewirtzG6);
    throw std::invalid_argument("unknown graph name: " + name);
}

std::vector<std::string> named_graph_names() {
    return {"c4",        "c5",      "subdivided_k23", "mobius8", "petersen",
            "groetzsch", "clebsch", "hoffman_singleton", "gewirtz"};
}

Graph kneser_graph(int n, int k) {
    if (k < 1 || n < 2 * k) throw std::invalid_argument("kneser_graph requires n >= 2k >= 2");
    std::vector<unsigned> subsets;
    std::vector<int> picks(k);
    std::iota(picks.begin(), picks.end(), 0);
    while (true) {
        unsigned mask = 0;
        for (int p : picks) mask |= 1u << p;
        subsets.push_back(mask);
        if (static_cast<int>(subsets.size()) > kMaxVertices)
            throw std::invalid_argument("kneser_graph exceeds the vertex cap");
        int i = k - 1;
        while (i >= 0 && picks[i] == n - k + i) --i;
        if (i < 0) break;
        ++picks[i];
        for (int j = i + 1; j < k; ++j) picks[j] = picks[j - 1] + 1;
    }
    const int m = static_cast<int>(subsets.size());
    GraphBuilder b(m);
    for (int a = 0; a < m; ++a)
        for (int c = a + 1; c < m; ++c)
            if ((subsets[a] & subsets[c]) == 0) b.add_edge(a, c);
    return std::move(b).build();
}

namespace {

Graph two_cycles_plus_matching(int len, const std::vector<int>& matching) {
    GraphBuilder b(2 * len);
    for (int i = 0; i < len; ++i) {
        b.add_edge(i, (i + 1) % len);
        b.add_edge(len + i, len + (i + 1) % len);
        b.add_edge(i, len + matching[i]);
    }
    return std::move(b).build();
}

const std::string& ladder_target_form(int cycle_length) {
    static const std::string v8 = canonical_form(mobius_ladder8());
    static const std::string pet = canonical_form(petersen());
    return cycle_length == 4 ? v8 : pet;
}

}  // namespace

std::vector<std::vector<int>> enumerate_valid_matchings(int cycle_length) {
    if (cycle_length != 4 && cycle_length != 5)
        throw std::invalid_argument("cycle_length must be 4 or 5");
    std::vector<int> perm(cycle_length);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> valid;
    const std::string& target = ladder_target_form(cycle_length);
    do {
        if (canonical_form(two_cycles_plus_matching(cycle_length, perm)) == target)
            valid.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return valid;
}

Graph cycle_expansion(const ExpansionSpec& spec) {
    const int L = spec.cycle_length;
    if (L != 4 && L != 5) throw std::invalid_argument("cycle_length must be 4 or 5");
    if (spec.k < 1 || spec.l < 1) throw std::invalid_argument("part sizes must be positive");
    const int n = L * (spec.k + spec.l);
    if (n > kMaxVertices) throw std::invalid_argument("expansion exceeds the vertex cap");
    if (static_cast<int>(spec.matchings.size()) != spec.k)
        throw std::invalid_argument("matchings must have one row per C-cycle");

    const auto C = [&](int i, int p) { return L * i + p; };
    const auto D = [&](int j, int p) { return L * (spec.k + j) + p; };

    GraphBuilder b(n);
    for (int i = 0; i < spec.k; ++i)
        for (int p = 0; p < L; ++p) b.add_edge(C(i, p), C(i, (p + 1) % L));
    for (int j = 0; j < spec.l; ++j)
        for (int p = 0; p < L; ++p) b.add_edge(D(j, p), D(j, (p + 1) % L));

    for (int i = 0; i < spec.k; ++i) {
        if (static_cast<int>(spec.matchings[i].size()) != spec.l)
            throw std::invalid_argument("matchings must have one entry per D-cycle");
        for (int j = 0; j < spec.l; ++j) {
            const auto& perm = spec.matchings[i][j];
            std::vector<char> seen(L, 0);
            if (static_cast<int>(perm.size()) != L)
                throw ExpansionSpecError(i, j, "matching is not a bijection on cycle positions");
            for (int p : perm) {
                if (p < 0 || p >= L || seen[p])
                    throw ExpansionSpecError(i, j, "matching is not a bijection on cycle positions");
                seen[p] = 1;
            }
            for (int p = 0; p < L; ++p) b.add_edge(C(i, p), D(j, perm[p]));
        }
    }
    Graph g = std::move(b).build();

    const std::string& target = ladder_target_form(L);
    for (int i = 0; i < spec.k; ++i)
        for (int j = 0; j < spec.l; ++j) {
            std::vector<int> block;
            for (int p = 0; p < L; ++p) {
                block.push_back(C(i, p));
                block.push_back(D(j, p));
            }
            if (canonical_form(induced_subgraph(g, block)) != target)
                throw ExpansionSpecError(
                    i, j,
                    "pair (" + std::to_string(i) + "," + std::to_string(j) +
                        ") does not induce the required ladder graph");
        }
    return g;
}

Graph blow_up(const Graph& g, int v, int r) {
    const int n = g.order();
    if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
    if (r < 1) throw std::invalid_argument("blow_up requires r >= 1");
    if (n + r - 1 > kMaxVertices) throw std::invalid_argument("blow_up exceeds the vertex cap");
    if (r == 1) return g;
    GraphBuilder b(n + r - 1);
    for (int u = 0; u < n; ++u)
        for (int w = g.neighbours(u).next_set(u, g.words()); w >= 0;
             w = g.neighbours(u).next_set(w, g.words()))
            b.add_edge(u, w);
    const auto nbrs = row_to_vector(g.neighbours(v), g.words());
    for (int c = 0; c < r - 1; ++c)
        for (int w : nbrs) b.add_edge(n + c, w);
    return std::move(b).build();
}

Graph twin_quotient(const Graph& g, std::optional<int> threshold) {
    const auto classes = twin_classes(g);
    const int n = g.order();
    // Vertices of non-contracted classes keep their own identity; quotient
    // vertices are ordered by smallest original member.
    std::vector<int> final_map(n, -1);
    std::vector<int> first_of(n, -1);
    for (const auto& cls : classes) {
        const bool contract = !threshold || static_cast<int>(cls.size()) >= *threshold;
        if (contract) {
            for (int v : cls) first_of[v] = cls.front();
        } else {
            for (int v : cls) first_of[v] = v;
        }
    }
    std::vector<int> order;
    for (int v = 0; v < n; ++v)
        if (first_of[v] == v) order.push_back(v);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) final_map[order[i]] = i;
    for (int v = 0; v < n; ++v) final_map[v] = final_map[first_of[v]];

    GraphBuilder b(static_cast<int>(order.size()));
    for (int u = 0; u < n; ++u)
        for (int w = g.neighbours(u).next_set(u, g.words()); w >= 0;
             w = g.neighbours(u).next_set(w, g.words()))
            if (final_map[u] != final_map[w]) b.add_edge(final_map[u], final_map[w]);
    return std::move(b).build();
}

Graph add_dominating_vertex(const Graph& g) {
    const int n = g.order();
    if (n + 1 > kMaxVertices) throw std::invalid_argument("exceeds the vertex cap");
    GraphBuilder b(n + 1);
    for (int u = 0; u < n; ++u) {
        for (int w = g.neighbours(u).next_set(u, g.words()); w >= 0;
             w = g.neighbours(u).next_set(w, g.words()))
            b.add_edge(u, w);
        b.add_edge(u, n);
    }
    return std::move(b).build();
}

QuotientResult double_cover_quotient(const Graph& g, const std::vector<int>& pi) {
    const int n = g.order();
    if (static_cast<int>(pi.size()) != n)
        throw std::invalid_argument("involution has wrong length");
    for (int v = 0; v < n; ++v) {
        if (pi[v] < 0 || pi[v] >= n || pi[pi[v]] != v)
            throw std::invalid_argument("not an involution");
        if (pi[v] == v) throw std::invalid_argument("involution has a fixed point");
    }

    std::vector<int> orbit_id(n, -1);
    int m = 0;
    for (int v = 0; v < n; ++v)
        if (orbit_id[v] < 0) {
            orbit_id[v] = m;
            orbit_id[pi[v]] = m;
            ++m;
        }

    QuotientResult res;
    res.quotient.m = m;
    res.involution_is_automorphism = true;

    const auto norm = [](int a, int b) { return a <= b ? std::pair{a, b} : std::pair{b, a}; };
    for (int u = 0; u < n; ++u)
        for (int v = g.neighbours(u).next_set(u, g.words()); v >= 0;
             v = g.neighbours(u).next_set(v, g.words())) {
            const auto image = norm(pi[u], pi[v]);
            if (!g.adjacent(image.first, image.second)) res.involution_is_automorphism = false;
            // One quotient edge per pi-orbit of edges: skip the larger member
            // of a two-edge orbit.
            if (g.adjacent(image.first, image.second) && image < std::pair{u, v}) continue;
            ++res.quotient.edges[norm(orbit_id[u], orbit_id[v])];
        }
    return res;
}

namespace {

struct LiftEnumerator {
    const QuotientMultigraph& q;
    std::optional<LiftFilter> filter;
    const std::function<bool(const Graph&)>& sink;
    std::vector<std::pair<int, int>> single_edges;
    GraphBuilder builder;
    bool keep_going = true;

    LiftEnumerator(const QuotientMultigraph& qq, std::optional<LiftFilter> f,
                   const std::function<bool(const Graph&)>& s)
        : q(qq), filter(f), sink(s), builder(2 * qq.m) {}

    // Adds edge and checks the filter; returns false (and rolls back) if the
    // edge creates a forbidden structure.
    bool try_add(int u, int v) {
        if (builder.adjacent(u, v)) return true;
        if (filter) {
            BitRow common = builder.neighbours(u);
            common.and_with(builder.neighbours(v), builder.words());
            if (common.any(builder.words())) return false;
        }
        builder.add_edge(u, v);
        if (filter && find_kst_through(builder, u, v, filter->s, filter->t)) {
            builder.remove_edge(u, v);
            return false;
        }
        return true;
    }

    bool setup_forced() {
        for (const auto& [pair, mult] : q.edges) {
            const auto [a, b] = pair;
            if (a == b) {
                if (!try_add(2 * a, 2 * a + 1)) return false;
            } else if (mult == 2) {
                if (!try_add(2 * a, 2 * b) || !try_add(2 * a + 1, 2 * b + 1) ||
                    !try_add(2 * a, 2 * b + 1) || !try_add(2 * a + 1, 2 * b))
                    return false;
            } else {
                single_edges.emplace_back(a, b);
            }
        }
        return true;
    }

    void rec(std::size_t i) {
        if (!keep_going) return;
        if (i == single_edges.size()) {
            Graph g = builder.build();
            if (filter && !has_diameter_at_most_two(g)) return;
            keep_going = sink(g);
            return;
        }
        const auto [a, b] = single_edges[i];
        for (int choice = 0; choice < 2; ++choice) {
            const int u1 = 2 * a, v1 = 2 * b + (choice ? 1 : 0);
            const int u2 = 2 * a + 1, v2 = 2 * b + (choice ? 0 : 1);
            if (try_add(u1, v1)) {
                if (try_add(u2, v2)) {
                    rec(i + 1);
                    builder.remove_edge(u2, v2);
                }
                builder.remove_edge(u1, v1);
            }
            if (!keep_going) return;
        }
    }
};

}  // namespace

void expand_double_cover(const QuotientMultigraph& q, std::optional<LiftFilter> filter,
                         const std::function<bool(const Graph&)>& sink) {
    if (2 * q.m > kMaxVertices) throw std::invalid_argument("lift exceeds the vertex cap");
    if (q.m < 1) throw std::invalid_argument("empty quotient");
    for (const auto& [pair, mult] : q.edges) {
        const auto [a, b] = pair;
        if (a == b ? mult > 1 : mult > 2)
            throw std::invalid_argument("multiplicity outside double-cover range");
    }
    LiftEnumerator e(q, filter, sink);
    if (!e.setup_forced()) return;
    e.rec(0);
}

std::vector<Graph> expand_double_cover_all(const QuotientMultigraph& q,
                                           std::optional<LiftFilter> filter) {
    std::vector<Graph> out;
    expand_double_cover(q, filter, [&](const Graph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

}  // namespace d2tf
