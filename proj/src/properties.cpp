#include "d2tf/properties.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "d2tf/graph6.hpp"

namespace d2tf {

std::optional<Triangle> find_triangle(const Graph& g) {
    const int n = g.order(), nw = g.words();
    for (int u = 0; u < n; ++u) {
        const BitRow& nu = g.neighbours(u);
        for (int v = nu.next_set(u, nw); v >= 0; v = nu.next_set(v, nw)) {
            BitRow common = nu;
            common.and_with(g.neighbours(v), nw);
            const int w = common.first_set(nw);
            if (w >= 0) return Triangle{{u, v, w}};
        }
    }
    return std::nullopt;
}

bool is_triangle_free(const Graph& g) { return !find_triangle(g); }

namespace {

std::optional<Biclique> biclique_from(const Graph& g, std::vector<int> side_s,
                                      const BitRow& common, int t) {
    const int nw = g.words();
    if (common.count(nw) < t) return std::nullopt;
    std::vector<int> side_t;
    for (int v = common.first_set(nw); v >= 0 && static_cast<int>(side_t.size()) < t;
         v = common.next_set(v, nw))
        side_t.push_back(v);
    return Biclique{std::move(side_s), std::move(side_t)};
}

}  // namespace

std::optional<Biclique> find_kst(const Graph& g, int s, int t) {
    if (s < 1 || s > t) throw std::invalid_argument("find_kst requires 1 <= s <= t");
    if (s > 4) throw std::invalid_argument("find_kst supports s <= 4 only");
    const int n = g.order(), nw = g.words();
    if (s == 1) {
        for (int u = 0; u < n; ++u)
            if (auto b = biclique_from(g, {u}, g.neighbours(u), t)) return b;
        return std::nullopt;
    }
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) < t) continue;
        for (int v = u + 1; v < n; ++v) {
            BitRow uv = g.neighbours(u);
            uv.and_with(g.neighbours(v), nw);
            if (uv.count(nw) < t) continue;
            if (s == 2) return biclique_from(g, {u, v}, uv, t);
            for (int w = v + 1; w < n; ++w) {
                BitRow uvw = uv;
                uvw.and_with(g.neighbours(w), nw);
                if (uvw.count(nw) < t) continue;
                if (s == 3) return biclique_from(g, {u, v, w}, uvw, t);
                for (int x = w + 1; x < n; ++x) {
                    BitRow all = uvw;
                    all.and_with(g.neighbours(x), nw);
                    if (auto b = biclique_from(g, {u, v, w, x}, all, t)) return b;
                }
            }
        }
    }
    return std::nullopt;
}

bool has_kst(const Graph& g, int s, int t) { return find_kst(g, s, t).has_value(); }

bool is_star(const Graph& g) {
    const int n = g.order();
    int center = -1;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) {
            center = v;
            break;
        }
    if (center < 0) return false;
    for (int v = 0; v < n; ++v)
        if (v != center && g.degree(v) != 1) return false;
    return true;
}

namespace {

std::optional<std::pair<int, int>> find_uncovered_pair(const Graph& g) {
    const int n = g.order(), nw = g.words();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            if (!g.neighbours(u).intersects(g.neighbours(v), nw)) return std::pair{u, v};
        }
    return std::nullopt;
}

}  // namespace

bool has_diameter_at_most_two(const Graph& g) { return !find_uncovered_pair(g); }

std::vector<std::vector<int>> twin_classes(const Graph& g) {
    const int n = g.order();
    std::map<std::vector<std::uint64_t>, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) {
        std::vector<std::uint64_t> key(g.neighbours(v).w.begin(),
                                       g.neighbours(v).w.begin() + g.words());
        classes[std::move(key)].push_back(v);
    }
    std::vector<std::vector<int>> out;
    out.reserve(classes.size());
    for (auto& [key, members] : classes) out.push_back(std::move(members));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

WitnessReport witness_report(const Graph& g, int s, int t) {
    if (s < 1 || s > t) throw std::invalid_argument("witness parameters need 1 <= s <= t");
    WitnessReport r;
    r.s = s;
    r.t = t;
    r.triangle = find_triangle(g);
    r.triangle_free = !r.triangle;
    r.biclique = find_kst(g, s, t);
    r.kst_free = !r.biclique;
    r.uncovered_pair = find_uncovered_pair(g);
    r.diameter_two = !r.uncovered_pair;
    r.star = is_star(g);
    for (const auto& cls : twin_classes(g))
        if (cls.size() >= 2) {
            r.twin_pair = std::pair{cls[0], cls[1]};
            break;
        }
    r.twin_free = !r.twin_pair;
    r.is_witness = r.triangle_free && r.kst_free && r.diameter_two && !r.star;
    return r;
}

std::string witness_report_json(const Graph& g, const WitnessReport& r) {
    nlohmann::ordered_json j;
    j["graph6"] = to_graph6(g);
    j["s"] = r.s;
    j["t"] = r.t;
    j["triangle_free"] = r.triangle_free;
    j["kst_free"] = r.kst_free;
    j["diameter_two"] = r.diameter_two;
    j["is_star"] = r.star;
    j["twin_free"] = r.twin_free;
    j["is_witness"] = r.is_witness;
    nlohmann::ordered_json diag;
    if (r.triangle) diag["triangle"] = r.triangle->vertices;
    if (r.biclique) {
        diag["kst_side_s"] = r.biclique->side_s;
        diag["kst_side_t"] = r.biclique->side_t;
    }
    if (r.uncovered_pair)
        diag["uncovered_pair"] = {r.uncovered_pair->first, r.uncovered_pair->second};
    if (r.twin_pair) diag["twin_pair"] = {r.twin_pair->first, r.twin_pair->second};
    if (!diag.empty()) j["diagnostics"] = diag;
    return j.dump();
}

namespace {

void require_property(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("rejected input: graph is not ") + what);
}

}  // namespace

long long degree_bound_value(int t, long long min_degree) {
    const long long tm1 = t - 1;
    return tm1 * (tm1 * min_degree - t + 2) - t + 2;
}

bool check_degree_bound(const Graph& g, int t) {
    if (t < 2) throw std::invalid_argument("degree bound requires t >= 2");
    require_property(is_triangle_free(g), "triangle-free");
    require_property(!has_kst(g, 2, t), "K_{2,t}-free");
    require_property(has_diameter_at_most_two(g), "of diameter 2");
    require_property(!is_star(g), "a non-star");
    const auto degs = g.degrees();
    const long long delta = *std::min_element(degs.begin(), degs.end());
    const long long Delta = *std::max_element(degs.begin(), degs.end());
    return Delta <= degree_bound_value(t, delta);
}

DegreeSumCheck check_degree_sum_inequalities(const Graph& g, int t) {
    if (t < 2) throw std::invalid_argument("degree sums require t >= 2");
    require_property(is_triangle_free(g), "triangle-free");
    require_property(!has_kst(g, 2, t), "K_{2,t}-free");
    require_property(has_diameter_at_most_two(g), "of diameter 2");
    const long long n = g.order();
    long long sum_sq = 0, sum_deg = 0;
    for (int v = 0; v < n; ++v) {
        const long long d = g.degree(v);
        sum_sq += d * d;
        sum_deg += d;
    }
    DegreeSumCheck c;
    c.lhs = static_cast<double>(sum_sq + (t - 2) * sum_deg) / (t - 1);
    c.mid = n * (n - 1);
    c.rhs = sum_sq;
    c.holds = sum_sq + (t - 2) * sum_deg <= (t - 1) * c.mid && c.mid <= sum_sq;
    return c;
}

bool max_degree_floor(const Graph& g) {
    require_property(has_diameter_at_most_two(g), "of diameter 2");
    long long Delta = 0;
    for (int v = 0; v < g.order(); ++v) Delta = std::max<long long>(Delta, g.degree(v));
    return Delta * Delta >= static_cast<long long>(g.order()) - 1;
}

std::optional<SrgParams> srg_params(const Graph& g) {
    const int n = g.order(), nw = g.words();
    const int k = g.degree(0);
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != k) return std::nullopt;
    long long lambda = -1, mu = -1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const long long c = g.neighbours(u).count_and(g.neighbours(v), nw);
            if (g.adjacent(u, v)) {
                if (lambda < 0) lambda = c;
                if (c != lambda) return std::nullopt;
            } else {
                if (mu < 0) mu = c;
                if (c != mu) return std::nullopt;
            }
        }
    // Demand both parameters to be realised and mu >= 1 (complete and empty
    // graphs are out, as is any disconnected regular graph).
    if (lambda < 0 || mu < 1) return std::nullopt;
    return SrgParams{n, k, lambda, mu};
}

namespace {

long long isqrt_floor(long long x) {
    if (x < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

}  // namespace

bool srg_integrality(const SrgParams& p) {
    const long long v = p.v, k = p.k, l = p.lambda, m = p.mu;
    if (v <= k || k < m || m < 1 || l < 0 || (k >= 1 && l > k - 1))
        throw std::invalid_argument("rejected input: parameters violate srg constraints");
    if (k * (k - l - 1) != (v - k - 1) * m)
        throw std::invalid_argument("rejected input: parameters fail k(k-l-1) = (v-k-1)mu");
    const long long disc = (l - m) * (l - m) + 4 * (k - m);
    const long long num = 2 * k + (v - 1) * (l - m);
    const long long root = isqrt_floor(disc);
    if (root * root != disc) {
        // Conference case: irrational eigenvalues force equal multiplicities.
        return num == 0 && (v - 1) % 2 == 0;
    }
    if (root == 0) return false;
    if (num % root != 0) return false;
    const long long q = num / root;
    if (((v - 1) - q) % 2 != 0) return false;
    const long long f = ((v - 1) - q) / 2;
    const long long h = ((v - 1) + q) / 2;
    return f >= 0 && h >= 0;
}

std::pair<long long, long long> regular_witness_bracket(int d) {
    if (d < 2) throw std::invalid_argument("regular_witness_bracket requires d >= 2");
    const long long dd = d;
    return {1 + dd * (dd + 1) / 2, 1 + dd * dd};
}

bool is_edge_maximal_triangle_free(const Graph& g) {
    require_property(is_triangle_free(g), "triangle-free");
    return has_diameter_at_most_two(g);
}

int girth(const Graph& g) {
    const int n = g.order(), nw = g.words();
    int best = 0;
    std::vector<int> dist(n), parent(n);
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.assign(1, root);
        dist[root] = 0;
        parent[root] = -1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int x = queue[head];
            if (best && 2 * dist[x] >= best) break;
            const BitRow& nx = g.neighbours(x);
            for (int y = nx.first_set(nw); y >= 0; y = nx.next_set(y, nw)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (y != parent[x]) {
                    const int cycle = dist[x] + dist[y] + 1;
                    if (!best || cycle < best) best = cycle;
                }
            }
        }
    }
    return best;
}

GirthClass girth_class(const Graph& g) {
    switch (girth(g)) {
        case 4: return GirthClass::four;
        case 5: return GirthClass::five;
        default: return GirthClass::other;
    }
}

std::string girth_class_name(GirthClass c) {
    switch (c) {
        case GirthClass::four: return "4";
        case GirthClass::five: return "5";
        default: return "other";
    }
}

}  // namespace d2tf
