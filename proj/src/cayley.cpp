#include "d2tf/cayley.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace d2tf {

namespace {

constexpr int kGroupCap = 4096;
constexpr int kTableCap = 1024;
constexpr int kEnumerationOrderCap = 1024;
constexpr int kEnumerationKCap = 20;

long long isqrt_ll(long long x) {
    if (x < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("group needs at least one factor");
    for (int f : factors_) {
        if (f < 2) throw std::invalid_argument("cyclic factors must be >= 2");
        if (order_ > kGroupCap / f) throw std::invalid_argument("group order exceeds 4096");
        order_ *= f;
        if (f != 2) elementary_two_ = false;
    }
    auto tables = std::make_shared<Tables>();
    tables->neg.resize(order_);
    for (int a = 0; a < order_; ++a) {
        int x = a, neg = 0, stride = 1;
        for (int f : factors_) {
            const int digit = x % f;
            neg += ((f - digit) % f) * stride;
            stride *= f;
            x /= f;
        }
        tables->neg[a] = neg;
    }
    if (order_ <= kTableCap) {
        tables->add.resize(static_cast<std::size_t>(order_) * order_);
        for (int a = 0; a < order_; ++a)
            for (int b = 0; b < order_; ++b)
                tables->add[a * order_ + b] = add_slow(a, b);
    }
    tables_ = std::move(tables);
}

int AbelianGroup::add_slow(int a, int b) const {
    int out = 0, stride = 1;
    for (int f : factors_) {
        out += ((a % f + b % f) % f) * stride;
        stride *= f;
        a /= f;
        b /= f;
    }
    return out;
}

std::string AbelianGroup::spec() const {
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(factors_[i]);
    }
    return s;
}

ConnectionSet make_connection_set(AbelianGroup group, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (int x : elements) {
        if (x <= 0 || x >= group.order())
            throw std::invalid_argument("connection set elements must be nonzero group elements");
        if (!std::binary_search(elements.begin(), elements.end(), group.negate(x)))
            throw std::invalid_argument("connection set is not inverse-closed");
    }
    return {std::move(group), std::move(elements)};
}

std::vector<int> double_set(const ConnectionSet& cs) {
    std::vector<int> T;
    for (int x : cs.elements) T.push_back(cs.group.add(x, x));
    std::sort(T.begin(), T.end());
    T.erase(std::unique(T.begin(), T.end()), T.end());
    return T;
}

Graph cayley_graph(const ConnectionSet& cs) {
    const int n = cs.group.order();
    if (n > kMaxVertices) throw std::invalid_argument("group too large to materialize");
    std::vector<char> in_s(n, 0);
    for (int x : cs.elements) in_s[x] = 1;
    GraphBuilder b(n);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (in_s[cs.group.subtract(x, y)]) b.add_edge(x, y);
    return std::move(b).build();
}

bool triangle_condition(const ConnectionSet& cs) {
    std::vector<char> in_s(cs.group.order(), 0);
    for (int x : cs.elements) in_s[x] = 1;
    for (int x : cs.elements)
        for (int y : cs.elements)
            if (in_s[cs.group.add(x, y)]) return false;
    return true;
}

bool diameter2_condition(const ConnectionSet& cs) {
    const int n = cs.group.order();
    std::vector<char> covered(n, 0);
    for (int x : cs.elements)
        for (int y : cs.elements) covered[cs.group.add(x, y)] = 1;
    std::vector<char> in_s(n, 0);
    for (int x : cs.elements) in_s[x] = 1;
    for (int z = 1; z < n; ++z)
        if (!in_s[z] && !covered[z]) return false;
    return true;
}

bool k23_condition(const ConnectionSet& cs) {
    const int n = cs.group.order();
    std::vector<int> pair_count(n, 0), square_count(n, 0);
    const auto& S = cs.elements;
    for (std::size_t i = 0; i < S.size(); ++i) {
        square_count[cs.group.add(S[i], S[i])]++;
        for (std::size_t j = i + 1; j < S.size(); ++j)
            pair_count[cs.group.add(S[i], S[j])]++;
    }
    for (int z = 1; z < n; ++z) {
        if (square_count[z] > 0) {
            // z in T: only x = y representations, at most two of them.
            if (pair_count[z] > 0 || square_count[z] > 2) return false;
        } else {
            if (pair_count[z] > 1) return false;
        }
    }
    return true;
}

ParityReport codegree_parity_check(const ConnectionSet& cs) {
    const int n = cs.group.order();
    if (n > kMaxVertices) throw std::invalid_argument("group too large to materialize");
    const Graph g = cayley_graph(cs);
    const auto T = double_set(cs);
    std::vector<char> in_t(n, 0);
    for (int z : T) in_t[z] = 1;

    ParityReport rep;
    for (int u = 0; u < n && rep.holds; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            if (in_t[cs.group.subtract(u, v)]) continue;
            if (g.codegree(u, v) % 2 != 0) {
                rep.holds = false;
                rep.counterexample = {u, v};
                break;
            }
        }

    if (n % 2 == 1) {
        bool disjoint = true;
        for (int z : T)
            if (std::binary_search(cs.elements.begin(), cs.elements.end(), z)) disjoint = false;
        if (disjoint) {
            rep.odd_order_check_ran = true;
            for (int z : T) {
                if (z == 0) continue;
                if (g.codegree(0, z) % 2 != 1) rep.odd_order_check_holds = false;
            }
        }
    }
    return rep;
}

FeasibilityVerdict counting_feasibility(const AbelianGroup& group, std::optional<int> k) {
    const long long n = group.order();
    FeasibilityVerdict v;
    if (n % 2 != 0 && n % 3 != 0) {
        const long long r = isqrt_ll(2 * n - 1);
        if (r * r == 2 * n - 1) {
            v.status = Feasibility::feasible;
            v.implied_k = r - 1;
        } else {
            v.status = Feasibility::infeasible;
        }
    } else if (group.elementary_two()) {
        // k^2 + k + 2 = 2n, i.e. (2k+1)^2 = 8n - 7.
        const long long r = isqrt_ll(8 * n - 7);
        if (r * r == 8 * n - 7 && r % 2 == 1) {
            v.status = Feasibility::feasible;
            v.implied_k = (r - 1) / 2;
        } else {
            v.status = Feasibility::infeasible;
        }
    } else {
        v.status = Feasibility::inapplicable;
        return v;
    }
    if (v.status == Feasibility::feasible && k && *k != *v.implied_k)
        v.status = Feasibility::infeasible;
    return v;
}

std::vector<int> ramanujan_nagell(int limit) {
    if (limit > 62) throw std::invalid_argument("ramanujan_nagell limit exceeds 62");
    std::vector<int> out;
    for (int m = 1; m <= limit; ++m) {
        const long long val = (1LL << m) - 7;
        if (val < 0) continue;
        const long long r = isqrt_ll(val);
        if (r * r == val) out.push_back(m);
    }
    return out;
}

namespace {

// Backtracking over inverse-closed subsets built from units {x, -x}
// (singleton when x = -x), with incremental pruning: sums never land in S
// (triangles) and pair-sum multiplicities stay within the K_{2,3} rules.
struct SetEnumerator {
    const AbelianGroup& group;
    int target_k;
    std::vector<std::vector<int>> units;
    bool pin_first_unit = false;  // symmetry reduction: 1 in S

    std::vector<char> in_s;
    std::vector<int> pair_count, square_count;
    std::vector<int> chosen;  // elements, unsorted
    std::map<std::string, CayleyWitnessClass> classes;

    explicit SetEnumerator(const AbelianGroup& g, int k) : group(g), target_k(k) {
        const int n = group.order();
        std::vector<char> seen(n, 0);
        for (int x = 1; x < n; ++x) {
            if (seen[x]) continue;
            const int nx = group.negate(x);
            seen[x] = seen[nx] = 1;
            if (nx == x)
                units.push_back({x});
            else
                units.push_back({x, nx});
        }
        in_s.assign(n, 0);
        pair_count.assign(n, 0);
        square_count.assign(n, 0);
    }

    // Always commits; returns whether all constraints still hold. The caller
    // undoes with remove_element in LIFO order.
    bool add_element(int e) {
        // A triangle shows up when its last element arrives: either e is a
        // sum of members, or a sum involving e lands in the set.
        bool ok = pair_count[e] == 0 && square_count[e] == 0;
        const int sq = group.add(e, e);
        if (in_s[sq]) ok = false;
        for (int x : chosen)
            if (in_s[group.add(e, x)]) ok = false;
        square_count[sq]++;
        if (sq != 0 && (square_count[sq] > 2 || pair_count[sq] > 0)) ok = false;
        for (int x : chosen) {
            const int sum = group.add(e, x);
            pair_count[sum]++;
            if (sum != 0 && (pair_count[sum] > 1 || square_count[sum] > 0)) ok = false;
        }
        chosen.push_back(e);
        in_s[e] = 1;
        return ok;
    }

    void remove_element(int e) {
        in_s[e] = 0;
        chosen.pop_back();
        square_count[group.add(e, e)]--;
        for (int x : chosen) pair_count[group.add(e, x)]--;
    }

    bool try_unit(std::size_t u) {
        bool ok = add_element(units[u][0]);
        if (units[u].size() == 2) ok = add_element(units[u][1]) && ok;
        return ok;
    }

    void drop_unit(std::size_t u) {
        if (units[u].size() == 2) remove_element(units[u][1]);
        remove_element(units[u][0]);
    }

    void finish() {
        ConnectionSet cs = make_connection_set(group, chosen);
        if (!diameter2_condition(cs)) return;
        Graph g = cayley_graph(cs);
        auto canon = canonicalize_full(g);
        if (classes.contains(canon.form)) return;
        classes.emplace(canon.form,
                        CayleyWitnessClass{std::move(cs), std::move(g), canon.report()});
    }

    void rec(std::size_t next_unit, int size) {
        if (size == target_k) {
            finish();
            return;
        }
        for (std::size_t u = next_unit; u < units.size(); ++u) {
            if (pin_first_unit && size == 0 && units[u][0] != 1) break;
            const int unit_size = static_cast<int>(units[u].size());
            if (size + unit_size > target_k) continue;
            // Remaining units cannot reach the target size: cut.
            int remaining = 0;
            for (std::size_t w = u; w < units.size() && remaining < target_k - size; ++w)
                remaining += static_cast<int>(units[w].size());
            if (size + remaining < target_k) return;
            if (try_unit(u)) rec(u + 1, size + unit_size);
            drop_unit(u);
        }
    }
};

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool prime_power_with_unit_normalization(const AbelianGroup& g) {
    // Elementary abelian p-groups: the matrix group is transitive on nonzero
    // elements. Cyclic p^e: any generating inverse-closed set contains an
    // invertible element (the non-units form a subgroup), so it can be
    // translated to contain 1. Both let the search pin element 1.
    const auto& f = g.factors();
    if (f.size() == 1) {
        int n = f[0];
        for (int p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                while (n % p == 0) n /= p;
                return n == 1;
            }
        return true;  // prime
    }
    return std::adjacent_find(f.begin(), f.end(), std::not_equal_to<>()) == f.end() &&
           is_prime(f[0]);
}

}  // namespace

std::vector<CayleyWitnessClass> enumerate_connection_sets(const AbelianGroup& group, int k) {
    if (group.order() > kEnumerationOrderCap || group.order() > kMaxVertices)
        throw std::invalid_argument(
            "enumeration requires group order within the graph vertex cap");
    if (k < 1 || k > kEnumerationKCap)
        throw std::invalid_argument("enumeration capped at 1 <= k <= 20");
    SetEnumerator e(group, k);
    e.pin_first_unit = prime_power_with_unit_normalization(group);
    e.rec(0, 0);
    std::vector<CayleyWitnessClass> out;
    for (auto& [form, cls] : e.classes) out.push_back(std::move(cls));
    return out;
}

std::vector<std::vector<int>> abelian_groups_of_order(int n) {
    if (n < 2) throw std::invalid_argument("order must be >= 2");
    // Partitions of each prime exponent, combined across primes.
    std::vector<std::pair<int, int>> factorization;
    int rest = n;
    for (int p = 2; p * p <= rest; ++p)
        if (rest % p == 0) {
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            factorization.emplace_back(p, e);
        }
    if (rest > 1) factorization.emplace_back(rest, 1);

    const std::function<std::vector<std::vector<int>>(int, int)> partitions =
        [&](int remaining, int max_part) -> std::vector<std::vector<int>> {
        if (remaining == 0) return {{}};
        std::vector<std::vector<int>> out;
        for (int part = std::min(remaining, max_part); part >= 1; --part)
            for (auto tail : partitions(remaining - part, part)) {
                tail.insert(tail.begin(), part);
                out.push_back(std::move(tail));
            }
        return out;
    };

    std::vector<std::vector<int>> groups{{}};
    for (auto [p, e] : factorization) {
        std::vector<std::vector<int>> next;
        for (const auto& partial : groups)
            for (const auto& part : partitions(e, e)) {
                auto combined = partial;
                for (int a : part) {
                    int f = 1;
                    for (int i = 0; i < a; ++i) f *= p;
                    combined.push_back(f);
                }
                next.push_back(std::move(combined));
            }
        groups = std::move(next);
    }
    for (auto& g : groups) std::sort(g.begin(), g.end(), std::greater<>());
    std::sort(groups.begin(), groups.end());
    return groups;
}

std::vector<PrimePowerRow> classify_prime_power_orders(int limit) {
    if (limit > 200) throw std::invalid_argument("classification capped at 200");
    std::vector<PrimePowerRow> rows;
    for (int n = 5; n <= limit; ++n) {
        if (n % 2 == 0 || n % 3 == 0) continue;
        int base = n, p = 0;
        for (int d = 2; d * d <= base; ++d)
            if (base % d == 0) {
                p = d;
                break;
            }
        if (p == 0) p = base;
        int m = n;
        while (m % p == 0) m /= p;
        if (m != 1) continue;  // not a prime power

        PrimePowerRow row;
        row.n = n;
        const auto verdict = counting_feasibility(AbelianGroup({n}), std::nullopt);
        row.feasible = verdict.status == Feasibility::feasible;
        if (row.feasible) {
            row.implied_k = *verdict.implied_k;
            for (const auto& factors : abelian_groups_of_order(n)) {
                AbelianGroup g(factors);
                GroupClassification gc;
                gc.factors = factors;
                gc.witness_classes = static_cast<int>(
                    enumerate_connection_sets(g, static_cast<int>(row.implied_k)).size());
                row.groups.push_back(std::move(gc));
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace d2tf
