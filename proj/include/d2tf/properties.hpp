#ifndef D2TF_PROPERTIES_HPP
#define D2TF_PROPERTIES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "d2tf/graph.hpp"

namespace d2tf {

struct Triangle {
    std::array<int, 3> vertices;
};

// A complete-bipartite witness: every side_s vertex adjacent to every side_t
// vertex, sides disjoint.
struct Biclique {
    std::vector<int> side_s;
    std::vector<int> side_t;
};

std::optional<Triangle> find_triangle(const Graph& g);
bool is_triangle_free(const Graph& g);

// K_{s,t} subgraph search (containment, not induced). 1 <= s <= t, s <= 4.
std::optional<Biclique> find_kst(const Graph& g, int s, int t);
bool has_kst(const Graph& g, int s, int t);

// True iff g is K_{1,n-1}; n = 1 and n = 2 count as stars.
bool is_star(const Graph& g);

// Every pair of distinct vertices adjacent or sharing a common neighbour.
bool has_diameter_at_most_two(const Graph& g);

// Equivalence classes of N(v) = N(w), ordered by smallest member.
std::vector<std::vector<int>> twin_classes(const Graph& g);

struct WitnessReport {
    int s = 2, t = 3;
    bool triangle_free = false;
    bool kst_free = false;
    bool diameter_two = false;
    bool star = false;
    bool twin_free = false;
    bool is_witness = false;
    std::optional<Triangle> triangle;
    std::optional<Biclique> biclique;
    std::optional<std::pair<int, int>> uncovered_pair;  // non-adjacent, no common neighbour
    std::optional<std::pair<int, int>> twin_pair;
};

WitnessReport witness_report(const Graph& g, int s, int t);

// JSON-lines record with stable field names; diagnostics attached when a
// flag is false.
std::string witness_report_json(const Graph& g, const WitnessReport& r);

// Upper bound on the maximum degree in terms of the minimum degree.
long long degree_bound_value(int t, long long min_degree);

// Hypotheses (triangle-free, K_{2,t}-free, diameter 2, non-star) are checked
// and rejected with an error naming the failed property.
bool check_degree_bound(const Graph& g, int t);

struct DegreeSumCheck {
    double lhs = 0;       // (1/(t-1)) * sum(deg^2 + (t-2) deg)
    long long mid = 0;    // n(n-1)
    long long rhs = 0;    // sum(deg^2)
    bool holds = false;
};

DegreeSumCheck check_degree_sum_inequalities(const Graph& g, int t);

// Delta^2 >= n-1, integer arithmetic; requires diameter <= 2.
bool max_degree_floor(const Graph& g);

struct SrgParams {
    long long v = 0, k = 0, lambda = 0, mu = 0;
    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

std::optional<SrgParams> srg_params(const Graph& g);

// Eigenvalue-multiplicity integrality test, exact integer arithmetic.
// Rejects arithmetically inconsistent parameters.
bool srg_integrality(const SrgParams& p);

// Vertex-count bracket for a d-regular witness: [1 + C(d+1,2), 1 + d^2].
std::pair<long long, long long> regular_witness_bracket(int d);

// Requires triangle-free input; true iff adding any non-edge closes a triangle.
bool is_edge_maximal_triangle_free(const Graph& g);

enum class GirthClass { four, five, other };

// Exact girth; 0 for acyclic graphs.
int girth(const Graph& g);
GirthClass girth_class(const Graph& g);
std::string girth_class_name(GirthClass c);

}  // namespace d2tf

#endif
