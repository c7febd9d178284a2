#ifndef D2TF_CAYLEY_HPP
#define D2TF_CAYLEY_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "d2tf/canonical.hpp"
#include "d2tf/graph.hpp"

namespace d2tf {

// Finite abelian group as a list of cyclic factor orders; elements are
// mixed-radix indices of digit tuples, the identity is 0. Order is capped at
// 4096; groups of order <= 1024 carry a shared addition table.
class AbelianGroup {
public:
    explicit AbelianGroup(std::vector<int> factors);

    int order() const { return order_; }
    const std::vector<int>& factors() const { return factors_; }
    bool elementary_two() const { return elementary_two_; }

    int add(int a, int b) const {
        if (!tables_->add.empty()) return tables_->add[a * order_ + b];
        return add_slow(a, b);
    }
    int negate(int a) const { return tables_->neg[a]; }
    int subtract(int a, int b) const { return add(a, negate(b)); }

    std::string spec() const;  // comma-separated factor list

private:
    int add_slow(int a, int b) const;

    struct Tables {
        std::vector<int> add;
        std::vector<int> neg;
    };
    std::vector<int> factors_;
    int order_ = 1;
    bool elementary_two_ = true;
    std::shared_ptr<const Tables> tables_;
};

// Inverse-closed set of nonzero elements, kept sorted.
struct ConnectionSet {
    AbelianGroup group;
    std::vector<int> elements;
};

// Validates inverse-closure and 0-freeness.
ConnectionSet make_connection_set(AbelianGroup group, std::vector<int> elements);

// T = {x + x : x in S}, sorted and deduplicated.
std::vector<int> double_set(const ConnectionSet& cs);

// Vertex i is the i-th group element; x ~ y iff x - y in S. Order <= 512.
Graph cayley_graph(const ConnectionSet& cs);

// No x, y, z in S with x + y = z (x = y allowed): triangle-freeness.
bool triangle_condition(const ConnectionSet& cs);

// Every z outside S ∪ {0} is a sum of two elements of S: diameter <= 2.
bool diameter2_condition(const ConnectionSet& cs);

// z outside T ∪ {0} has at most one unordered pair summing to it; z in
// T \ {0} has no two-distinct-element representation and at most two
// square roots in S: K_{2,3}-freeness.
bool k23_condition(const ConnectionSet& cs);

struct ParityReport {
    bool holds = true;
    std::optional<std::pair<int, int>> counterexample;  // non-adjacent pair, even rule broken
    bool odd_order_check_ran = false;
    bool odd_order_check_holds = true;
};

// Non-adjacent pairs whose difference lies outside T have an even number of
// common neighbours. For odd-order groups with S and T disjoint, the number
// of common neighbours of 0 and any element of T \ {0} is additionally odd.
ParityReport codegree_parity_check(const ConnectionSet& cs);

enum class Feasibility { feasible, infeasible, inapplicable };

struct FeasibilityVerdict {
    Feasibility status = Feasibility::inapplicable;
    std::optional<long long> implied_k;
};

// Counting criterion: orders coprime to 6 need 2n-1 to be a perfect square
// (k = sqrt(2n-1) - 1); elementary 2-groups of order 2^d need an integer
// root of k^2 + k + 2 = 2^(d+1). Other shapes: inapplicable.
FeasibilityVerdict counting_feasibility(const AbelianGroup& group, std::optional<int> k);

// All m <= limit with 2^m - 7 a perfect square; limit <= 62.
std::vector<int> ramanujan_nagell(int limit);

struct CayleyWitnessClass {
    ConnectionSet set;
    Graph graph;
    CanonicalReport report;
};

// Exhaustive search over inverse-closed k-subsets passing the three
// algebraic conditions, one representative per isomorphism class of the
// resulting graph. Group order <= 1024, k <= 20.
std::vector<CayleyWitnessClass> enumerate_connection_sets(const AbelianGroup& group, int k);

struct GroupClassification {
    std::vector<int> factors;
    int witness_classes = 0;
};

struct PrimePowerRow {
    int n = 0;
    bool feasible = false;
    long long implied_k = 0;
    std::vector<GroupClassification> groups;
};

// For each prime power n <= limit coprime to 6: the counting verdict, and
// for feasible orders the witness-class count of every abelian group of
// order n. limit <= 200.
std::vector<PrimePowerRow> classify_prime_power_orders(int limit);

// All abelian groups of order n, as factor lists.
std::vector<std::vector<int>> abelian_groups_of_order(int n);

}  // namespace d2tf

#endif
