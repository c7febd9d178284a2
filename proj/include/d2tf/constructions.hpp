#ifndef D2TF_CONSTRUCTIONS_HPP
#define D2TF_CONSTRUCTIONS_HPP

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "d2tf/graph.hpp"

namespace d2tf {

// Catalogue of the named graphs used throughout: c4, c5, subdivided_k23,
// mobius8, petersen, groetzsch, clebsch, hoffman_singleton, gewirtz.
// All are built programmatically except gewirtz and subdivided_k23, which
// are bundled graph6 literals.
Graph named_graph(const std::string& name);
std::vector<std::string> named_graph_names();

// Vertices are the k-subsets of an n-set in lexicographic order; edges join
// disjoint subsets.
Graph kneser_graph(int n, int k);

// Expansion of K_{k,l}: each left vertex becomes a cycle C_i, each right
// vertex a cycle D_j, and each (i,j) gets a perfect matching chosen so that
// C_i ∪ D_j induces the Möbius ladder V8 (4-cycles) or the Petersen graph
// (5-cycles).
struct ExpansionSpec {
    int k = 1;
    int l = 1;
    int cycle_length = 4;
    // matchings[i][j] maps position p on C_i to a position on D_j.
    std::vector<std::vector<std::vector<int>>> matchings;
};

class ExpansionSpecError : public std::invalid_argument {
public:
    ExpansionSpecError(int i, int j, const std::string& what)
        : std::invalid_argument(what), i(i), j(j) {}
    int i, j;
};

Graph cycle_expansion(const ExpansionSpec& spec);

// All bijections between two labeled cycles whose union induces V8 (length
// 4) or Petersen (length 5), by brute force over all 4! or 5! bijections.
std::vector<std::vector<int>> enumerate_valid_matchings(int cycle_length);

// Replace v by an independent set of r vertices sharing N(v); clones are
// appended after the original vertices.
Graph blow_up(const Graph& g, int v, int r);

// threshold == nullopt: identify every twin class. threshold t: identify
// only classes of size >= t. Quotient vertices are ordered by smallest
// original member.
Graph twin_quotient(const Graph& g, std::optional<int> threshold);

Graph add_dominating_vertex(const Graph& g);

// Multigraph on m vertices; keys are normalized pairs (a <= b), a loop is
// (a, a). Produced by double-cover quotients, so non-loop multiplicities
// are at most 2 and loop multiplicities at most 1.
struct QuotientMultigraph {
    int m = 0;
    std::map<std::pair<int, int>, int> edges;
};

struct QuotientResult {
    QuotientMultigraph quotient;
    bool involution_is_automorphism = false;
};

// Identify v with pi(v) for a fixed-point-free involution pi; quotient edges
// are the pi-orbits of E(g), keeping loops and multiplicities.
QuotientResult double_cover_quotient(const Graph& g, const std::vector<int>& involution);

struct LiftFilter {
    int s = 2;
    int t = 3;
};

// Enumerate all 2n-vertex lifts of q: a loop lifts to the edge between the
// two preimages, a double edge to both matchings, a single edge to one of
// the two matchings. With a filter, branches creating a triangle or K_{s,t}
// are pruned and only diameter-2 lifts are emitted. The sink returns false
// to stop early.
void expand_double_cover(const QuotientMultigraph& q, std::optional<LiftFilter> filter,
                         const std::function<bool(const Graph&)>& sink);

// Convenience collector for small cases.
std::vector<Graph> expand_double_cover_all(const QuotientMultigraph& q,
                                           std::optional<LiftFilter> filter);

}  // namespace d2tf

#endif
