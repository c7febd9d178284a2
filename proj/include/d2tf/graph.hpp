#ifndef D2TF_GRAPH_HPP
#define D2TF_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "d2tf/bitset.hpp"

namespace d2tf {

class GraphBuilder;

// Immutable simple graph on at most kMaxVertices vertices. Adjacency is one
// fixed-width bit row per vertex; symmetry and irreflexivity hold by
// construction. Safe to share across threads once built.
class Graph {
public:
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int words() const { return nw_; }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const BitRow& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(nw_); }
    int codegree(int u, int v) const { return adj_[u].count_and(adj_[v], nw_); }

    int edge_count() const;
    std::vector<int> degrees() const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    // Relabeled copy: vertex v of *this becomes relabel[v].
    Graph permuted(const std::vector<int>& relabel) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    friend class GraphBuilder;
    int n_;
    int nw_;
    std::vector<BitRow> adj_;
};

// Mutable adjacency workspace; the only way to assemble a Graph edge by edge.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    explicit GraphBuilder(const Graph& g);

    int order() const { return n_; }
    int words() const { return nw_; }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const BitRow& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(nw_); }
    int codegree(int u, int v) const { return adj_[u].count_and(adj_[v], nw_); }

    Graph build() const&;
    Graph build() &&;

private:
    int n_;
    int nw_;
    std::vector<BitRow> adj_;
};

// BFS distances from v; unreachable vertices get kUnreachable.
inline constexpr int kUnreachable = -1;
std::vector<int> distances_from(const Graph& g, int v);

// Largest pairwise distance; nullopt when the graph is disconnected.
std::optional<int> diameter(const Graph& g);

bool is_connected(const Graph& g);

// N(u) ∩ N(v) as a bit row.
BitRow common_neighbours(const Graph& g, int u, int v);

std::vector<int> row_to_vector(const BitRow& row, int nwords);

// Subgraph induced on S, vertices reindexed 0..|S|-1 in S's sorted order.
Graph induced_subgraph(const Graph& g, std::vector<int> S);

}  // namespace d2tf

#endif
