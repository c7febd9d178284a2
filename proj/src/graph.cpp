#include "d2tf/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace d2tf {

namespace {

void check_order(int n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order " + std::to_string(n) +
                                    " outside [1, " + std::to_string(kMaxVertices) + "]");
}

void check_endpoints(int n, int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("loops are not representable");
}

}  // namespace

Graph::Graph(int n) : n_(n), nw_((n + 63) / 64), adj_(n) { check_order(n); }

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        check_endpoints(n_, u, v);
        adj_[u].set(v);
        adj_[v].set(u);
    }
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

Graph Graph::with_edge(int u, int v) const {
    check_endpoints(n_, u, v);
    Graph g = *this;
    g.adj_[u].set(v);
    g.adj_[v].set(u);
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    check_endpoints(n_, u, v);
    Graph g = *this;
    g.adj_[u].reset(v);
    g.adj_[v].reset(u);
    return g;
}

Graph Graph::permuted(const std::vector<int>& relabel) const {
    if (static_cast<int>(relabel.size()) != n_)
        throw std::invalid_argument("relabeling has wrong length");
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next_set(u, nw_); v >= 0; v = adj_[u].next_set(v, nw_)) {
            g.adj_[relabel[u]].set(relabel[v]);
            g.adj_[relabel[v]].set(relabel[u]);
        }
    return g;
}

GraphBuilder::GraphBuilder(int n) : n_(n), nw_((n + 63) / 64), adj_(n) { check_order(n); }

GraphBuilder::GraphBuilder(const Graph& g)
    : n_(g.n_), nw_(g.nw_), adj_(g.adj_) {}

void GraphBuilder::add_edge(int u, int v) {
    check_endpoints(n_, u, v);
    adj_[u].set(v);
    adj_[v].set(u);
}

void GraphBuilder::remove_edge(int u, int v) {
    check_endpoints(n_, u, v);
    adj_[u].reset(v);
    adj_[v].reset(u);
}

Graph GraphBuilder::build() const& {
    Graph g(n_);
    g.adj_ = adj_;
    return g;
}

Graph GraphBuilder::build() && {
    Graph g(n_);
    g.adj_ = std::move(adj_);
    return g;
}

std::vector<int> distances_from(const Graph& g, int v) {
    const int n = g.order(), nw = g.words();
    std::vector<int> dist(n, kUnreachable);
    BitRow visited, frontier;
    visited.set(v);
    frontier.set(v);
    dist[v] = 0;
    int level = 0;
    while (frontier.any(nw)) {
        BitRow next;
        for (int u = frontier.first_set(nw); u >= 0; u = frontier.next_set(u, nw))
            next.or_with(g.neighbours(u), nw);
        next.andnot_with(visited, nw);
        ++level;
        for (int u = next.first_set(nw); u >= 0; u = next.next_set(u, nw)) dist[u] = level;
        visited.or_with(next, nw);
        frontier = next;
    }
    return dist;
}

std::optional<int> diameter(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.order(); ++v) {
        for (int d : distances_from(g, v)) {
            if (d == kUnreachable) return std::nullopt;
            if (d > best) best = d;
        }
    }
    return best;
}

bool is_connected(const Graph& g) {
    const auto dist = distances_from(g, 0);
    for (int d : dist)
        if (d == kUnreachable) return false;
    return true;
}

BitRow common_neighbours(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("common_neighbours requires distinct vertices");
    BitRow row = g.neighbours(u);
    row.and_with(g.neighbours(v), g.words());
    return row;
}

std::vector<int> row_to_vector(const BitRow& row, int nwords) {
    std::vector<int> out;
    for (int v = row.first_set(nwords); v >= 0; v = row.next_set(v, nwords)) out.push_back(v);
    return out;
}

Graph induced_subgraph(const Graph& g, std::vector<int> S) {
    if (S.empty()) throw std::invalid_argument("induced_subgraph requires a nonempty vertex set");
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    if (S.front() < 0 || S.back() >= g.order())
        throw std::invalid_argument("vertex out of range");
    const int m = static_cast<int>(S.size());
    GraphBuilder b(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.adjacent(S[i], S[j])) b.add_edge(i, j);
    return std::move(b).build();
}

}  // namespace d2tf
