#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rdist/error.hpp"
#include "rdist/matrix.hpp"

namespace rdist {

/// Unordered vertex pair, 1-based. Stored normalized with first < second.
using Edge = std::pair<std::size_t, std::size_t>;

/// Immutable simple undirected graph on vertices 1..n.
class Graph {
public:
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged. Throws EmptyGraph for n = 0, InvalidVertex for
    /// an endpoint outside 1..n and LoopEdge for (i, i).
    static Graph from_edges(std::size_t n, std::span<const Edge> edge_list) {
        if (n == 0) throw Error(Errc::empty_graph, "graph must have at least one vertex");
        std::vector<Edge> edges;
        edges.reserve(edge_list.size());
        for (auto [u, v] : edge_list) {
            if (u < 1 || u > n || v < 1 || v > n)
                throw Error(Errc::invalid_vertex, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                                      ") has an endpoint outside 1.." + std::to_string(n));
            if (u == v) throw Error(Errc::loop_edge, "loop at vertex " + std::to_string(u));
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        return Graph(n, std::move(edges));
    }

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    /// Sorted, duplicate-free, each pair with first < second.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Sorted neighbours of vertex v (1-based).
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v - 1); }
    std::size_t degree(std::size_t v) const { return neighbors(v).size(); }

    bool adjacent(std::size_t u, std::size_t v) const {
        const auto& nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adjacency_(n) {
        for (auto [u, v] : edges_) {
            adjacency_[u - 1].push_back(v);
            adjacency_[v - 1].push_back(u);
        }
        for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
    }

    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

inline Graph graph_from_edges(std::size_t n, std::span<const Edge> edge_list) {
    return Graph::from_edges(n, edge_list);
}

inline Graph graph_from_edges(std::size_t n, std::initializer_list<Edge> edge_list) {
    return Graph::from_edges(n, std::span<const Edge>(edge_list.begin(), edge_list.size()));
}

inline Graph path_graph(std::size_t n) {
    if (n == 0) throw Error(Errc::empty_graph, "path on zero vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
    if (n < 3) throw Error(Errc::too_small, "cycle needs at least 3 vertices, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
    return Graph::from_edges(n, edges);
}

inline Graph complete_graph(std::size_t n) {
    if (n == 0) throw Error(Errc::empty_graph, "complete graph on zero vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

inline Matrix<Rational> adjacency_matrix(const Graph& g) {
    Matrix<Rational> a(g.order(), g.order());
    for (auto [u, v] : g.edges()) {
        a(u - 1, v - 1) = 1;
        a(v - 1, u - 1) = 1;
    }
    return a;
}

inline Matrix<Rational> degree_matrix(const Graph& g) {
    Matrix<Rational> d(g.order(), g.order());
    for (std::size_t v = 1; v <= g.order(); ++v) d(v - 1, v - 1) = static_cast<long>(g.degree(v));
    return d;
}

/// L(G) = D(G) - A(G).
inline Matrix<Rational> laplacian(const Graph& g) { return degree_matrix(g) - adjacency_matrix(g); }

/// The common degree if every vertex has it.
inline std::optional<std::size_t> is_regular(const Graph& g) {
    const std::size_t r = g.degree(1);
    for (std::size_t v = 2; v <= g.order(); ++v)
        if (g.degree(v) != r) return std::nullopt;
    return r;
}

inline bool is_connected(const Graph& g) {
    std::vector<bool> seen(g.order() + 1, false);
    std::vector<std::size_t> stack{1};
    seen[1] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto w : g.neighbors(v)) {
            if (seen[w]) continue;
            seen[w] = true;
            ++reached;
            stack.push_back(w);
        }
    }
    return reached == g.order();
}

inline bool has_isolated_vertex(const Graph& g) {
    for (std::size_t v = 1; v <= g.order(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

}  // namespace rdist
