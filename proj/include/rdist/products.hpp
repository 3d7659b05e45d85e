#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rdist/graph.hpp"
#include "rdist/linalg.hpp"
#include "rdist/matrix.hpp"

namespace rdist {

enum class Product { corona, ncorona };

inline std::string_view product_name(Product p) noexcept {
    return p == Product::corona ? "corona" : "ncorona";
}

/// Whether G1 must be regular, as in the classical statements of the block
/// formulas. The formulas only need the leading block to be invertible, so the
/// default accepts any G1.
enum class Regularity { any, require };

// Vertex layout shared by both products: hosts v_1..v_n1 come first, then the
// groups W_1..W_n2 where W_j = {w_j^1, ..., w_j^n1}; the copy index i varies
// fastest inside a group.

/// 1-based position of host vertex v_i.
constexpr std::size_t host_index(std::size_t i) noexcept { return i; }

/// 1-based position of w_j^i, the copy of G2-vertex j attached to host i.
constexpr std::size_t copy_index(std::size_t n1, std::size_t i, std::size_t j) noexcept {
    return n1 + (j - 1) * n1 + i;
}

/// Row labels "v1".."vn1" followed by "w<j>^<i>" grouped by j.
inline std::vector<std::string> product_labels(std::size_t n1, std::size_t n2) {
    std::vector<std::string> labels;
    labels.reserve(n1 * (n2 + 1));
    for (std::size_t i = 1; i <= n1; ++i) labels.push_back("v" + std::to_string(i));
    for (std::size_t j = 1; j <= n2; ++j)
        for (std::size_t i = 1; i <= n1; ++i)
            labels.push_back("w" + std::to_string(j) + "^" + std::to_string(i));
    return labels;
}

namespace detail {

inline void append_copies(const Graph& g2, std::size_t n1, std::vector<Edge>& edges) {
    for (std::size_t i = 1; i <= n1; ++i)
        for (auto [a, b] : g2.edges()) edges.emplace_back(copy_index(n1, i, a), copy_index(n1, i, b));
}

inline void check_regularity(const Graph& g1, Regularity policy) {
    if (policy == Regularity::require && !is_regular(g1))
        throw Error(Errc::not_regular, "G1 is not regular");
}

}  // namespace detail

/// G1 o G2: host v_i is joined to every vertex of the i-th copy of G2.
inline Graph corona(const Graph& g1, const Graph& g2) {
    const std::size_t n1 = g1.order(), n2 = g2.order();
    std::vector<Edge> edges(g1.edges());
    detail::append_copies(g2, n1, edges);
    for (std::size_t i = 1; i <= n1; ++i)
        for (std::size_t j = 1; j <= n2; ++j) edges.emplace_back(host_index(i), copy_index(n1, i, j));
    return Graph::from_edges(n1 * (n2 + 1), edges);
}

/// G1 <> G2: every G1-neighbour of host v_i is joined to every vertex of the
/// i-th copy of G2. Requires n1 >= 2 (with one host the copy stays detached).
inline Graph neighborhood_corona(const Graph& g1, const Graph& g2) {
    const std::size_t n1 = g1.order(), n2 = g2.order();
    if (n1 < 2) throw Error(Errc::too_small, "neighborhood corona needs at least 2 host vertices");
    std::vector<Edge> edges(g1.edges());
    detail::append_copies(g2, n1, edges);
    for (std::size_t i = 1; i <= n1; ++i)
        for (auto u : g1.neighbors(i))
            for (std::size_t j = 1; j <= n2; ++j) edges.emplace_back(host_index(u), copy_index(n1, i, j));
    return Graph::from_edges(n1 * (n2 + 1), edges);
}

inline Graph product_graph(Product kind, const Graph& g1, const Graph& g2) {
    return kind == Product::corona ? corona(g1, g2) : neighborhood_corona(g1, g2);
}

/// Laplacian of a product graph partitioned as [[l1, l2], [l2^T, l3]] with
/// the hosts in the leading block.
struct BlockLaplacian {
    Matrix<Rational> l1;  // n1 x n1
    Matrix<Rational> l2;  // n1 x n1*n2
    Matrix<Rational> l3;  // n1*n2 x n1*n2
    Product ordering = Product::corona;

    std::size_t host_count() const noexcept { return l1.rows(); }
    std::size_t copy_size() const noexcept { return host_count() == 0 ? 0 : l3.rows() / host_count(); }

    PartitionedMatrix<Rational> partitioned() const { return {l1, l2, l2.transpose(), l3}; }
    Matrix<Rational> assembled() const { return partitioned().assemble(); }
};

/// l1 = L(G1) + n2 I, l2 = -1^T (x) I, l3 = (L(G2) + I) (x) I.
inline BlockLaplacian corona_block_laplacian(const Graph& g1, const Graph& g2,
                                             Regularity policy = Regularity::any) {
    detail::check_regularity(g1, policy);
    const std::size_t n1 = g1.order(), n2 = g2.order();
    const auto eye1 = identity(n1);
    return {
        laplacian(g1) + eye1 * Rational(static_cast<long>(n2)),
        -kronecker(ones_vector(n2).transpose(), eye1),
        kronecker(laplacian(g2) + identity(n2), eye1),
        Product::corona,
    };
}

/// l1 = L(G1) + n2 D(G1), l2 = -1^T (x) A(G1), l3 = L(G2) (x) I + I (x) D(G1).
inline BlockLaplacian ncorona_block_laplacian(const Graph& g1, const Graph& g2,
                                              Regularity policy = Regularity::any) {
    if (g1.order() < 2) throw Error(Errc::too_small, "neighborhood corona needs at least 2 host vertices");
    detail::check_regularity(g1, policy);
    const std::size_t n1 = g1.order(), n2 = g2.order();
    const auto adj = adjacency_matrix(g1);
    const auto deg = degree_matrix(g1);
    return {
        laplacian(g1) + deg * Rational(static_cast<long>(n2)),
        -kronecker(ones_vector(n2).transpose(), adj),
        kronecker(laplacian(g2), identity(n1)) + kronecker(identity(n2), deg),
        Product::ncorona,
    };
}

inline BlockLaplacian block_laplacian(Product kind, const Graph& g1, const Graph& g2,
                                      Regularity policy = Regularity::any) {
    return kind == Product::corona ? corona_block_laplacian(g1, g2, policy)
                                   : ncorona_block_laplacian(g1, g2, policy);
}

}  // namespace rdist
