#pragma once

#include <cstddef>

#include "rdist/graph.hpp"
#include "rdist/linalg.hpp"
#include "rdist/matrix.hpp"
#include "rdist/products.hpp"

namespace rdist {

enum class InverseSource { corona_theorem, ncorona_theorem, direct_oracle };

/// A symmetric {1}-inverse of some graph Laplacian, tagged with how it was built.
struct GInverse {
    Matrix<Rational> h;
    InverseSource source = InverseSource::direct_oracle;
};

/// Pairwise effective resistances; symmetric with a zero diagonal.
struct ResistanceMatrix {
    Matrix<Rational> r;

    std::size_t size() const noexcept { return r.rows(); }
    const Rational& operator()(std::size_t i, std::size_t j) const { return r(i, j); }
    friend bool operator==(const ResistanceMatrix&, const ResistanceMatrix&) = default;
};

/// S = l3 - J (x) l1^-1 for a corona block Laplacian.
inline Matrix<Rational> schur_S_corona(const BlockLaplacian& bl) {
    return bl.l3 - kronecker(all_ones(bl.copy_size()), invert(bl.l1));
}

/// S = l3 - J (x) (A^T l1^-1 A) for a neighborhood-corona block Laplacian,
/// where A = A(G1) is read back from l2 = -1^T (x) A.
inline Matrix<Rational> schur_S_ncorona(const BlockLaplacian& bl) {
    const std::size_t n1 = bl.host_count();
    const auto adj = -bl.l2.block(0, 0, n1, n1);
    return bl.l3 - kronecker(all_ones(bl.copy_size()), adj.transpose() * invert(bl.l1) * adj);
}

inline Matrix<Rational> schur_S(const BlockLaplacian& bl) {
    return bl.ordering == Product::corona ? schur_S_corona(bl) : schur_S_ncorona(bl);
}

/// Assembles
///   [[ l1^-1 + l1^-1 l2 S# l2^T l1^-1,  -l1^-1 l2 S# ],
///    [ -S# l2^T l1^-1,                   S#          ]]
/// which is a symmetric {1}-inverse of the assembled Laplacian whenever S# is
/// the group inverse of its Schur complement.
inline GInverse one_inverse_from_blocks(const BlockLaplacian& bl, const Matrix<Rational>& s_sharp) {
    if (!s_sharp.is_square() || s_sharp.rows() != bl.l3.rows())
        throw Error(Errc::dim_mismatch, "S# is " + s_sharp.shape() + " but l3 is " + bl.l3.shape());
    const auto l1_inv = invert(bl.l1);
    const auto upper_right = -(l1_inv * bl.l2 * s_sharp);
    const auto lower_left = upper_right.transpose();
    PartitionedMatrix<Rational> x{
        l1_inv - upper_right * bl.l2.transpose() * l1_inv,
        upper_right,
        lower_left,
        s_sharp,
    };
    return {x.assemble(), bl.ordering == Product::corona ? InverseSource::corona_theorem
                                                         : InverseSource::ncorona_theorem};
}

/// Every intermediate of the block route, kept for certification.
struct ProductInverse {
    BlockLaplacian blocks;
    Matrix<Rational> schur;
    Matrix<Rational> schur_sharp;
    GInverse inverse;
};

inline ProductInverse product_inverse(Product kind, const Graph& g1, const Graph& g2,
                                      Regularity policy = Regularity::any) {
    if (kind == Product::ncorona && (g1.order() < 2 || has_isolated_vertex(g1)))
        throw Error(Errc::isolated_vertex, "G1 has an isolated vertex; the neighborhood corona is disconnected");
    if (!is_connected(g1)) throw Error(Errc::not_connected, "G1 is not connected");

    ProductInverse out;
    out.blocks = block_laplacian(kind, g1, g2, policy);
    out.schur = schur_S(out.blocks);
    out.schur_sharp = group_inverse_laplacian_like(out.schur);
    out.inverse = one_inverse_from_blocks(out.blocks, out.schur_sharp);
    return out;
}

inline GInverse g_inverse_corona(const Graph& g1, const Graph& g2, Regularity policy = Regularity::any) {
    return product_inverse(Product::corona, g1, g2, policy).inverse;
}

inline GInverse g_inverse_ncorona(const Graph& g1, const Graph& g2, Regularity policy = Regularity::any) {
    return product_inverse(Product::ncorona, g1, g2, policy).inverse;
}

/// r_ij = h_ii + h_jj - h_ij - h_ji; valid for any {1}-inverse h.
inline ResistanceMatrix resistance_from_ginverse(const GInverse& g) {
    const auto& h = g.h;
    const std::size_t n = h.rows();
    Matrix<Rational> r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) r(i, j) = h(i, i) + h(j, j) - h(i, j) - h(j, i);
    return {std::move(r)};
}

/// Group inverse of the whole Laplacian.
inline GInverse direct_group_inverse(const Graph& g) {
    if (!is_connected(g)) throw Error(Errc::not_connected, "graph is not connected");
    return {group_inverse_laplacian_like(laplacian(g)), InverseSource::direct_oracle};
}

/// Resistances from L#: r_ij = L#_ii + L#_jj - 2 L#_ij. Independent of the
/// block route; used as the oracle for product graphs.
inline ResistanceMatrix resistance_direct(const Graph& g) {
    const auto h = direct_group_inverse(g).h;
    const std::size_t n = h.rows();
    Matrix<Rational> r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) r(i, j) = h(i, i) + h(j, j) - 2 * h(i, j);
    return {std::move(r)};
}

/// Sum of r_ij over unordered pairs.
inline Rational kirchhoff_index(const ResistanceMatrix& rm) {
    Rational sum = 0;
    for (std::size_t i = 0; i < rm.size(); ++i)
        for (std::size_t j = i + 1; j < rm.size(); ++j) sum += rm(i, j);
    return sum;
}

}  // namespace rdist
