#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <string>

#include "supraclust/network.hpp"

namespace supraclust {

using CountMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using CountVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// S = A + A^T with entries in {0, 1, 2}; 2 marks a reciprocated pair.
template <typename Derived>
Matrix<typename Derived::Scalar> symmetrized_pattern(const Eigen::MatrixBase<Derived>& weights) {
  const auto a = binary_pattern(weights);
  return a + a.transpose();
}

/// diag(X * Y) without forming the product.
template <typename DerivedX, typename DerivedY>
Vector<typename DerivedX::Scalar> product_diagonal(const Eigen::MatrixBase<DerivedX>& x,
                                                   const Eigen::MatrixBase<DerivedY>& y) {
  return x.cwiseProduct(y.transpose()).rowwise().sum();
}

/// Exact triangle counts T_i^[alpha] = ((A + A^T)^3)_hh / 2 and their sums.
///
/// per_node_layer is N x L, so the flat index h = N*alpha + i is its
/// column-major storage order.
struct TriangleCensus {
  CountMatrix per_node_layer;
  CountVector per_node;
  CountVector per_layer;
  std::int64_t total = 0;

  std::int64_t at(Index node, Index layer) const { return per_node_layer(node, layer); }
};

/// Builds the census from the symmetrized pattern and its square.
///
/// The supra diagonal is zero, so every diagonal entry of the cube is even and
/// the halved counts are integers. Entries are integers below 2^53, which
/// makes the double products exact.
template <typename Scalar>
TriangleCensus census_from_square(const Matrix<Scalar>& sym, const Matrix<Scalar>& sym_squared,
                                  Index num_nodes, Index num_layers) {
  const Vector<Scalar> cube_diag = product_diagonal(sym, sym_squared);
  TriangleCensus census;
  census.per_node_layer.resize(num_nodes, num_layers);
  for (Index h = 0; h < cube_diag.size(); ++h) {
    census.per_node_layer(h % num_nodes, h / num_nodes) =
        static_cast<std::int64_t>(std::llround(cube_diag(h))) / 2;
  }
  census.per_node = census.per_node_layer.rowwise().sum();
  census.per_layer = census.per_node_layer.colwise().sum().transpose();
  census.total = census.per_node_layer.sum();
  return census;
}

/// One matrix product S^2 plus the diagonal contraction diag(S S^2).
template <typename Scalar>
TriangleCensus triangle_census(const BasicMultilayerNetwork<Scalar>& net) {
  const Matrix<Scalar> sym = symmetrized_pattern(net.supra());
  const Matrix<Scalar> sym_squared = sym * sym;
  return census_from_square(sym, sym_squared, net.num_nodes(), net.num_layers());
}

/// Single-pair query: ((A + A^T)^3)_hh / 2 as the quadratic form s_h^T S s_h.
template <typename Scalar>
std::int64_t triangle_count(const BasicMultilayerNetwork<Scalar>& net, Index node, Index layer) {
  const Index h = net.index_of(node, layer);
  const Matrix<Scalar> sym = symmetrized_pattern(net.supra());
  const Vector<Scalar> walk = sym * sym.col(h);
  return static_cast<std::int64_t>(std::llround(sym.row(h).dot(walk))) / 2;
}

inline constexpr Index kOracleMaxOrder = 60;

/// Brute-force count by explicit enumeration of ordered pairs (k1, k2) of
/// distinct supra-indices different from h. Independent of the matrix-product
/// path; only for NL <= kOracleMaxOrder.
template <typename Scalar>
std::int64_t triangle_oracle(const BasicMultilayerNetwork<Scalar>& net, Index node, Index layer) {
  const Index h = net.index_of(node, layer);
  const Index n = net.order();
  if (n > kOracleMaxOrder) {
    throw OversizeError("triangle_oracle: order " + std::to_string(n) + " exceeds " +
                        std::to_string(kOracleMaxOrder));
  }
  const auto& w = net.supra();
  auto link = [&](Index u, Index v) -> std::int64_t {
    return (w(u, v) > Scalar(0) ? 1 : 0) + (w(v, u) > Scalar(0) ? 1 : 0);
  };
  std::int64_t closed_walks = 0;
  for (Index k1 = 0; k1 < n; ++k1) {
    if (k1 == h) continue;
    const std::int64_t first = link(h, k1);
    if (first == 0) continue;
    for (Index k2 = 0; k2 < n; ++k2) {
      if (k2 == h || k2 == k1) continue;
      closed_walks += first * link(k1, k2) * link(k2, h);
    }
  }
  return closed_walks / 2;
}

}  // namespace supraclust
