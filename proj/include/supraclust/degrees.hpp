#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "supraclust/network.hpp"

namespace supraclust {

// in: arcs into h from any layer; out: arcs leaving h; total: in + out;
// bilateral: reciprocated pairs (h -> k and k -> h), counted once per partner.
enum class Direction { in, out, total, bilateral };

using DegreeVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

namespace detail {

// Sums run in increasing k so results are reproducible bit for bit.
template <typename Derived>
std::int64_t degree_at(const Eigen::MatrixBase<Derived>& w, Index h, Direction dir) {
  using Scalar = typename Derived::Scalar;
  std::int64_t in = 0, out = 0, both = 0;
  for (Index k = 0; k < w.cols(); ++k) {
    const bool to = w(h, k) > Scalar(0);
    const bool from = w(k, h) > Scalar(0);
    out += to;
    in += from;
    both += to && from;
  }
  switch (dir) {
    case Direction::in: return in;
    case Direction::out: return out;
    case Direction::total: return in + out;
    case Direction::bilateral: return both;
  }
  return 0;
}

// Bilateral strength is (WA + AW)_hh / 2: each reciprocated pair contributes
// the arithmetic mean of its two weights.
template <typename Derived>
typename Derived::Scalar strength_at(const Eigen::MatrixBase<Derived>& w, Index h, Direction dir) {
  using Scalar = typename Derived::Scalar;
  Scalar in(0), out(0), both(0);
  for (Index k = 0; k < w.cols(); ++k) {
    const Scalar to = w(h, k);
    const Scalar from = w(k, h);
    out += to;
    in += from;
    if (to > Scalar(0) && from > Scalar(0)) both += to + from;
  }
  switch (dir) {
    case Direction::in: return in;
    case Direction::out: return out;
    case Direction::total: return in + out;
    case Direction::bilateral: return both / Scalar(2);
  }
  return Scalar(0);
}

}  // namespace detail

/// Degree of every node-layer pair, indexed by flat index h.
template <typename Derived>
DegreeVector degree_vector(const Eigen::MatrixBase<Derived>& weights, Direction dir) {
  DegreeVector out(weights.rows());
  for (Index h = 0; h < weights.rows(); ++h) out(h) = detail::degree_at(weights, h, dir);
  return out;
}

/// Strength of every node-layer pair, indexed by flat index h.
template <typename Derived>
Vector<typename Derived::Scalar> strength_vector(const Eigen::MatrixBase<Derived>& weights,
                                                 Direction dir) {
  Vector<typename Derived::Scalar> out(weights.rows());
  for (Index h = 0; h < weights.rows(); ++h) out(h) = detail::strength_at(weights, h, dir);
  return out;
}

template <typename Scalar>
std::int64_t node_layer_degree(const BasicMultilayerNetwork<Scalar>& net, Index node, Index layer,
                               Direction dir) {
  return detail::degree_at(net.supra(), net.index_of(node, layer), dir);
}

/// Degree summed over all layers.
template <typename Scalar>
std::int64_t node_degree(const BasicMultilayerNetwork<Scalar>& net, Index node, Direction dir) {
  net.check_node(node);
  std::int64_t sum = 0;
  for (Index layer = 0; layer < net.num_layers(); ++layer) {
    sum += node_layer_degree(net, node, layer, dir);
  }
  return sum;
}

template <typename Scalar>
Scalar node_layer_strength(const BasicMultilayerNetwork<Scalar>& net, Index node, Index layer,
                           Direction dir) {
  return detail::strength_at(net.supra(), net.index_of(node, layer), dir);
}

/// Strength summed over all layers.
template <typename Scalar>
Scalar node_strength(const BasicMultilayerNetwork<Scalar>& net, Index node, Direction dir) {
  net.check_node(node);
  Scalar sum(0);
  for (Index layer = 0; layer < net.num_layers(); ++layer) {
    sum += node_layer_strength(net, node, layer, dir);
  }
  return sum;
}

}  // namespace supraclust
