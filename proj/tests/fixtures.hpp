#pragma once

#include <initializer_list>
#include <tuple>

#include "supraclust/network.hpp"

namespace supraclust::fixtures {

// (from_node, from_layer, to_node, to_layer, weight), zero-based.
using Arc = std::tuple<Index, Index, Index, Index, double>;

inline MultilayerNetwork from_arcs(Index nodes, Index layers, std::initializer_list<Arc> arcs) {
  NetworkBuilder builder(numbered_labels("n", nodes), numbered_labels("l", layers));
  for (const auto& [i, a, j, b, w] : arcs) builder.add_arc(i, a, j, b, w);
  return builder.build();
}

// 1 -> 2 -> 3 -> 1 on a single layer, unit weights.
inline MultilayerNetwork cycle() {
  return from_arcs(3, 1, {{0, 0, 1, 0, 1.0}, {1, 0, 2, 0, 1.0}, {2, 0, 0, 0, 1.0}});
}

// Every off-diagonal supra position carries an arc of weight `w`.
inline MultilayerNetwork complete(Index nodes, Index layers, double w = 1.0) {
  const Index n = nodes * layers;
  Matrix<double> supra = Matrix<double>::Constant(n, n, w);
  supra.diagonal().setZero();
  return make_network(nodes, layers, supra);
}

inline MultilayerNetwork empty(Index nodes, Index layers) {
  const Index n = nodes * layers;
  return make_network(nodes, layers, Matrix<double>::Zero(n, n));
}

// Two copies of `single` as the diagonal blocks, no inter-layer arcs.
inline MultilayerNetwork duplicated_layers(const MultilayerNetwork& single) {
  const Index n = single.num_nodes();
  Matrix<double> supra = Matrix<double>::Zero(2 * n, 2 * n);
  supra.topLeftCorner(n, n) = single.supra();
  supra.bottomRightCorner(n, n) = single.supra();
  return make_network(n, 2, supra);
}

}  // namespace supraclust::fixtures
