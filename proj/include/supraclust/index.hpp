#pragma once

#include <Eigen/Core>
#include <string>

#include "supraclust/errors.hpp"

namespace supraclust {

using Index = Eigen::Index;

// Position of node `node` on layer `layer` inside the supra structure.
// All indices are zero-based: h = N * layer + node.
struct NodeLayerIndex {
  Index node = 0;
  Index layer = 0;

  friend bool operator==(const NodeLayerIndex&, const NodeLayerIndex&) = default;
};

inline Index flat_index(Index node, Index layer, Index num_nodes, Index num_layers) {
  if (num_nodes < 1 || num_layers < 1) {
    throw IndexError("flat_index: network has no node-layer pairs");
  }
  if (node < 0 || node >= num_nodes) {
    throw IndexError("node index " + std::to_string(node) + " out of range [0, " +
                     std::to_string(num_nodes) + ")");
  }
  if (layer < 0 || layer >= num_layers) {
    throw IndexError("layer index " + std::to_string(layer) + " out of range [0, " +
                     std::to_string(num_layers) + ")");
  }
  return num_nodes * layer + node;
}

inline NodeLayerIndex unflatten(Index flat, Index num_nodes, Index num_layers) {
  if (num_nodes < 1 || num_layers < 1 || flat < 0 || flat >= num_nodes * num_layers) {
    throw IndexError("flat index " + std::to_string(flat) + " out of range");
  }
  return {flat % num_nodes, flat / num_nodes};
}

}  // namespace supraclust
