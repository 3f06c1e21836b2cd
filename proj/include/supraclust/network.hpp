#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "supraclust/errors.hpp"
#include "supraclust/index.hpp"

namespace supraclust {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Node-aligned, weighted, directed multilayer network.
///
/// The supra-adjacency matrix has order N*L and is laid out in L x L blocks of
/// order N; entry (h, k) with h = N*alpha + i and k = N*beta + j is the weight
/// of the arc from node i on layer alpha to node j on layer beta. A zero entry
/// means "no arc". Intra-layer self-loops are not part of the model, so the
/// diagonal of every diagonal block (hence of the whole matrix) is zero.
/// Inter-layer self-pairs (i, alpha) -> (i, beta), alpha != beta, are allowed.
///
/// Instances are immutable once constructed.
template <typename Scalar_>
class BasicMultilayerNetwork {
 public:
  using Scalar = Scalar_;
  using MatrixType = Matrix<Scalar>;

  BasicMultilayerNetwork() = default;

  /// Validates every invariant and throws InvalidNetworkError on violation.
  BasicMultilayerNetwork(std::vector<std::string> node_labels,
                         std::vector<std::string> layer_labels, MatrixType supra)
      : node_labels_(std::move(node_labels)),
        layer_labels_(std::move(layer_labels)),
        supra_(std::move(supra)) {
    validate();
  }

  Index num_nodes() const { return static_cast<Index>(node_labels_.size()); }
  Index num_layers() const { return static_cast<Index>(layer_labels_.size()); }
  Index order() const { return supra_.rows(); }

  const std::vector<std::string>& node_labels() const { return node_labels_; }
  const std::vector<std::string>& layer_labels() const { return layer_labels_; }
  const MatrixType& supra() const { return supra_; }

  Index index_of(Index node, Index layer) const {
    return flat_index(node, layer, num_nodes(), num_layers());
  }
  NodeLayerIndex locate(Index flat) const { return unflatten(flat, num_nodes(), num_layers()); }

  Scalar weight(Index node_from, Index layer_from, Index node_to, Index layer_to) const {
    return supra_(index_of(node_from, layer_from), index_of(node_to, layer_to));
  }

  /// W^[alpha beta]: arcs from layer `from` to layer `to`.
  auto block(Index from, Index to) const {
    check_layer(from);
    check_layer(to);
    const Index n = num_nodes();
    return supra_.block(n * from, n * to, n, n);
  }

  bool empty() const { return supra_.size() == 0 || (supra_.array() == Scalar(0)).all(); }

  void check_node(Index node) const {
    if (node < 0 || node >= num_nodes()) {
      throw IndexError("node index " + std::to_string(node) + " out of range [0, " +
                       std::to_string(num_nodes()) + ")");
    }
  }
  void check_layer(Index layer) const {
    if (layer < 0 || layer >= num_layers()) {
      throw IndexError("layer index " + std::to_string(layer) + " out of range [0, " +
                       std::to_string(num_layers()) + ")");
    }
  }

  friend bool operator==(const BasicMultilayerNetwork& a, const BasicMultilayerNetwork& b) {
    return a.node_labels_ == b.node_labels_ && a.layer_labels_ == b.layer_labels_ &&
           a.supra_.rows() == b.supra_.rows() && a.supra_ == b.supra_;
  }

 private:
  static void check_unique(const std::vector<std::string>& labels, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& label : labels) {
      if (label.empty()) throw InvalidNetworkError(std::string("empty ") + what + " label");
      if (!seen.insert(label).second) {
        throw InvalidNetworkError(std::string("duplicate ") + what + " label '" + label + "'");
      }
    }
  }

  void validate() const {
    check_unique(node_labels_, "node");
    check_unique(layer_labels_, "layer");
    const Index expected = num_nodes() * num_layers();
    if (supra_.rows() != expected || supra_.cols() != expected) {
      throw InvalidNetworkError("supra-adjacency must be square of order N*L = " +
                                std::to_string(expected));
    }
    for (Index k = 0; k < supra_.cols(); ++k) {
      for (Index h = 0; h < supra_.rows(); ++h) {
        const Scalar w = supra_(h, k);
        if (!std::isfinite(w) || w < Scalar(0)) {
          throw InvalidNetworkError("weight at (" + std::to_string(h) + ", " + std::to_string(k) +
                                    ") is negative or not finite");
        }
      }
      if (supra_(k, k) != Scalar(0)) {
        throw InvalidNetworkError("intra-layer self-loop at flat index " + std::to_string(k));
      }
    }
  }

  std::vector<std::string> node_labels_;
  std::vector<std::string> layer_labels_;
  MatrixType supra_;
};

using MultilayerNetwork = BasicMultilayerNetwork<double>;

/// Accumulates arcs into a network. Intra-layer self-loops are dropped and
/// counted; repeated arcs are summed.
template <typename Scalar>
class BasicNetworkBuilder {
 public:
  BasicNetworkBuilder(std::vector<std::string> node_labels, std::vector<std::string> layer_labels)
      : node_labels_(std::move(node_labels)), layer_labels_(std::move(layer_labels)) {
    const Index order = static_cast<Index>(node_labels_.size() * layer_labels_.size());
    supra_ = Matrix<Scalar>::Zero(order, order);
  }

  BasicNetworkBuilder& add_arc(Index node_from, Index layer_from, Index node_to, Index layer_to,
                               Scalar weight) {
    const Index n = static_cast<Index>(node_labels_.size());
    const Index l = static_cast<Index>(layer_labels_.size());
    const Index h = flat_index(node_from, layer_from, n, l);
    const Index k = flat_index(node_to, layer_to, n, l);
    if (!std::isfinite(weight) || weight < Scalar(0)) {
      throw InvalidNetworkError("arc weight must be nonnegative and finite");
    }
    if (h == k) {
      ++self_loops_dropped_;
      return *this;
    }
    supra_(h, k) += weight;
    return *this;
  }

  std::size_t self_loops_dropped() const { return self_loops_dropped_; }

  BasicMultilayerNetwork<Scalar> build() const {
    return BasicMultilayerNetwork<Scalar>(node_labels_, layer_labels_, supra_);
  }

 private:
  std::vector<std::string> node_labels_;
  std::vector<std::string> layer_labels_;
  Matrix<Scalar> supra_;
  std::size_t self_loops_dropped_ = 0;
};

using NetworkBuilder = BasicNetworkBuilder<double>;

/// Default labels "n0".."n{N-1}" and "l0".."l{L-1}".
inline std::vector<std::string> numbered_labels(const std::string& prefix, Index count) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(count));
  for (Index i = 0; i < count; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

/// Network with default labels; the supra matrix must already satisfy the invariants.
template <typename Derived>
BasicMultilayerNetwork<typename Derived::Scalar> make_network(Index num_nodes, Index num_layers,
                                                              const Eigen::MatrixBase<Derived>& supra) {
  return {numbered_labels("n", num_nodes), numbered_labels("l", num_layers), supra.eval()};
}

/// A = [w > 0]: the unweighted version of the supra structure.
template <typename Derived>
auto binary_pattern(const Eigen::MatrixBase<Derived>& weights) {
  using Scalar = typename Derived::Scalar;
  return (weights.array() > Scalar(0)).template cast<Scalar>().matrix();
}

template <typename Scalar>
BasicMultilayerNetwork<Scalar> binarize(const BasicMultilayerNetwork<Scalar>& net) {
  return {net.node_labels(), net.layer_labels(), binary_pattern(net.supra())};
}

enum class Normalization { none, global_max, global_max_cube_root };

/// Entries divided by the single global maximum of the supra matrix, optionally
/// followed by a cube root. The zero pattern is preserved and the largest
/// entry of the result is 1. Throws DegenerateInputError on an all-zero network.
template <typename Scalar>
Matrix<Scalar> normalized_weights(const Matrix<Scalar>& weights, Normalization scheme) {
  if (scheme == Normalization::none) return weights;
  const Scalar max = weights.size() == 0 ? Scalar(0) : weights.maxCoeff();
  if (!(max > Scalar(0))) {
    throw DegenerateInputError("normalization of a network without arcs is undefined");
  }
  Matrix<Scalar> scaled = weights / max;
  if (scheme == Normalization::global_max_cube_root) {
    scaled = scaled.unaryExpr([](Scalar w) { return std::cbrt(w); });
  }
  return scaled;
}

template <typename Scalar>
BasicMultilayerNetwork<Scalar> normalize(const BasicMultilayerNetwork<Scalar>& net,
                                         Normalization scheme) {
  return {net.node_labels(), net.layer_labels(), normalized_weights(net.supra(), scheme)};
}

/// Uniform positive rescaling of every weight.
template <typename Scalar>
BasicMultilayerNetwork<Scalar> scaled(const BasicMultilayerNetwork<Scalar>& net, Scalar factor) {
  return {net.node_labels(), net.layer_labels(), net.supra() * factor};
}

/// The intra-layer block of `layer` as a standalone single-layer network.
template <typename Scalar>
BasicMultilayerNetwork<Scalar> layer_subnetwork(const BasicMultilayerNetwork<Scalar>& net,
                                                Index layer) {
  Matrix<Scalar> intra = net.block(layer, layer);
  return {net.node_labels(), {net.layer_labels()[static_cast<std::size_t>(layer)]},
          std::move(intra)};
}

}  // namespace supraclust
