#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "supraclust/degrees.hpp"
#include "supraclust/network.hpp"
#include "supraclust/triangles.hpp"

namespace supraclust {

/// How a triangle is weighted.
///   arith: mean of the two arc weights incident to the focal pair,
///          [(W + W^T)(A + A^T)^2]_hh / 2[s(d - 1) - 2 s_bil]
///   geom:  geometric mean of the three weights after cube-root normalization,
///          ((W^ + W^^T)^3)_hh / 2[d(d - 1) - 2 d_bil]
///   prod:  product of the three symmetrized weights after max normalization,
///          ((W~ + W~^T)^3)_hh / ([s~]^2 - sum_{k != h} (w~_hk + w~_kh)^2)
enum class CoefficientFamily { arith, geom, prod };

inline constexpr CoefficientFamily kAllFamilies[] = {
    CoefficientFamily::arith, CoefficientFamily::geom, CoefficientFamily::prod};

inline std::string_view to_string(CoefficientFamily family) {
  switch (family) {
    case CoefficientFamily::arith: return "arith";
    case CoefficientFamily::geom: return "geom";
    case CoefficientFamily::prod: return "prod";
  }
  return "?";
}

inline std::optional<CoefficientFamily> parse_family(std::string_view name) {
  for (auto family : kAllFamilies) {
    if (to_string(family) == name) return family;
  }
  return std::nullopt;
}

/// A coefficient value. Degenerate values (vanishing denominator) are
/// reported as 0 with the flag set.
template <typename Scalar>
struct Coefficient {
  Scalar value = Scalar(0);
  bool degenerate = true;
};

template <typename Scalar>
struct LocalCoefficient {
  Scalar value = Scalar(0);
  Scalar numerator = Scalar(0);
  Scalar denominator = Scalar(0);
  bool degenerate = true;
};

using FlagVector = Eigen::Array<bool, Eigen::Dynamic, 1>;
using FlagMatrix = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Numerator and denominator of one family for every node-layer pair,
/// indexed by flat index h.
template <typename Scalar>
struct TriadTerms {
  Vector<Scalar> numerator;
  Vector<Scalar> denominator;
  FlagVector degenerate;
};

namespace detail {

// Number of distinct supra-neighbours of h (either direction).
template <typename Derived>
Index neighbour_count(const Eigen::MatrixBase<Derived>& w, Index h) {
  using Scalar = typename Derived::Scalar;
  Index count = 0;
  for (Index k = 0; k < w.cols(); ++k) count += (w(h, k) > Scalar(0) || w(k, h) > Scalar(0));
  return count;
}

// `weights` is the matrix the family reads: raw for arith, normalized for prod.
// geom only depends on the pattern.
template <typename Scalar>
Scalar denominator_at(const Matrix<Scalar>& weights, Index h, CoefficientFamily family) {
  switch (family) {
    case CoefficientFamily::arith: {
      const Scalar s = strength_at(weights, h, Direction::total);
      const Scalar bilateral = strength_at(weights, h, Direction::bilateral);
      const auto d = static_cast<Scalar>(degree_at(weights, h, Direction::total));
      return Scalar(2) * (s * (d - Scalar(1)) - Scalar(2) * bilateral);
    }
    case CoefficientFamily::geom: {
      const std::int64_t d = degree_at(weights, h, Direction::total);
      const std::int64_t bilateral = degree_at(weights, h, Direction::bilateral);
      return static_cast<Scalar>(2 * (d * (d - 1) - 2 * bilateral));
    }
    case CoefficientFamily::prod: {
      const Scalar s = strength_at(weights, h, Direction::total);
      Scalar squares(0);
      for (Index k = 0; k < weights.cols(); ++k) {
        if (k == h) continue;
        const Scalar pair = weights(h, k) + weights(k, h);
        squares += pair * pair;
      }
      return s * s - squares;
    }
  }
  return Scalar(0);
}

// Triads need at least two distinct neighbours; with fewer, every family's
// denominator is zero in exact arithmetic.
template <typename Scalar>
LocalCoefficient<Scalar> finish(Scalar numerator, Scalar denominator, Index neighbours) {
  LocalCoefficient<Scalar> out;
  out.numerator = numerator;
  out.denominator = denominator;
  out.degenerate = neighbours < 2 || !(denominator > Scalar(0));
  out.value = out.degenerate ? Scalar(0) : numerator / denominator;
  return out;
}

template <typename Scalar>
Coefficient<Scalar> pooled(Scalar numerator, Scalar denominator) {
  if (!(denominator > Scalar(0))) return {};
  return {numerator / denominator, false};
}

}  // namespace detail

/// Shared products for the clustering and triangle computations of one
/// network: the symmetrized binary pattern S = A + A^T and S^2 are built once.
template <typename Scalar>
class SupraTriads {
 public:
  explicit SupraTriads(const BasicMultilayerNetwork<Scalar>& net)
      : net_(&net), pattern_(symmetrized_pattern(net.supra())) {
    pattern_squared_.noalias() = pattern_ * pattern_;
  }

  const BasicMultilayerNetwork<Scalar>& network() const { return *net_; }
  const Matrix<Scalar>& pattern() const { return pattern_; }
  const Matrix<Scalar>& pattern_squared() const { return pattern_squared_; }

  TriangleCensus census() const {
    return census_from_square(pattern_, pattern_squared_, net_->num_nodes(), net_->num_layers());
  }

  TriadTerms<Scalar> terms(CoefficientFamily family) const {
    const auto& w = net_->supra();
    const Index n = net_->order();
    TriadTerms<Scalar> out;
    out.numerator = Vector<Scalar>::Zero(n);
    out.denominator = Vector<Scalar>::Zero(n);
    out.degenerate = FlagVector::Constant(n, true);
    if (net_->empty()) return out;

    Matrix<Scalar> family_weights;
    switch (family) {
      case CoefficientFamily::arith: {
        const Matrix<Scalar> sym_weights = w + w.transpose();
        out.numerator = product_diagonal(sym_weights, pattern_squared_);
        break;
      }
      case CoefficientFamily::geom:
      case CoefficientFamily::prod: {
        family_weights = normalized_weights(w, family == CoefficientFamily::geom
                                                   ? Normalization::global_max_cube_root
                                                   : Normalization::global_max);
        const Matrix<Scalar> sym = family_weights + family_weights.transpose();
        Matrix<Scalar> sym_squared(n, n);
        sym_squared.noalias() = sym * sym;
        out.numerator = product_diagonal(sym, sym_squared);
        break;
      }
    }
    const Matrix<Scalar>& denominator_weights =
        family == CoefficientFamily::prod ? family_weights : w;
    for (Index h = 0; h < n; ++h) {
      const Index neighbours = (pattern_.row(h).array() > Scalar(0)).count();
      const auto local = detail::finish(out.numerator(h),
                                        detail::denominator_at(denominator_weights, h, family),
                                        neighbours);
      out.denominator(h) = local.denominator;
      out.degenerate(h) = local.degenerate;
    }
    return out;
  }

 private:
  const BasicMultilayerNetwork<Scalar>* net_;
  Matrix<Scalar> pattern_;
  Matrix<Scalar> pattern_squared_;
};

template <typename Scalar>
TriadTerms<Scalar> triad_terms(const BasicMultilayerNetwork<Scalar>& net,
                               CoefficientFamily family) {
  return SupraTriads<Scalar>(net).terms(family);
}

/// Local coefficient of one node-layer pair via O((NL)^2) matrix-vector work.
template <typename Scalar>
LocalCoefficient<Scalar> local_coefficient(const BasicMultilayerNetwork<Scalar>& net, Index node,
                                           Index layer, CoefficientFamily family) {
  const Index h = net.index_of(node, layer);
  const auto& w = net.supra();
  const Index neighbours = detail::neighbour_count(w, h);
  if (neighbours < 2) return detail::finish(Scalar(0), Scalar(0), neighbours);

  switch (family) {
    case CoefficientFamily::arith: {
      const Matrix<Scalar> sym = symmetrized_pattern(w);
      const Vector<Scalar> walks = sym * sym.col(h);
      const Scalar numerator = (w.row(h) + w.col(h).transpose()).dot(walks);
      return detail::finish(numerator, detail::denominator_at(w, h, family), neighbours);
    }
    case CoefficientFamily::geom:
    case CoefficientFamily::prod: {
      const Matrix<Scalar> normalized =
          normalized_weights(w, family == CoefficientFamily::geom
                                    ? Normalization::global_max_cube_root
                                    : Normalization::global_max);
      const Matrix<Scalar> sym = normalized + normalized.transpose();
      const Vector<Scalar> walks = sym * sym.col(h);
      const Scalar numerator = sym.row(h).dot(walks);
      const Matrix<Scalar>& denominator_weights =
          family == CoefficientFamily::prod ? normalized : w;
      return detail::finish(numerator, detail::denominator_at(denominator_weights, h, family),
                            neighbours);
    }
  }
  return {};
}

template <typename Scalar>
LocalCoefficient<Scalar> local_arith(const BasicMultilayerNetwork<Scalar>& net, Index node,
                                     Index layer) {
  return local_coefficient(net, node, layer, CoefficientFamily::arith);
}

template <typename Scalar>
LocalCoefficient<Scalar> local_geom(const BasicMultilayerNetwork<Scalar>& net, Index node,
                                    Index layer) {
  return local_coefficient(net, node, layer, CoefficientFamily::geom);
}

template <typename Scalar>
LocalCoefficient<Scalar> local_prod(const BasicMultilayerNetwork<Scalar>& net, Index node,
                                    Index layer) {
  return local_coefficient(net, node, layer, CoefficientFamily::prod);
}

/// Node coefficient over all layers: the family's summed numerators over its
/// summed denominators. Degenerate layers contribute to neither sum.
template <typename Scalar>
Coefficient<Scalar> node_coefficient(const BasicMultilayerNetwork<Scalar>& net, Index node,
                                     CoefficientFamily family) {
  net.check_node(node);
  Scalar numerator(0), denominator(0);
  for (Index layer = 0; layer < net.num_layers(); ++layer) {
    const auto local = local_coefficient(net, node, layer, family);
    if (local.degenerate) continue;
    numerator += local.numerator;
    denominator += local.denominator;
  }
  return detail::pooled(numerator, denominator);
}

/// Layer coefficient: sums over the nodes of one layer.
template <typename Scalar>
Coefficient<Scalar> layer_coefficient(const BasicMultilayerNetwork<Scalar>& net, Index layer,
                                      CoefficientFamily family) {
  net.check_layer(layer);
  Scalar numerator(0), denominator(0);
  for (Index node = 0; node < net.num_nodes(); ++node) {
    const auto local = local_coefficient(net, node, layer, family);
    if (local.degenerate) continue;
    numerator += local.numerator;
    denominator += local.denominator;
  }
  return detail::pooled(numerator, denominator);
}

/// All local values plus node, layer and global aggregations of one family.
/// Tables indexed by (node, layer) are N x L.
template <typename Scalar>
struct ClusteringReport {
  CoefficientFamily family = CoefficientFamily::arith;
  Matrix<Scalar> local;
  Matrix<Scalar> numerator;
  Matrix<Scalar> denominator;
  FlagMatrix local_degenerate;
  Vector<Scalar> per_node;
  FlagVector node_degenerate;
  Vector<Scalar> per_layer;
  FlagVector layer_degenerate;
  Scalar global = Scalar(0);
  bool global_degenerate = true;
};

template <typename Scalar>
ClusteringReport<Scalar> report_from_terms(const TriadTerms<Scalar>& terms, Index num_nodes,
                                           Index num_layers, CoefficientFamily family) {
  ClusteringReport<Scalar> report;
  report.family = family;
  report.local_degenerate = terms.degenerate.reshaped(num_nodes, num_layers);
  report.numerator = terms.numerator.reshaped(num_nodes, num_layers);
  report.denominator = terms.denominator.reshaped(num_nodes, num_layers);
  report.local = Matrix<Scalar>::Zero(num_nodes, num_layers);

  // Degenerate entries are excluded from every pooled sum.
  Matrix<Scalar> num = report.numerator;
  Matrix<Scalar> den = report.denominator;
  for (Index layer = 0; layer < num_layers; ++layer) {
    for (Index node = 0; node < num_nodes; ++node) {
      if (report.local_degenerate(node, layer)) {
        num(node, layer) = Scalar(0);
        den(node, layer) = Scalar(0);
      } else {
        report.local(node, layer) = num(node, layer) / den(node, layer);
      }
    }
  }

  const Vector<Scalar> node_num = num.rowwise().sum();
  const Vector<Scalar> node_den = den.rowwise().sum();
  report.per_node.resize(num_nodes);
  report.node_degenerate.resize(num_nodes);
  for (Index i = 0; i < num_nodes; ++i) {
    const auto c = detail::pooled(node_num(i), node_den(i));
    report.per_node(i) = c.value;
    report.node_degenerate(i) = c.degenerate;
  }

  const Vector<Scalar> layer_num = num.colwise().sum().transpose();
  const Vector<Scalar> layer_den = den.colwise().sum().transpose();
  report.per_layer.resize(num_layers);
  report.layer_degenerate.resize(num_layers);
  for (Index a = 0; a < num_layers; ++a) {
    const auto c = detail::pooled(layer_num(a), layer_den(a));
    report.per_layer(a) = c.value;
    report.layer_degenerate(a) = c.degenerate;
  }

  const auto global = detail::pooled(num.sum(), den.sum());
  report.global = global.value;
  report.global_degenerate = global.degenerate;
  return report;
}

template <typename Scalar>
ClusteringReport<Scalar> clustering_report(const SupraTriads<Scalar>& triads,
                                           CoefficientFamily family) {
  const auto& net = triads.network();
  return report_from_terms(triads.terms(family), net.num_nodes(), net.num_layers(), family);
}

template <typename Scalar>
ClusteringReport<Scalar> clustering_report(const BasicMultilayerNetwork<Scalar>& net,
                                           CoefficientFamily family) {
  return clustering_report(SupraTriads<Scalar>(net), family);
}

/// Transitivity of the whole network: all numerators over all denominators.
template <typename Scalar>
Coefficient<Scalar> global_coefficient(const BasicMultilayerNetwork<Scalar>& net,
                                       CoefficientFamily family) {
  const auto report = clustering_report(net, family);
  return {report.global, report.global_degenerate};
}

/// Local coefficients of the intra-layer block of `layer` taken as a
/// standalone single-layer network; inter-layer arcs are ignored.
template <typename Scalar>
struct MonoplexBaseline {
  Vector<Scalar> values;
  FlagVector degenerate;
};

template <typename Scalar>
MonoplexBaseline<Scalar> monoplex_baseline(const BasicMultilayerNetwork<Scalar>& net, Index layer,
                                           CoefficientFamily family) {
  const auto report = clustering_report(layer_subnetwork(net, layer), family);
  return {report.local.col(0), report.local_degenerate.col(0)};
}

/// Per-node mean of the monoplex values over the layers where they are defined.
template <typename Scalar>
MonoplexBaseline<Scalar> monoplex_node_average(const BasicMultilayerNetwork<Scalar>& net,
                                               CoefficientFamily family) {
  const Index n = net.num_nodes();
  Vector<Scalar> sum = Vector<Scalar>::Zero(n);
  Eigen::VectorXi defined = Eigen::VectorXi::Zero(n);
  for (Index layer = 0; layer < net.num_layers(); ++layer) {
    const auto baseline = monoplex_baseline(net, layer, family);
    for (Index i = 0; i < n; ++i) {
      if (baseline.degenerate(i)) continue;
      sum(i) += baseline.values(i);
      ++defined(i);
    }
  }
  MonoplexBaseline<Scalar> out{Vector<Scalar>::Zero(n), FlagVector::Constant(n, true)};
  for (Index i = 0; i < n; ++i) {
    if (defined(i) == 0) continue;
    out.values(i) = sum(i) / static_cast<Scalar>(defined(i));
    out.degenerate(i) = false;
  }
  return out;
}

/// Per-layer pooled coefficient of each standalone intra-layer block.
template <typename Scalar>
MonoplexBaseline<Scalar> monoplex_layer_coefficients(const BasicMultilayerNetwork<Scalar>& net,
                                                     CoefficientFamily family) {
  const Index l = net.num_layers();
  MonoplexBaseline<Scalar> out{Vector<Scalar>::Zero(l), FlagVector::Constant(l, true)};
  for (Index layer = 0; layer < l; ++layer) {
    const auto report = clustering_report(layer_subnetwork(net, layer), family);
    out.values(layer) = report.global;
    out.degenerate(layer) = report.global_degenerate;
  }
  return out;
}

}  // namespace supraclust
