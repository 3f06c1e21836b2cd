#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "supraclust/network.hpp"

namespace supraclust {

enum class WeightLaw {
  binary,       // every arc has weight 1
  uniform,      // uniform on (0, 1]
  lognormal,    // heavy-tailed, trade-flow like
};

/// Each of the NL(NL-1) off-diagonal supra positions carries an arc with
/// probability `arc_probability`, independently. Reproducible for a given seed
/// on a given standard library.
template <typename Scalar = double>
BasicMultilayerNetwork<Scalar> random_network(Index num_nodes, Index num_layers,
                                              double arc_probability, std::uint64_t seed,
                                              WeightLaw law = WeightLaw::uniform) {
  std::mt19937_64 engine(seed);
  std::bernoulli_distribution arc(arc_probability);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::lognormal_distribution<double> heavy(0.0, 2.0);

  const Index order = num_nodes * num_layers;
  Matrix<Scalar> supra = Matrix<Scalar>::Zero(order, order);
  for (Index h = 0; h < order; ++h) {
    for (Index k = 0; k < order; ++k) {
      if (h == k || !arc(engine)) continue;
      switch (law) {
        case WeightLaw::binary: supra(h, k) = Scalar(1); break;
        case WeightLaw::uniform: supra(h, k) = static_cast<Scalar>(1.0 - unit(engine)); break;
        case WeightLaw::lognormal: supra(h, k) = static_cast<Scalar>(heavy(engine)); break;
      }
    }
  }
  return make_network(num_nodes, num_layers, supra);
}

/// Synthetic stand-in for a world input-output snapshot: 44 countries,
/// 55 sectors (supra order 2420), about 20% of the possible arcs present,
/// heavy-tailed flows. Labels are C00..C43 and S00..S54.
inline MultilayerNetwork synthetic_trade_network(std::uint64_t seed = 2014, Index countries = 44,
                                                 Index sectors = 55, double density = 0.2) {
  auto base = random_network<double>(countries, sectors, density, seed, WeightLaw::lognormal);
  auto label = [](char prefix, Index i) {
    std::string s(1, prefix);
    if (i < 10) s += '0';
    return s + std::to_string(i);
  };
  std::vector<std::string> nodes, layers;
  for (Index i = 0; i < countries; ++i) nodes.push_back(label('C', i));
  for (Index a = 0; a < sectors; ++a) layers.push_back(label('S', a));
  return {std::move(nodes), std::move(layers), base.supra()};
}

}  // namespace supraclust
