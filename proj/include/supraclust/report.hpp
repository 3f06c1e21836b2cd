#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supraclust/network.hpp"

namespace supraclust {

/// intra_density: nonzero arcs of W^[aa] over N(N-1).
/// avg_inter_density: mean over b != a of (nnz W^[ab] + nnz W^[ba]) / 2N^2;
/// 0 for a single-layer network.
struct DensityRow {
  std::string layer;
  double intra_density = 0;
  double avg_inter_density = 0;
};

/// Throws DegenerateInputError when N < 2.
std::vector<DensityRow> densities(const MultilayerNetwork& net);

enum class BreakdownBy { node, layer };

/// In/out strength split into intra-layer and inter-layer parts. Ratios are
/// intra / inter (in + out pooled) and in / out; absent on division by zero.
struct StrengthBreakdownRow {
  std::string entity;
  double in_intra = 0;
  double in_inter = 0;
  double out_intra = 0;
  double out_inter = 0;
  std::optional<double> intra_inter_ratio;
  std::optional<double> in_out_ratio;
};

std::vector<StrengthBreakdownRow> strength_breakdown(const MultilayerNetwork& net, BreakdownBy by);

struct RankEntry {
  std::string entity;
  double value = 0;
  double rank = 0;

  friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

/// Entries ordered by rank, ties (equal ranks) by entity name. Tied values
/// share the average of the positions they occupy.
struct Ranking {
  std::vector<RankEntry> entries;

  std::size_t size() const { return entries.size(); }
  friend bool operator==(const Ranking&, const Ranking&) = default;
};

/// Throws ValidationError on an empty input, duplicate entities or NaN values.
Ranking rank(const std::vector<std::pair<std::string, double>>& values, bool descending = true);

/// Pearson correlation of the two rank vectors, matched by entity.
/// Throws ValidationError on differing entity sets and DegenerateInputError
/// with fewer than two entities or a constant rank vector.
double spearman(const Ranking& first, const Ranking& second);

}  // namespace supraclust
