#include "supraclust/report.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "supraclust/errors.hpp"

namespace supraclust {
namespace {

template <typename Block>
double nonzeros(const Block& block) {
  return static_cast<double>((block.array() != 0.0).count());
}

std::optional<double> ratio(double numerator, double denominator) {
  if (denominator == 0.0) return std::nullopt;
  return numerator / denominator;
}

void finish_ratios(StrengthBreakdownRow& row) {
  row.intra_inter_ratio = ratio(row.in_intra + row.out_intra, row.in_inter + row.out_inter);
  row.in_out_ratio = ratio(row.in_intra + row.in_inter, row.out_intra + row.out_inter);
}

}  // namespace

std::vector<DensityRow> densities(const MultilayerNetwork& net) {
  const Index n = net.num_nodes();
  const Index l = net.num_layers();
  if (n < 2) throw DegenerateInputError("densities need at least two nodes");
  const double intra_positions = static_cast<double>(n * (n - 1));
  const double inter_positions = 2.0 * static_cast<double>(n * n);

  std::vector<DensityRow> rows;
  rows.reserve(static_cast<std::size_t>(l));
  for (Index a = 0; a < l; ++a) {
    DensityRow row;
    row.layer = net.layer_labels()[static_cast<std::size_t>(a)];
    row.intra_density = nonzeros(net.block(a, a)) / intra_positions;
    if (l > 1) {
      double sum = 0;
      for (Index b = 0; b < l; ++b) {
        if (b == a) continue;
        sum += (nonzeros(net.block(a, b)) + nonzeros(net.block(b, a))) / inter_positions;
      }
      row.avg_inter_density = sum / static_cast<double>(l - 1);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<StrengthBreakdownRow> strength_breakdown(const MultilayerNetwork& net, BreakdownBy by) {
  const Index n = net.num_nodes();
  const Index l = net.num_layers();
  std::vector<StrengthBreakdownRow> rows;

  if (by == BreakdownBy::layer) {
    for (Index a = 0; a < l; ++a) {
      StrengthBreakdownRow row;
      row.entity = net.layer_labels()[static_cast<std::size_t>(a)];
      row.in_intra = row.out_intra = net.block(a, a).sum();
      for (Index b = 0; b < l; ++b) {
        if (b == a) continue;
        row.in_inter += net.block(b, a).sum();
        row.out_inter += net.block(a, b).sum();
      }
      finish_ratios(row);
      rows.push_back(std::move(row));
    }
    return rows;
  }

  rows.resize(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)].entity = net.node_labels()[static_cast<std::size_t>(i)];
  for (Index a = 0; a < l; ++a) {
    for (Index b = 0; b < l; ++b) {
      const auto block = net.block(a, b);
      const Vector<double> out = block.rowwise().sum();
      const Vector<double> in = block.colwise().sum().transpose();
      for (Index i = 0; i < n; ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        if (a == b) {
          row.out_intra += out(i);
          row.in_intra += in(i);
        } else {
          row.out_inter += out(i);
          row.in_inter += in(i);
        }
      }
    }
  }
  for (auto& row : rows) finish_ratios(row);
  return rows;
}

Ranking rank(const std::vector<std::pair<std::string, double>>& values, bool descending) {
  if (values.empty()) throw ValidationError("cannot rank an empty set");
  std::unordered_set<std::string> seen;
  for (const auto& [entity, value] : values) {
    if (std::isnan(value)) throw ValidationError("NaN value for '" + entity + "'");
    if (!seen.insert(entity).second) throw ValidationError("duplicate entity '" + entity + "'");
  }

  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const double vx = values[x].second, vy = values[y].second;
    if (vx != vy) return descending ? vx > vy : vx < vy;
    return values[x].first < values[y].first;
  });

  Ranking ranking;
  ranking.entries.reserve(values.size());
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t end = start + 1;
    while (end < order.size() && values[order[end]].second == values[order[start]].second) ++end;
    // Positions start+1 .. end share their mean.
    const double shared = 0.5 * static_cast<double>(start + 1 + end);
    for (std::size_t p = start; p < end; ++p) {
      ranking.entries.push_back({values[order[p]].first, values[order[p]].second, shared});
    }
    start = end;
  }
  return ranking;
}

double spearman(const Ranking& first, const Ranking& second) {
  if (first.size() != second.size()) throw ValidationError("rankings cover different entities");
  std::unordered_map<std::string, double> other;
  for (const auto& e : second.entries) other.emplace(e.entity, e.rank);
  if (other.size() != second.size()) throw ValidationError("duplicate entity in ranking");

  const std::size_t n = first.size();
  std::vector<double> x, y;
  x.reserve(n);
  y.reserve(n);
  for (const auto& e : first.entries) {
    const auto it = other.find(e.entity);
    if (it == other.end()) throw ValidationError("entity '" + e.entity + "' missing from ranking");
    x.push_back(e.rank);
    y.push_back(it->second);
  }
  if (n < 2) throw DegenerateInputError("rank correlation needs at least two entities");

  const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mean_x, dy = y[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw DegenerateInputError("constant ranking has no correlation");
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace supraclust
