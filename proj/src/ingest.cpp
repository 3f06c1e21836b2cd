#include "supraclust/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "supraclust/csv.hpp"
#include "supraclust/errors.hpp"

namespace supraclust {
namespace {

std::string_view trim_line_end(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
  return line;
}

struct LabelIndex {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Index> position;

  explicit LabelIndex(std::vector<std::string> sorted) : labels(std::move(sorted)) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      position.emplace(labels[i], static_cast<Index>(i));
    }
  }
  Index operator[](const std::string& label) const { return position.at(label); }
};

std::vector<std::string> sorted_unique(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

}  // namespace

ParsedEdges parse_edges(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("missing header line");
  std::string_view header = trim_line_end(line);
  if (header.starts_with("\xEF\xBB\xBF")) header.remove_prefix(3);
  if (header != kEdgeHeader) {
    throw FormatError("header mismatch: expected '" + std::string(kEdgeHeader) + "', got '" +
                      std::string(header) + "'");
  }

  ParsedEdges parsed;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view row = trim_line_end(line);
    if (row.empty()) continue;
    const auto fields = csv::split(row);
    if (fields.size() != 5) {
      parsed.rejects.push_back({line_number, "expected 5 fields, found " +
                                                 std::to_string(fields.size())});
      continue;
    }
    if (std::any_of(fields.begin(), fields.begin() + 4, [](auto f) { return f.empty(); })) {
      parsed.rejects.push_back({line_number, "empty label"});
      continue;
    }
    const auto weight = csv::parse_real(fields[4]);
    if (!weight || std::isnan(*weight)) {
      parsed.rejects.push_back({line_number, "non-numeric weight"});
      continue;
    }
    if (!std::isfinite(*weight)) {
      parsed.rejects.push_back({line_number, "non-finite weight"});
      continue;
    }
    if (*weight <= 0) {
      parsed.rejects.push_back({line_number, "nonpositive weight"});
      continue;
    }
    parsed.records.push_back({std::string(fields[0]), std::string(fields[1]),
                              std::string(fields[2]), std::string(fields[3]), *weight});
  }
  return parsed;
}

ParsedEdges parse_edges(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return parse_edges(in);
}

BuiltNetwork build_network(std::span<const EdgeRecord> edges, MergePolicy merge) {
  if (edges.empty()) throw ValidationError("cannot build a network from an empty edge list");

  std::vector<std::string> node_labels, layer_labels;
  node_labels.reserve(2 * edges.size());
  layer_labels.reserve(2 * edges.size());
  for (const auto& e : edges) {
    node_labels.push_back(e.origin_node);
    node_labels.push_back(e.dest_node);
    layer_labels.push_back(e.origin_layer);
    layer_labels.push_back(e.dest_layer);
  }
  const LabelIndex nodes(sorted_unique(std::move(node_labels)));
  const LabelIndex layers(sorted_unique(std::move(layer_labels)));

  BuiltNetwork built;
  built.report.edges_read = edges.size();
  NetworkBuilder builder(nodes.labels, layers.labels);
  const auto n = static_cast<std::uint64_t>(nodes.labels.size());
  const auto order = n * layers.labels.size();
  std::unordered_set<std::uint64_t> filled;
  filled.reserve(edges.size());
  std::vector<std::string> duplicate_keys;

  for (const auto& e : edges) {
    const Index from_node = nodes[e.origin_node], from_layer = layers[e.origin_layer];
    const Index to_node = nodes[e.dest_node], to_layer = layers[e.dest_layer];
    if (from_node == to_node && from_layer == to_layer) {
      builder.add_arc(from_node, from_layer, to_node, to_layer, e.weight);
      continue;
    }
    const auto h = n * static_cast<std::uint64_t>(from_layer) + static_cast<std::uint64_t>(from_node);
    const auto k = n * static_cast<std::uint64_t>(to_layer) + static_cast<std::uint64_t>(to_node);
    if (!filled.insert(h * order + k).second) {
      ++built.report.duplicates_merged;
      if (merge == MergePolicy::error) {
        duplicate_keys.push_back(e.origin_node + "@" + e.origin_layer + "->" + e.dest_node + "@" +
                                 e.dest_layer);
        continue;
      }
    }
    builder.add_arc(from_node, from_layer, to_node, to_layer, e.weight);
  }

  if (!duplicate_keys.empty()) {
    std::ostringstream message;
    message << duplicate_keys.size() << " duplicate arc(s):";
    for (const auto& key : duplicate_keys) message << ' ' << key;
    throw DuplicateError(message.str());
  }

  built.report.self_loops_dropped = builder.self_loops_dropped();
  built.network = builder.build();
  built.report.final_nodes = built.network.num_nodes();
  built.report.final_layers = built.network.num_layers();
  return built;
}

PrunedNetwork prune_isolated_layers(const MultilayerNetwork& net) {
  std::vector<Index> keep;
  PrunedNetwork out;
  const Index n = net.num_nodes();
  for (Index layer = 0; layer < net.num_layers(); ++layer) {
    const bool isolated = (net.supra().middleRows(n * layer, n).array() == 0.0).all() &&
                          (net.supra().middleCols(n * layer, n).array() == 0.0).all();
    if (isolated) {
      out.pruned_layers.push_back(net.layer_labels()[static_cast<std::size_t>(layer)]);
    } else {
      keep.push_back(layer);
    }
  }
  if (keep.empty()) throw EmptyNetworkError("every layer is isolated; nothing left after pruning");
  if (out.pruned_layers.empty()) {
    out.network = net;
    return out;
  }

  const auto kept = static_cast<Index>(keep.size());
  Matrix<double> supra(n * kept, n * kept);
  std::vector<std::string> layer_labels;
  for (Index a = 0; a < kept; ++a) {
    layer_labels.push_back(net.layer_labels()[static_cast<std::size_t>(keep[a])]);
    for (Index b = 0; b < kept; ++b) {
      supra.block(n * a, n * b, n, n) = net.block(keep[a], keep[b]);
    }
  }
  out.network = MultilayerNetwork(net.node_labels(), std::move(layer_labels), std::move(supra));
  return out;
}

std::vector<EdgeRecord> to_edges(const MultilayerNetwork& net) {
  const auto& nodes = net.node_labels();
  const auto& layers = net.layer_labels();
  std::vector<EdgeRecord> edges;
  for (Index k = 0; k < net.order(); ++k) {
    for (Index h = 0; h < net.order(); ++h) {
      const double w = net.supra()(h, k);
      if (w == 0.0) continue;
      const auto from = net.locate(h);
      const auto to = net.locate(k);
      edges.push_back({nodes[static_cast<std::size_t>(from.node)],
                       layers[static_cast<std::size_t>(from.layer)],
                       nodes[static_cast<std::size_t>(to.node)],
                       layers[static_cast<std::size_t>(to.layer)], w});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const EdgeRecord& a, const EdgeRecord& b) {
    return std::tie(a.origin_layer, a.origin_node, a.dest_layer, a.dest_node) <
           std::tie(b.origin_layer, b.origin_node, b.dest_layer, b.dest_node);
  });
  return edges;
}

void write_edges(const MultilayerNetwork& net, std::ostream& out) {
  out << kEdgeHeader << '\n';
  for (const auto& e : to_edges(net)) {
    out << e.origin_node << ',' << e.origin_layer << ',' << e.dest_node << ',' << e.dest_layer
        << ',' << csv::format_real(e.weight) << '\n';
  }
}

void write_edges(const MultilayerNetwork& net, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  write_edges(net, out);
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace supraclust
