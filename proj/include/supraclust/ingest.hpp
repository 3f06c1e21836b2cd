#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "supraclust/network.hpp"

namespace supraclust {

/// Canonical long-format header.
inline constexpr std::string_view kEdgeHeader =
    "origin_node,origin_layer,dest_node,dest_layer,weight";

/// One directed weighted arc between node-layer pairs.
struct EdgeRecord {
  std::string origin_node;
  std::string origin_layer;
  std::string dest_node;
  std::string dest_layer;
  double weight = 0;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

struct RejectedRow {
  std::size_t line = 0;  // 1-based, header is line 1
  std::string reason;
};

struct ParsedEdges {
  std::vector<EdgeRecord> records;
  std::vector<RejectedRow> rejects;
};

/// Throws IoError when the file cannot be opened and FormatError on a header
/// mismatch. Malformed data rows are collected in `rejects`.
ParsedEdges parse_edges(const std::filesystem::path& path);
ParsedEdges parse_edges(std::istream& in);

enum class MergePolicy { sum, error };

struct IngestReport {
  std::size_t edges_read = 0;
  std::size_t rows_rejected = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_merged = 0;
  std::vector<std::string> layers_pruned;
  Index final_nodes = 0;
  Index final_layers = 0;
};

struct BuiltNetwork {
  MultilayerNetwork network;
  IngestReport report;
};

/// Node and layer sets are the sorted unions of the labels in `edges`; every
/// node exists on every layer. Intra-layer self-loops are dropped and counted,
/// inter-layer self-pairs are kept. Repeated cells are summed, or rejected
/// with DuplicateError under MergePolicy::error.
BuiltNetwork build_network(std::span<const EdgeRecord> edges,
                           MergePolicy merge = MergePolicy::sum);

struct PrunedNetwork {
  MultilayerNetwork network;
  std::vector<std::string> pruned_layers;
};

/// Removes layers with no arcs at all (intra-layer or to/from any other
/// layer), keeping the order of the survivors. Throws EmptyNetworkError if no
/// layer survives.
PrunedNetwork prune_isolated_layers(const MultilayerNetwork& net);

/// Arcs of the network sorted by (origin_layer, origin_node, dest_layer, dest_node).
std::vector<EdgeRecord> to_edges(const MultilayerNetwork& net);

void write_edges(const MultilayerNetwork& net, std::ostream& out);
void write_edges(const MultilayerNetwork& net, const std::filesystem::path& path);

}  // namespace supraclust
