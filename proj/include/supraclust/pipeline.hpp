#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "supraclust/clustering.hpp"
#include "supraclust/ingest.hpp"
#include "supraclust/report.hpp"

namespace supraclust {

enum class Command { analyze, density, strength, rank, compare };
enum class Level { local, node, layer, global };

// Exit codes of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitComputation = 2;

struct PipelineConfig {
  Command command = Command::analyze;
  std::filesystem::path input;
  // Without an output directory tables go to `out` and the summary to `err`.
  std::optional<std::filesystem::path> out_dir;
  MergePolicy merge = MergePolicy::sum;
  bool strict = false;  // any rejected row is an input error

  // analyze: one or more families; compare: exactly one.
  std::vector<CoefficientFamily> families{CoefficientFamily::arith};
  Level level = Level::local;
  BreakdownBy by = BreakdownBy::node;
  std::string metric;  // rank
  bool descending = true;
  std::string against = "monoplex";  // compare: monoplex | arith | geom | prod
};

struct PipelineResult {
  int exit_code = kExitOk;
  std::vector<std::filesystem::path> files;
  std::optional<double> spearman;  // compare
  IngestReport ingest;
};

std::string_view to_string(Level level);
std::optional<Level> parse_level(std::string_view name);

/// Names accepted by the rank command.
const std::vector<std::string>& rank_metrics();

/// parse -> build -> prune -> analysis -> output. Errors are caught, reported
/// on `err` tagged with the failing stage, and mapped to the exit code.
PipelineResult run_pipeline(const PipelineConfig& config, std::ostream& out, std::ostream& err);

/// Ingest stage on its own: parse, build and prune.
BuiltNetwork load_network(const std::filesystem::path& input, MergePolicy merge, bool strict,
                          std::ostream& err);

}  // namespace supraclust
