#include "supraclust/pipeline.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "supraclust/csv.hpp"
#include "supraclust/degrees.hpp"
#include "supraclust/errors.hpp"
#include "supraclust/triangles.hpp"

namespace supraclust {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// SUPRACLUST_THREADS caps the threads used by the matrix products.
void apply_thread_limit() {
  if (const char* env = std::getenv("SUPRACLUST_THREADS")) {
    const int threads = std::atoi(env);
    if (threads > 0) Eigen::setNbThreads(threads);
  }
}

class TableSink {
 public:
  TableSink(const std::optional<std::filesystem::path>& dir, std::ostream& fallback,
            std::vector<std::filesystem::path>& written)
      : dir_(dir), fallback_(fallback), written_(written) {}

  void emit(const std::string& name, const std::function<void(std::ostream&)>& body) {
    if (!dir_) {
      body(fallback_);
      return;
    }
    std::filesystem::create_directories(*dir_);
    const auto path = *dir_ / (name + ".csv");
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot write '" + path.string() + "'");
    body(file);
    if (!file) throw IoError("write to '" + path.string() + "' failed");
    written_.push_back(path);
  }

 private:
  const std::optional<std::filesystem::path>& dir_;
  std::ostream& fallback_;
  std::vector<std::filesystem::path>& written_;
};

const std::string& label(const std::vector<std::string>& labels, Index i) {
  return labels[static_cast<std::size_t>(i)];
}

void write_clustering(const MultilayerNetwork& net, const ClusteringReport<double>& report,
                      Level level, std::ostream& os) {
  using csv::format_real;
  switch (level) {
    case Level::local:
      os << "node,layer,value,numerator,denominator,degenerate\n";
      for (Index a = 0; a < net.num_layers(); ++a) {
        for (Index i = 0; i < net.num_nodes(); ++i) {
          os << label(net.node_labels(), i) << ',' << label(net.layer_labels(), a) << ','
             << format_real(report.local(i, a)) << ',' << format_real(report.numerator(i, a))
             << ',' << format_real(report.denominator(i, a)) << ','
             << int(report.local_degenerate(i, a)) << '\n';
        }
      }
      break;
    case Level::node:
      os << "node,value,degenerate\n";
      for (Index i = 0; i < net.num_nodes(); ++i) {
        os << label(net.node_labels(), i) << ',' << format_real(report.per_node(i)) << ','
           << int(report.node_degenerate(i)) << '\n';
      }
      break;
    case Level::layer:
      os << "layer,value,degenerate\n";
      for (Index a = 0; a < net.num_layers(); ++a) {
        os << label(net.layer_labels(), a) << ',' << format_real(report.per_layer(a)) << ','
           << int(report.layer_degenerate(a)) << '\n';
      }
      break;
    case Level::global:
      os << "value,degenerate\n" << format_real(report.global) << ','
         << int(report.global_degenerate) << '\n';
      break;
  }
}

// Per (node, layer) values of a rank metric plus their node and layer aggregates.
struct MetricTable {
  Matrix<double> local;
  Vector<double> per_node;
  Vector<double> per_layer;
};

MetricTable metric_table(const MultilayerNetwork& net, const std::string& metric) {
  const Index n = net.num_nodes(), l = net.num_layers();
  MetricTable table;
  auto summed = [&](Matrix<double> local) {
    table.per_node = local.rowwise().sum();
    table.per_layer = local.colwise().sum().transpose();
    table.local = std::move(local);
  };
  struct Variant {
    const char* name;
    Direction dir;
    bool weighted;
  };
  static constexpr Variant variants[] = {
      {"degree", Direction::total, false},        {"in-degree", Direction::in, false},
      {"out-degree", Direction::out, false},      {"bilateral-degree", Direction::bilateral, false},
      {"strength", Direction::total, true},       {"in-strength", Direction::in, true},
      {"out-strength", Direction::out, true},     {"bilateral-strength", Direction::bilateral, true},
  };
  for (const auto& v : variants) {
    if (metric != v.name) continue;
    const Vector<double> flat =
        v.weighted ? strength_vector(net.supra(), v.dir)
                   : Vector<double>(degree_vector(net.supra(), v.dir).cast<double>());
    summed(flat.reshaped(n, l));
    return table;
  }
  if (metric == "triangles") {
    summed(triangle_census(net).per_node_layer.cast<double>());
    return table;
  }
  if (const auto family = parse_family(metric)) {
    const auto report = clustering_report(net, *family);
    table.local = report.local;
    table.per_node = report.per_node;
    table.per_layer = report.per_layer;
    return table;
  }
  throw ValidationError("unknown metric '" + metric + "'");
}

std::vector<std::pair<std::string, double>> keyed(const std::vector<std::string>& labels,
                                                  const Vector<double>& values) {
  std::vector<std::pair<std::string, double>> out;
  for (Index i = 0; i < values.size(); ++i) out.emplace_back(label(labels, i), values(i));
  return out;
}

void write_ranking(const Ranking& ranking, std::ostream& os, const std::string& prefix = {}) {
  for (const auto& e : ranking.entries) {
    os << prefix << e.entity << ',' << csv::format_real(e.value) << ','
       << csv::format_real(e.rank) << '\n';
  }
}

void print_ingest(const IngestReport& r, std::ostream& os) {
  os << "ingest: edges_read=" << r.edges_read << " rows_rejected=" << r.rows_rejected
     << " self_loops_dropped=" << r.self_loops_dropped
     << " duplicates_merged=" << r.duplicates_merged << " layers_pruned=[";
  for (std::size_t i = 0; i < r.layers_pruned.size(); ++i) {
    os << (i ? "," : "") << r.layers_pruned[i];
  }
  os << "] nodes=" << r.final_nodes << " layers=" << r.final_layers
     << " order=" << r.final_nodes * r.final_layers << '\n';
}

}  // namespace

std::string_view to_string(Level level) {
  switch (level) {
    case Level::local: return "local";
    case Level::node: return "node";
    case Level::layer: return "layer";
    case Level::global: return "global";
  }
  return "?";
}

std::optional<Level> parse_level(std::string_view name) {
  for (auto level : {Level::local, Level::node, Level::layer, Level::global}) {
    if (to_string(level) == name) return level;
  }
  return std::nullopt;
}

const std::vector<std::string>& rank_metrics() {
  static const std::vector<std::string> names{
      "degree",   "in-degree",   "out-degree",   "bilateral-degree",   "strength", "in-strength",
      "out-strength", "bilateral-strength", "triangles", "arith", "geom", "prod"};
  return names;
}

BuiltNetwork load_network(const std::filesystem::path& input, MergePolicy merge, bool strict,
                          std::ostream& err) {
  const auto parsed = parse_edges(input);
  if (!parsed.rejects.empty()) {
    const std::size_t shown = std::min<std::size_t>(parsed.rejects.size(), 5);
    for (std::size_t i = 0; i < shown; ++i) {
      err << "rejected line " << parsed.rejects[i].line << ": " << parsed.rejects[i].reason
          << '\n';
    }
    if (parsed.rejects.size() > shown) {
      err << "... " << parsed.rejects.size() - shown << " more rejected rows\n";
    }
    if (strict) {
      throw FormatError(std::to_string(parsed.rejects.size()) + " malformed row(s)");
    }
  }
  auto built = build_network(parsed.records, merge);
  built.report.rows_rejected = parsed.rejects.size();
  auto pruned = prune_isolated_layers(built.network);
  built.network = std::move(pruned.network);
  built.report.layers_pruned = std::move(pruned.pruned_layers);
  built.report.final_nodes = built.network.num_nodes();
  built.report.final_layers = built.network.num_layers();
  return built;
}

PipelineResult run_pipeline(const PipelineConfig& config, std::ostream& out, std::ostream& err) {
  apply_thread_limit();
  PipelineResult result;
  std::ostream& summary = config.out_dir ? out : err;
  TableSink sink(config.out_dir, out, result.files);
  std::string stage = "ingest";

  try {
    auto start = Clock::now();
    const auto built = load_network(config.input, config.merge, config.strict, err);
    const auto& net = built.network;
    result.ingest = built.report;
    const double ingest_seconds = seconds_since(start);

    stage = "analyze";
    start = Clock::now();
    switch (config.command) {
      case Command::analyze: {
        if (config.families.empty()) throw ValidationError("no coefficient family selected");
        const SupraTriads<double> triads(net);
        for (const auto family : config.families) {
          const auto report = clustering_report(triads, family);
          stage = "write";
          sink.emit("clustering_" + std::string(to_string(config.level)) + "_" +
                        std::string(to_string(family)),
                    [&](std::ostream& os) { write_clustering(net, report, config.level, os); });
          stage = "analyze";
        }
        break;
      }
      case Command::density: {
        const auto rows = densities(net);
        stage = "write";
        sink.emit("densities", [&](std::ostream& os) {
          os << "layer,intra_density,avg_inter_density\n";
          for (const auto& r : rows) {
            os << r.layer << ',' << csv::format_real(r.intra_density) << ','
               << csv::format_real(r.avg_inter_density) << '\n';
          }
        });
        break;
      }
      case Command::strength: {
        const auto rows = strength_breakdown(net, config.by);
        stage = "write";
        const std::string by = config.by == BreakdownBy::node ? "node" : "layer";
        sink.emit("strength_" + by, [&](std::ostream& os) {
          os << "entity,in_intra,in_inter,out_intra,out_inter,intra_inter_ratio,in_out_ratio\n";
          for (const auto& r : rows) {
            os << r.entity << ',' << csv::format_real(r.in_intra) << ','
               << csv::format_real(r.in_inter) << ',' << csv::format_real(r.out_intra) << ','
               << csv::format_real(r.out_inter) << ',' << csv::format_optional(r.intra_inter_ratio)
               << ',' << csv::format_optional(r.in_out_ratio) << '\n';
          }
        });
        break;
      }
      case Command::rank: {
        if (config.level == Level::global) throw ValidationError("rank needs level local, node or layer");
        const auto table = metric_table(net, config.metric);
        std::vector<std::pair<std::string, Ranking>> rankings;
        if (config.level == Level::local) {
          for (Index a = 0; a < net.num_layers(); ++a) {
            rankings.emplace_back(label(net.layer_labels(), a) + ",",
                                  rank(keyed(net.node_labels(), table.local.col(a)),
                                       config.descending));
          }
        } else if (config.level == Level::node) {
          rankings.emplace_back("", rank(keyed(net.node_labels(), table.per_node), config.descending));
        } else {
          rankings.emplace_back("", rank(keyed(net.layer_labels(), table.per_layer), config.descending));
        }
        stage = "write";
        sink.emit("rank_" + config.metric + "_" + std::string(to_string(config.level)),
                  [&](std::ostream& os) {
                    os << (config.level == Level::local ? "layer,entity,value,rank\n"
                                                        : "entity,value,rank\n");
                    for (const auto& [prefix, ranking] : rankings) write_ranking(ranking, os, prefix);
                  });
        break;
      }
      case Command::compare: {
        if (config.families.size() != 1) throw ValidationError("compare needs exactly one --coef");
        if (config.level != Level::node && config.level != Level::layer) {
          throw ValidationError("compare needs level node or layer");
        }
        const auto family = config.families.front();
        const bool by_node = config.level == Level::node;
        const auto& labels = by_node ? net.node_labels() : net.layer_labels();
        const auto report = clustering_report(net, family);
        const Vector<double> values = by_node ? report.per_node : report.per_layer;
        Vector<double> other;
        if (config.against == "monoplex") {
          other = (by_node ? monoplex_node_average(net, family)
                           : monoplex_layer_coefficients(net, family))
                      .values;
        } else if (const auto other_family = parse_family(config.against)) {
          const auto other_report = clustering_report(net, *other_family);
          other = by_node ? other_report.per_node : other_report.per_layer;
        } else {
          throw ValidationError("--against must be monoplex, arith, geom or prod");
        }
        const auto first = rank(keyed(labels, values), config.descending);
        const auto second = rank(keyed(labels, other), config.descending);
        result.spearman = spearman(first, second);
        std::unordered_map<std::string, const RankEntry*> lookup;
        for (const auto& e : second.entries) lookup.emplace(e.entity, &e);
        stage = "write";
        sink.emit("compare_" + std::string(to_string(family)) + "_" + config.against + "_" +
                      std::string(to_string(config.level)),
                  [&](std::ostream& os) {
                    os << "entity,value,rank,other_value,other_rank\n";
                    for (const auto& e : first.entries) {
                      const auto* o = lookup.at(e.entity);
                      os << e.entity << ',' << csv::format_real(e.value) << ','
                         << csv::format_real(e.rank) << ',' << csv::format_real(o->value) << ','
                         << csv::format_real(o->rank) << '\n';
                    }
                  });
        break;
      }
    }

    print_ingest(result.ingest, summary);
    if (result.spearman) summary << "spearman=" << csv::format_real(*result.spearman) << '\n';
    std::ostringstream timing;
    timing.precision(3);
    timing << std::fixed << "timing: ingest " << ingest_seconds << " s, analysis+write "
           << seconds_since(start) << " s\n";
    summary << timing.str();
    for (const auto& path : result.files) summary << "wrote " << path.string() << '\n';
  } catch (const Error& e) {
    const bool input_error = stage == "ingest" || dynamic_cast<const IoError*>(&e) ||
                             dynamic_cast<const FormatError*>(&e) ||
                             dynamic_cast<const ValidationError*>(&e);
    err << "[" << stage << "] error: " << e.what() << '\n';
    result.exit_code = input_error ? kExitInput : kExitComputation;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "[" << stage << "] error: " << e.what() << '\n';
    result.exit_code = kExitInput;
  } catch (const std::exception& e) {
    err << "[" << stage << "] error: " << e.what() << '\n';
    result.exit_code = kExitComputation;
  }
  return result;
}

}  // namespace supraclust
