// Command line front end: analyze, density, strength, rank, compare, synth.

#include <CLI11.hpp>
#include <iostream>
#include <map>

#include "supraclust/generate.hpp"
#include "supraclust/ingest.hpp"
#include "supraclust/pipeline.hpp"

namespace sc = supraclust;

int main(int argc, char** argv) {
  CLI::App app{"Clustering coefficients of weighted directed multilayer networks"};
  app.require_subcommand(1);

  sc::PipelineConfig config;
  std::string input;
  std::string out_dir;
  std::string coef = "arith";
  std::string level;
  std::string merge = "sum";

  const std::map<std::string, sc::Level> levels{{"local", sc::Level::local},
                                                {"node", sc::Level::node},
                                                {"layer", sc::Level::layer},
                                                {"global", sc::Level::global}};
  const std::map<std::string, sc::BreakdownBy> by_names{{"node", sc::BreakdownBy::node},
                                                        {"layer", sc::BreakdownBy::layer}};
  const std::map<std::string, sc::MergePolicy> merges{{"sum", sc::MergePolicy::sum},
                                                      {"error", sc::MergePolicy::error}};

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "Canonical edge-list CSV")->required()->check(CLI::ExistingFile);
    cmd->add_option("--out", out_dir, "Output directory (tables go to stdout without it)");
    cmd->add_option("--merge", merge, "Duplicate arcs: sum or error")
        ->check(CLI::IsMember({"sum", "error"}));
    cmd->add_flag("--strict", config.strict, "Fail on any malformed row");
  };

  auto* analyze = app.add_subcommand("analyze", "Clustering coefficients at one aggregation level");
  common(analyze);
  analyze->add_option("--coef", coef, "arith, geom, prod or all")
      ->check(CLI::IsMember({"arith", "geom", "prod", "all"}));
  analyze->add_option("--level", level, "local, node, layer or global")
      ->check(CLI::IsMember({"local", "node", "layer", "global"}));

  auto* density = app.add_subcommand("density", "Intra-layer and average inter-layer densities");
  common(density);

  auto* strength = app.add_subcommand("strength", "In/out strength split into intra and inter parts");
  common(strength);
  std::string by = "node";
  strength->add_option("--by", by, "node or layer")->required()->check(CLI::IsMember({"node", "layer"}));

  auto* rank = app.add_subcommand("rank", "Rank entities by a metric (average ranks for ties)");
  common(rank);
  rank->add_option("--metric", config.metric, "Metric name")
      ->required()
      ->check(CLI::IsMember(sc::rank_metrics()));
  rank->add_option("--level", level, "local (per layer), node or layer")
      ->check(CLI::IsMember({"local", "node", "layer"}));
  bool ascending = false;
  rank->add_flag("--ascending", ascending, "Rank 1 is the smallest value");

  auto* compare = app.add_subcommand("compare", "Rank correlation between two coefficient rankings");
  common(compare);
  compare->add_option("--coef", coef, "arith, geom or prod")
      ->required()
      ->check(CLI::IsMember({"arith", "geom", "prod"}));
  compare->add_option("--against", config.against, "monoplex or another family")
      ->check(CLI::IsMember({"monoplex", "arith", "geom", "prod"}));
  compare->add_option("--level", level, "node or layer")->check(CLI::IsMember({"node", "layer"}));

  auto* synth = app.add_subcommand("synth", "Write a synthetic trade-shaped network as CSV");
  std::string synth_out;
  std::uint64_t seed = 2014;
  sc::Index countries = 44, sectors = 55;
  double arc_density = 0.2;
  synth->add_option("--out", synth_out, "Output CSV file")->required();
  synth->add_option("--seed", seed, "Random seed");
  synth->add_option("--nodes", countries, "Number of nodes")->check(CLI::PositiveNumber);
  synth->add_option("--layers", sectors, "Number of layers")->check(CLI::PositiveNumber);
  synth->add_option("--density", arc_density, "Arc probability")->check(CLI::Range(0.0, 1.0));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? sc::kExitOk : sc::kExitInput;
  }

  if (synth->parsed()) {
    try {
      sc::write_edges(sc::synthetic_trade_network(seed, countries, sectors, arc_density), synth_out);
    } catch (const std::exception& e) {
      std::cerr << "[synth] error: " << e.what() << '\n';
      return sc::kExitInput;
    }
    return sc::kExitOk;
  }

  config.input = input;
  if (!out_dir.empty()) config.out_dir = out_dir;
  config.merge = merges.at(merge);
  config.descending = !ascending;
  config.by = by_names.at(by);
  if (coef == "all") {
    config.families.assign(std::begin(sc::kAllFamilies), std::end(sc::kAllFamilies));
  } else {
    config.families = {*sc::parse_family(coef)};
  }

  if (analyze->parsed()) {
    config.command = sc::Command::analyze;
    config.level = level.empty() ? sc::Level::local : levels.at(level);
  } else if (density->parsed()) {
    config.command = sc::Command::density;
  } else if (strength->parsed()) {
    config.command = sc::Command::strength;
  } else if (rank->parsed()) {
    config.command = sc::Command::rank;
    config.level = level.empty() ? sc::Level::node : levels.at(level);
  } else {
    config.command = sc::Command::compare;
    config.level = level.empty() ? sc::Level::node : levels.at(level);
  }

  return sc::run_pipeline(config, std::cout, std::cerr).exit_code;
}
