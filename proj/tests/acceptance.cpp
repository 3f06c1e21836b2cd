// Acceptance suite: one PASS/FAIL/SKIP line per criterion, nonzero exit on
// any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "supraclust/csv.hpp"
#include "supraclust/supraclust.hpp"

namespace sc = supraclust;
namespace fs = std::filesystem;
using sc::CoefficientFamily;
using sc::Index;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  enum class Status { pass, fail, skip } status = Status::pass;
  std::string detail;
};

Outcome pass(std::string detail) { return {Outcome::Status::pass, std::move(detail)}; }
Outcome fail(std::string detail) { return {Outcome::Status::fail, std::move(detail)}; }
Outcome skip(std::string detail) { return {Outcome::Status::skip, std::move(detail)}; }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe(const sc::MultilayerNetwork& net, Index i, Index a) {
  std::ostringstream os;
  os << "N=" << net.num_nodes() << " L=" << net.num_layers() << " (i,a)=(" << i << ',' << a << ')';
  return os.str();
}

// Random shapes N in [3, 6], L in [1, 3], drawn from a fixed stream.
template <typename Visit>
std::string for_random_networks(int count, std::uint64_t stream, sc::WeightLaw law, Visit visit) {
  std::mt19937_64 shapes(stream);
  std::uniform_int_distribution<Index> nodes(3, 6), layers(1, 3);
  for (int t = 0; t < count; ++t) {
    const Index n = nodes(shapes), l = layers(shapes);
    const auto net = sc::random_network(n, l, 0.3, stream * 1000 + static_cast<std::uint64_t>(t), law);
    if (auto problem = visit(net); !problem.empty()) return problem;
  }
  return {};
}

Outcome oracle_equivalence() {
  const auto start = Clock::now();
  std::int64_t checked = 0;
  const auto problem = for_random_networks(200, 1, sc::WeightLaw::uniform, [&](const auto& net) {
    const auto census = sc::triangle_census(net);
    for (Index a = 0; a < net.num_layers(); ++a) {
      for (Index i = 0; i < net.num_nodes(); ++i) {
        const auto expected = sc::triangle_oracle(net, i, a);
        if (sc::triangle_count(net, i, a) != expected || census.at(i, a) != expected) {
          return "mismatch at " + describe(net, i, a);
        }
        ++checked;
      }
    }
    return std::string{};
  });
  const double elapsed = seconds_since(start);
  if (!problem.empty()) return fail(problem);
  if (elapsed >= 10.0) return fail("took " + std::to_string(elapsed) + " s");
  return pass(std::to_string(checked) + " entries exact, " + std::to_string(elapsed) + " s");
}

Outcome binary_collapse() {
  double worst = 0;
  const auto problem = for_random_networks(100, 2, sc::WeightLaw::binary, [&](const auto& net) {
    const auto arith = sc::clustering_report(net, CoefficientFamily::arith);
    const auto geom = sc::clustering_report(net, CoefficientFamily::geom);
    if ((arith.local_degenerate != geom.local_degenerate).any()) return std::string("flags differ");
    for (Index a = 0; a < net.num_layers(); ++a) {
      for (Index i = 0; i < net.num_nodes(); ++i) {
        if (arith.local_degenerate(i, a)) continue;
        worst = std::max(worst, std::abs(arith.local(i, a) - geom.local(i, a)));
        if (worst > 1e-12) return "difference at " + describe(net, i, a);
      }
    }
    return std::string{};
  });
  if (!problem.empty()) return fail(problem);
  return pass("max |arith - geom| = " + std::to_string(worst));
}

Outcome weighted_mean_identity() {
  double worst = 0;
  const auto problem = for_random_networks(100, 3, sc::WeightLaw::uniform, [&](const auto& net) {
    const auto& w = net.supra();
    for (Index i = 0; i < net.num_nodes(); ++i) {
      // Weights are the per-layer arith denominators from the oracle.
      double weighted = 0, total = 0;
      for (Index a = 0; a < net.num_layers(); ++a) {
        const auto local = sc::local_arith(net, i, a);
        const auto reference = sc::oracle::arith(w, net.index_of(i, a));
        if (reference.degenerate) continue;
        weighted += local.value * reference.denominator;
        total += reference.denominator;
      }
      const auto direct = sc::node_coefficient(net, i, CoefficientFamily::arith);
      const double reconstructed = total > 0 ? weighted / total : 0.0;
      if (direct.degenerate != (total <= 0)) return "degeneracy differs at node " + std::to_string(i);
      worst = std::max(worst, std::abs(direct.value - reconstructed));
      if (worst > 1e-12) return "difference at node " + std::to_string(i);
    }
    return std::string{};
  });
  if (!problem.empty()) return fail(problem);
  return pass("max deviation " + std::to_string(worst));
}

Outcome single_layer_reduction() {
  double worst = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto net = sc::random_network(3 + static_cast<Index>(seed % 6), 1, 0.4, 400 + seed,
                                        sc::WeightLaw::lognormal);
    for (auto family : sc::kAllFamilies) {
      const auto multi = sc::clustering_report(net, family);
      const auto mono = sc::monoplex_baseline(net, 0, family);
      for (Index i = 0; i < net.num_nodes(); ++i) {
        if (multi.local_degenerate(i, 0) != mono.degenerate(i)) {
          return fail("flags differ, seed " + std::to_string(seed));
        }
        if (mono.degenerate(i)) continue;
        worst = std::max(worst, std::abs(multi.local(i, 0) - mono.values(i)));
      }
    }
  }
  if (worst > 1e-12) return fail("max deviation " + std::to_string(worst));
  return pass("100 networks, max deviation " + std::to_string(worst));
}

Outcome saturation() {
  double worst = 0;
  int shapes = 0;
  for (Index n = 1; n <= 12; ++n) {
    for (Index l = 1; n * l <= 12; ++l) {
      if (n * l < 3) continue;  // fewer than two neighbours
      const auto net = sc::fixtures::complete(n, l);
      for (auto family : {CoefficientFamily::arith, CoefficientFamily::geom}) {
        const auto report = sc::clustering_report(net, family);
        if (report.local_degenerate.any() || report.global_degenerate) {
          return fail("degenerate on complete graph N=" + std::to_string(n));
        }
        worst = std::max(worst, (report.local.array() - 1.0).abs().maxCoeff());
        worst = std::max(worst, std::abs(report.global - 1.0));
      }
      ++shapes;
    }
  }
  if (worst > 1e-12) return fail("max |C - 1| = " + std::to_string(worst));
  return pass(std::to_string(shapes) + " shapes, max |C - 1| = " + std::to_string(worst));
}

Outcome cycle_fixture() {
  const auto net = sc::fixtures::cycle();
  for (Index i = 0; i < 3; ++i) {
    if (sc::triangle_count(net, i, 0) != 1) return fail("T != 1 at node " + std::to_string(i));
    const double arith = sc::local_arith(net, i, 0).value;
    const double geom = sc::local_geom(net, i, 0).value;
    const double prod = sc::local_prod(net, i, 0).value;
    if (std::abs(arith - 0.5) > 1e-12 || std::abs(geom - 0.5) > 1e-12 ||
        std::abs(prod - 1.0) > 1e-12) {
      return fail("values at node " + std::to_string(i) + ": " + std::to_string(arith) + ", " +
                  std::to_string(geom) + ", " + std::to_string(prod));
    }
  }
  return pass("T=1, arith=geom=0.5, prod=1 at every node");
}

std::vector<std::pair<std::string, double>> keyed(const sc::MultilayerNetwork& net,
                                                  const sc::Vector<double>& values, bool nodes) {
  const auto& labels = nodes ? net.node_labels() : net.layer_labels();
  std::vector<std::pair<std::string, double>> out;
  for (Index k = 0; k < values.size(); ++k) out.emplace_back(labels[static_cast<std::size_t>(k)], values(k));
  return out;
}

bool identical_order(const sc::Ranking& first, const sc::Ranking& second) {
  if (first.size() != second.size()) return false;
  for (std::size_t e = 0; e < first.size(); ++e) {
    if (first.entries[e].entity != second.entries[e].entity ||
        first.entries[e].rank != second.entries[e].rank) {
      return false;
    }
  }
  return true;
}

// True when some pair of entities is ordered one way by `first` and the other
// way by `second` with both gaps above `tol`. Gaps within `tol` are ties that
// rounding may resolve either way.
bool reversed_pair(const sc::Ranking& first, const sc::Ranking& second, double tol) {
  std::map<std::string, double> other;
  for (const auto& e : second.entries) other.emplace(e.entity, e.value);
  for (const auto& x : first.entries) {
    for (const auto& y : first.entries) {
      const double gap = x.value - y.value;
      const double other_gap = other.at(x.entity) - other.at(y.entity);
      if (gap > tol && other_gap < -tol) return true;
    }
  }
  return false;
}

Outcome scale_invariance() {
  double worst = 0;
  int rankings = 0, bitwise = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto net = sc::random_network(3 + static_cast<Index>(seed % 6), 1 + static_cast<Index>(seed % 3),
                                        0.4, 700 + seed, sc::WeightLaw::lognormal);
    const auto big = sc::scaled(net, 1000.0);
    for (auto family : sc::kAllFamilies) {
      const auto a = sc::clustering_report(net, family);
      const auto b = sc::clustering_report(big, family);
      if ((a.local_degenerate != b.local_degenerate).any()) return fail("flags changed");
      worst = std::max(worst, (a.local - b.local).cwiseAbs().maxCoeff());
      if (worst > 1e-12) {
        return fail("seed " + std::to_string(seed) + " " + std::string(sc::to_string(family)) +
                    ": deviation " + std::to_string(worst));
      }
      // Rankings by node, by layer, and by node within each layer.
      std::vector<std::pair<sc::Ranking, sc::Ranking>> pairs{
          {sc::rank(keyed(net, a.per_node, true)), sc::rank(keyed(net, b.per_node, true))},
          {sc::rank(keyed(net, a.per_layer, false)), sc::rank(keyed(net, b.per_layer, false))}};
      for (Index l = 0; l < net.num_layers(); ++l) {
        pairs.emplace_back(sc::rank(keyed(net, a.local.col(l), true)),
                           sc::rank(keyed(net, b.local.col(l), true)));
      }
      for (const auto& [before, after] : pairs) {
        if (reversed_pair(before, after, 1e-12)) {
          return fail("ranking changed, seed " + std::to_string(seed));
        }
        ++rankings;
        if (identical_order(before, after)) ++bitwise;
      }
    }
  }
  std::ostringstream detail;
  detail << "max deviation " << worst << ", " << rankings << " rankings unchanged beyond 1e-12 ties ("
         << bitwise << " identical bit for bit)";
  return pass(detail.str());
}

Outcome spearman_cases() {
  const auto base = sc::rank({{"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}, {"e", 5}});
  const auto reversed = sc::rank({{"a", 5}, {"b", 4}, {"c", 3}, {"d", 2}, {"e", 1}});
  const auto first = sc::rank({{"x", 3}, {"y", 2}, {"z", 1}});   // ranks 1, 2, 3
  const auto second = sc::rank({{"x", 2}, {"y", 3}, {"z", 1}});  // ranks 2, 1, 3
  const double same = sc::spearman(base, base);
  const double opposite = sc::spearman(base, reversed);
  const double three = sc::spearman(first, second);
  if (same != 1.0 || opposite != -1.0 || three != 0.5) {
    return fail("got " + std::to_string(same) + ", " + std::to_string(opposite) + ", " +
                std::to_string(three));
  }
  return pass("1, -1, 0.5");
}

// Checks on the scale run output that do not need the full oracle.
std::string scale_invariants(const sc::MultilayerNetwork& net, const fs::path& dir) {
  for (auto family : sc::kAllFamilies) {
    const auto path = dir / ("clustering_local_" + std::string(sc::to_string(family)) + ".csv");
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    Index rows = 0;
    while (std::getline(in, line)) {
      const auto fields = sc::csv::split(line);
      const auto value = sc::csv::parse_real(fields[2]);
      if (!value || !std::isfinite(*value) || *value < 0) return path.filename().string() + ": bad value";
      if (family != CoefficientFamily::prod && *value > 1.0 + 1e-12) return "value above 1";
      ++rows;
    }
    if (rows != net.order()) return path.filename().string() + ": wrong row count";
  }

  const sc::SupraTriads<double> triads(net);
  const auto census = triads.census();
  if (census.per_node.sum() != census.total || census.per_layer.sum() != census.total) {
    return "triangle aggregates inconsistent";
  }
  // Spot checks of the matrix path against the brute-force oracles.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Index> pick(0, net.order() - 1);
  const auto& w = net.supra();
  const auto reports = std::array{sc::clustering_report(triads, CoefficientFamily::arith),
                                  sc::clustering_report(triads, CoefficientFamily::geom),
                                  sc::clustering_report(triads, CoefficientFamily::prod)};
  for (int s = 0; s < 8; ++s) {
    const Index h = pick(rng);
    const auto [i, a] = net.locate(h);
    const sc::oracle::Local refs[] = {sc::oracle::arith(w, h), sc::oracle::geom(w, h),
                                      sc::oracle::prod(w, h)};
    for (std::size_t f = 0; f < 3; ++f) {
      if (reports[f].local_degenerate(i, a) != refs[f].degenerate) return "oracle flag mismatch";
      const double ref = refs[f].value();
      if (std::abs(reports[f].local(i, a) - ref) > 1e-12 * std::max(1.0, std::abs(ref))) {
        return "oracle value mismatch at h=" + std::to_string(h);
      }
    }
    if (census.at(i, a) != sc::triangle_count(net, i, a)) return "triangle mismatch";
  }
  // Pooled node values against the weighted mean of locals.
  const auto& arith = reports[0];
  for (Index i = 0; i < net.num_nodes(); ++i) {
    double num = 0, den = 0;
    for (Index a = 0; a < net.num_layers(); ++a) {
      if (arith.local_degenerate(i, a)) continue;
      num += arith.local(i, a) * arith.denominator(i, a);
      den += arith.denominator(i, a);
    }
    if (std::abs(num / den - arith.per_node(i)) > 1e-12) return "weighted mean mismatch";
  }
  return {};
}

Outcome scale_run() {
  const auto dir = fs::temp_directory_path() / "supraclust_acceptance_scale";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto net = sc::synthetic_trade_network();
  sc::write_edges(net, dir / "edges.csv");

  sc::PipelineConfig config;
  config.command = sc::Command::analyze;
  config.input = dir / "edges.csv";
  config.out_dir = dir / "out";
  config.level = sc::Level::local;
  config.families = {sc::kAllFamilies[0], sc::kAllFamilies[1], sc::kAllFamilies[2]};
  std::ostringstream out, err;
  const auto start = Clock::now();
  const auto result = sc::run_pipeline(config, out, err);
  const double elapsed = seconds_since(start);
  if (result.exit_code != sc::kExitOk) return fail("pipeline failed: " + err.str());
  if (result.ingest.final_nodes * result.ingest.final_layers != 2420) return fail("order != 2420");
  if (elapsed >= 120.0) return fail("took " + std::to_string(elapsed) + " s");

  const auto loaded = sc::load_network(config.input, sc::MergePolicy::sum, false, err).network;
  if (auto problem = scale_invariants(loaded, *config.out_dir); !problem.empty()) return fail(problem);
  const double density = static_cast<double>((net.supra().array() > 0).count()) /
                         (2420.0 * 2419.0);
  fs::remove_all(dir);
  std::ostringstream detail;
  detail.precision(3);
  detail << std::fixed << "order 2420, density " << density << ", pipeline " << elapsed
         << " s, invariants hold";
  return pass(detail.str());
}

Outcome trade_reproduction() {
  const char* path = std::getenv("SUPRACLUST_WIOD_CSV");
  if (!path || !*path) return skip("set SUPRACLUST_WIOD_CSV to a canonical edge list to run");
  std::ostringstream sink;
  const auto parsed = sc::parse_edges(fs::path(path));
  const auto built = sc::build_network(parsed.records);
  const auto pruned = sc::prune_isolated_layers(built.network);
  std::ostringstream detail;
  detail << "order " << built.network.order() << " -> " << pruned.network.order();
  if (std::find(pruned.pruned_layers.begin(), pruned.pruned_layers.end(), "U") ==
      pruned.pruned_layers.end()) {
    return fail("sector U not pruned; " + detail.str());
  }
  if (built.network.order() != 2464 || pruned.network.order() != 2420) return fail(detail.str());
  const auto& net = pruned.network;
  const sc::Vector<double> strength = sc::strength_vector(net.supra(), sc::Direction::total)
                                          .reshaped(net.num_nodes(), net.num_layers())
                                          .rowwise()
                                          .sum();
  const auto ranking = sc::rank(keyed(net, strength, true));
  std::vector<std::string> top;
  for (std::size_t k = 0; k < 3 && k < ranking.size(); ++k) top.push_back(ranking.entries[k].entity);
  for (const char* expected : {"CHN", "USA", "ROW"}) {
    if (std::find(top.begin(), top.end(), expected) == top.end()) {
      return fail(std::string(expected) + " not in top-3 total strength; " + detail.str());
    }
  }
  return pass(detail.str() + ", top-3 strength CHN/USA/ROW");
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"oracle equivalence of triangle counts", oracle_equivalence},
      {"binary collapse arith = geom", binary_collapse},
      {"weighted-mean identity of node arith", weighted_mean_identity},
      {"single-layer reduction to monoplex", single_layer_reduction},
      {"saturation on complete graphs", saturation},
      {"cycle fixture values", cycle_fixture},
      {"scale invariance x1000", scale_invariance},
      {"spearman reference cases", spearman_cases},
      {"scale run 44 x 55", scale_run},
      {"trade data reproduction (optional)", trade_reproduction},
  };
  int failures = 0;
  int number = 0;
  for (const auto& [name, check] : criteria) {
    ++number;
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = fail(std::string("exception: ") + e.what());
    }
    const char* tag = outcome.status == Outcome::Status::pass   ? "PASS"
                      : outcome.status == Outcome::Status::skip ? "SKIP"
                                                                : "FAIL";
    if (outcome.status == Outcome::Status::fail) ++failures;
    std::cout << '[' << tag << "] " << number << ". " << name << ": " << outcome.detail << std::endl;
  }
  std::cout << (failures ? "acceptance FAILED" : "acceptance passed") << std::endl;
  return failures ? 1 : 0;
}
