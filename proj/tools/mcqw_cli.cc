// Copyright 2026 The mcqw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// mcqw: command-line front end for the multi-coin quantum walk toolkit.
//
// Every subcommand writes one plot-ready data file (CSV by default, JSON with
// --format json) to --out or stdout. Diagnostics go to stderr only.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcqw/catalog.h"
#include "mcqw/entanglement.h"
#include "mcqw/error.h"
#include "mcqw/fit.h"
#include "mcqw/io.h"
#include "mcqw/lab.h"
#include "mcqw/random_states.h"
#include "mcqw/spectral.h"
#include "mcqw/walk.h"

namespace {

using nlohmann::json;
using namespace mcqw;

struct RunConfig {
  // Global.
  std::string out;
  std::string format = "csv";
  int quad_points = 0;    // 0: max(64, 32 t)
  int lattice_size = 0;   // 0: 2 t + 21
  std::uint64_t seed = 0;
  // Per command.
  std::string state;
  int coins = 0;          // 0: take from the state
  int active_qubit = 1;
  int steps = 0;
  std::string snapshot;
  // ctilde
  int t_max = 100;
  bool fit = false;
  int fit_from = 1;
  // sweep
  std::string family;
  std::optional<double> from, to;
  int points = 0;
  std::string fit_out;
  // qprofile
  std::string mode = "lattice";
  std::vector<int> sites;
};

CatalogEntry ResolveState(const RunConfig& cfg) {
  if (cfg.state.empty()) throw ParseError("--state is required");
  const StateSpec spec = ParseStateSpec(cfg.state);
  CatalogEntry entry{"", CoinState::Basis(1, 0), {}, EntanglementClass::kPure,
                     {}};
  switch (spec.kind) {
    case StateSpec::Kind::kCatalog:
      entry = MakeCatalogEntry(spec.family, spec.params);
      break;
    case StateSpec::Kind::kFile:
      entry.name = "file";
      entry.coin = ReadStateFile(std::filesystem::path(spec.path));
      break;
    case StateSpec::Kind::kRandom:
      if (cfg.coins < 1) throw ParseError("--state random needs --coins");
      entry.name = "random";
      entry.coin = RandomCoinState(cfg.coins, cfg.seed);
      break;
  }
  if (cfg.coins != 0 && cfg.coins != entry.coin.num_coins()) {
    throw DimensionError("coin count mismatch: --coins " +
                         std::to_string(cfg.coins) + " but state has " +
                         std::to_string(entry.coin.num_coins()) + " qubits");
  }
  CheckQubit(cfg.active_qubit, entry.coin.num_coins());
  if (entry.expected_ic_squared.empty()) {
    for (int q = 1; q <= entry.coin.num_coins(); ++q) {
      entry.expected_ic_squared.push_back(IConcurrenceSquared(entry.coin, q));
    }
  }
  return entry;
}

int LatticeFor(const RunConfig& cfg, int steps) {
  return cfg.lattice_size > 0 ? cfg.lattice_size : DefaultLatticeSize(steps);
}

QuadratureSpec QuadFor(const RunConfig& cfg, int t) {
  return cfg.quad_points > 0 ? QuadratureSpec{cfg.quad_points}
                             : QuadratureSpec::ForTime(t);
}

WalkState EvolveFromConfig(const CoinState& coin, const RunConfig& cfg) {
  if (cfg.steps < 0) throw Error("--steps must be non-negative");
  const int n = LatticeFor(cfg, cfg.steps);
  const WalkState start(coin, n, DefaultStartSite(n));
  return Evolve(start, StepConfig{cfg.active_qubit}, cfg.steps);
}

void Emit(const RunConfig& cfg, const std::string& content) {
  if (cfg.out.empty()) {
    std::cout << content;
    std::cout.flush();
  } else {
    AtomicWriteFile(cfg.out, content);
  }
}

bool Json(const RunConfig& cfg) { return cfg.format == "json"; }

std::string Str(const std::function<void(std::ostream&)>& writer) {
  std::ostringstream out;
  writer(out);
  return out.str();
}

int CmdSimulate(const RunConfig& cfg) {
  const CatalogEntry entry = ResolveState(cfg);
  const WalkState state = EvolveFromConfig(entry.coin, cfg);
  if (!cfg.snapshot.empty()) {
    AtomicWriteFile(cfg.snapshot,
                    Str([&](std::ostream& o) { WriteSnapshotCsv(o, state); }));
  }
  if (Json(cfg)) {
    json doc{{"state", entry.name},
             {"steps", state.steps_taken()},
             {"lattice_size", state.lattice_size()},
             {"start_site", state.start_site()},
             {"active_qubit", cfg.active_qubit},
             {"probability", PositionDistribution(state)}};
    Emit(cfg, doc.dump(2) + "\n");
  } else {
    Emit(cfg, Str([&](std::ostream& o) { WriteDistributionCsv(o, state); }));
  }
  return 0;
}

int CmdCTilde(const RunConfig& cfg) {
  if (cfg.t_max < 0) throw Error("--t-max must be non-negative");
  std::vector<CTildeRow> rows;
  int failures = 0;
  for (int t = 0; t <= cfg.t_max; ++t) {
    try {
      const QuadratureSpec quad = QuadFor(cfg, t);
      rows.push_back({t, C1Tilde(t, quad), C2Tilde(t, quad)});
    } catch (const QuadratureError& e) {
      std::cerr << "mcqw: t=" << t << ": " << e.what() << '\n';
      ++failures;
    }
  }
  std::optional<FitResult> linear, quadratic;
  if (cfg.fit) {
    std::vector<FitPoint> p1, p2;
    for (const auto& r : rows) {
      if (r.t < cfg.fit_from) continue;
      p1.push_back({double(r.t), r.c1_tilde});
      p2.push_back({double(r.t), r.c2_tilde});
    }
    linear = FitLeastSquares(p1, FitModel::kLinear);
    quadratic = FitLeastSquares(p2, FitModel::kQuadratic);
  }
  if (Json(cfg)) {
    json doc{{"rows", json::array()}};
    for (const auto& r : rows) {
      doc["rows"].push_back(
          {{"t", r.t}, {"c1_tilde", r.c1_tilde}, {"c2_tilde", r.c2_tilde}});
    }
    if (cfg.fit) {
      doc["fit"] = {
          {"c1_tilde", json::parse(FitSummaryJson(*linear))},
          {"c2_tilde", json::parse(FitSummaryJson(*quadratic))},
          {"fit_from", cfg.fit_from}};
    }
    Emit(cfg, doc.dump(2) + "\n");
  } else {
    std::string text =
        Str([&](std::ostream& o) { WriteCTildeCsv(o, rows); });
    if (cfg.fit) {
      text += "# fit c1_tilde = a0 t + a1 over t >= " +
              std::to_string(cfg.fit_from) +
              ": a0=" + FormatDouble(linear->coefficients[0]) +
              " a1=" + FormatDouble(linear->coefficients[1]) +
              " residual_rms=" + FormatDouble(linear->residual_rms) + "\n";
      text += "# fit c2_tilde = b0 t^2 over t >= " +
              std::to_string(cfg.fit_from) +
              ": b0=" + FormatDouble(quadratic->coefficients[0]) +
              " residual_rms=" + FormatDouble(quadratic->residual_rms) + "\n";
    }
    Emit(cfg, text);
  }
  return failures == 0 ? 0 : 1;
}

int CmdSweep(const RunConfig& cfg) {
  if (cfg.family.empty()) throw ParseError("--family is required");
  const StateSpec spec = ParseStateSpec(cfg.family);
  if (spec.kind != StateSpec::Kind::kCatalog) {
    throw ParseError("--family must name a catalog family");
  }
  const SweepFamily family = MakeSweepFamily(spec.family, spec.params);
  const std::vector<double> grid =
      UniformGrid(cfg.from.value_or(family.lo), cfg.to.value_or(family.hi),
                  cfg.points > 0 ? cfg.points : family.default_points);
  SweepReport report;
  try {
    report = SweepAndFitA0(family, grid, cfg.active_qubit, cfg.steps);
  } catch (const DegenerateFitError& e) {
    std::cerr << "mcqw: warning: " << e.what() << '\n';
    report = RunSweep(family, grid, cfg.active_qubit, cfg.steps);
  }
  if (Json(cfg)) {
    Emit(cfg, SweepReportJson(report));
  } else {
    Emit(cfg, Str([&](std::ostream& o) { WriteSweepCsv(o, report); }));
  }
  std::string fit_path = cfg.fit_out;
  if (fit_path.empty() && !cfg.out.empty()) fit_path = cfg.out + ".fit.json";
  if (!fit_path.empty() && report.fit) {
    AtomicWriteFile(fit_path, FitSummaryJson(*report.fit));
  }
  return 0;
}

template <typename Report>
std::string ReportCsv(const std::string& json_text) {
  // Flatten a report's JSON object into a header row and a value row.
  const json doc = json::parse(json_text);
  std::string header, values;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!header.empty()) {
      header += ',';
      values += ',';
    }
    header += it.key();
    const json& v = it.value();
    if (v.is_string()) {
      values += v.get<std::string>();
    } else if (v.is_boolean()) {
      values += v.get<bool>() ? "true" : "false";
    } else if (v.is_number_float()) {
      values += FormatDouble(v.get<double>());
    } else {
      values += v.dump();
    }
  }
  return header + "\n" + values + "\n";
}

int CmdMeanCheck(const RunConfig& cfg) {
  const CatalogEntry entry = ResolveState(cfg);
  const std::string text =
      MeanLawJson(MeanLawCheck(entry, cfg.active_qubit, cfg.steps));
  Emit(cfg, Json(cfg) ? text : ReportCsv<MeanLawReport>(text));
  return 0;
}

int CmdVarCheck(const RunConfig& cfg) {
  const CatalogEntry entry = ResolveState(cfg);
  const std::string text =
      VarianceLawJson(VarianceLawCheck(entry, cfg.active_qubit, cfg.steps));
  Emit(cfg, Json(cfg) ? text : ReportCsv<VarianceLawReport>(text));
  return 0;
}

int CmdQProfile(const RunConfig& cfg) {
  const CatalogEntry entry = ResolveState(cfg);
  if (entry.coin.num_coins() < 2) {
    throw DimensionError("global entanglement needs M >= 2 qubits");
  }
  if (cfg.mode == "lattice") {
    const auto profile = QLatticeProfile(EvolveFromConfig(entry.coin, cfg));
    if (Json(cfg)) {
      json doc = json::array();
      for (const auto& p : profile) {
        doc.push_back({{"site", p.site},
                       {"weight", p.weight},
                       {"Q", p.q ? json(*p.q) : json(nullptr)}});
      }
      Emit(cfg, doc.dump(2) + "\n");
    } else {
      Emit(cfg, Str([&](std::ostream& o) { WriteProfileCsv(o, profile); }));
    }
    return 0;
  }
  if (cfg.mode != "timeseries") {
    throw ParseError("--mode must be 'lattice' or 'timeseries'");
  }
  const int n = LatticeFor(cfg, cfg.steps);
  std::vector<int> sites = cfg.sites;
  if (sites.empty()) {
    const int x0 = DefaultStartSite(n);
    for (int site : {x0, x0 - 10, x0 - 20}) {
      if (site >= 0) sites.push_back(site);
    }
  }
  const QTimeSeries series =
      QTimeSeriesFor(entry, cfg.active_qubit, sites, cfg.steps, n);
  if (Json(cfg)) {
    json rows = json::array();
    for (const auto& row : series.rows) {
      json r = json::array();
      for (const auto& q : row) r.push_back(q ? json(*q) : json(nullptr));
      rows.push_back(std::move(r));
    }
    Emit(cfg, json{{"lattice_size", series.lattice_size},
                   {"start_site", series.start_site},
                   {"sites", series.sites},
                   {"Q", std::move(rows)}}
                      .dump(2) +
                  "\n");
  } else {
    Emit(cfg,
         Str([&](std::ostream& o) { WriteQTimeSeriesCsv(o, series); }));
  }
  return 0;
}

int CmdSymmetry(const RunConfig& cfg) {
  const CatalogEntry entry = ResolveState(cfg);
  const SymmetryReport r =
      DistributionSymmetry(EvolveFromConfig(entry.coin, cfg));
  if (Json(cfg)) {
    Emit(cfg, json{{"p_asymmetry", r.p_asymmetry},
                   {"q_asymmetry", r.q_asymmetry}}
                      .dump(2) +
                  "\n");
  } else {
    Emit(cfg, "p_asymmetry,q_asymmetry\n" + FormatDouble(r.p_asymmetry) +
                  "," + FormatDouble(r.q_asymmetry) + "\n");
  }
  return 0;
}

void AddStateOptions(CLI::App* cmd, RunConfig& cfg, int default_steps) {
  cmd->add_option("--state", cfg.state,
                  "Coin state: <family>:key=value,..., file:<path>, random")
      ->required();
  cmd->add_option("--coins", cfg.coins,
                  "Number of coin qubits (checked against the state)");
  cmd->add_option("--active-qubit", cfg.active_qubit,
                  "Coin qubit the toss and shift act on (1-based)");
  cfg.steps = default_steps;
  cmd->add_option("--steps", cfg.steps, "Number of walk steps")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-coin discrete-time quantum walk toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  app.add_option("--out,-o", cfg.out, "Output file (default: stdout)");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--quad-points", cfg.quad_points,
                 "Trapezoidal points (default: max(64, 32 t))");
  app.add_option("--lattice-size", cfg.lattice_size,
                 "Cyclic lattice size (default: 2 t + 21)");
  app.add_option("--seed", cfg.seed, "Seed for --state random");
  app.fallthrough();

  auto* simulate = app.add_subcommand("simulate", "Position distribution after t steps");
  AddStateOptions(simulate, cfg, 0);
  simulate->add_option("--snapshot", cfg.snapshot,
                       "Also write the amplitude tensor as CSV");

  auto* ctilde = app.add_subcommand("ctilde", "Table of c1_tilde(t), c2_tilde(t)");
  ctilde->add_option("--t-max", cfg.t_max, "Largest t")->capture_default_str();
  ctilde->add_flag("--fit", cfg.fit, "Append linear/quadratic fits");
  ctilde->add_option("--fit-from", cfg.fit_from, "First t in the fit window")
      ->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "Parameter sweep and A0 fit");
  sweep->add_option("--family", cfg.family,
                    "gammaGHZ, psi6, psi78, phi1[:split=s], phi2")
      ->required();
  sweep->add_option("--from", cfg.from, "Grid start");
  sweep->add_option("--to", cfg.to, "Grid end");
  sweep->add_option("--points", cfg.points, "Grid points");
  sweep->add_option("--active-qubit", cfg.active_qubit, "Active coin qubit");
  cfg.steps = 50;
  sweep->add_option("--steps", cfg.steps, "Number of walk steps")
      ->capture_default_str();
  sweep->add_option("--fit-out", cfg.fit_out,
                    "Fit summary JSON (default: <out>.fit.json)");

  auto* meancheck = app.add_subcommand("meancheck", "Check <x>^2 = c1~^2 (1 - IC^2)");
  AddStateOptions(meancheck, cfg, 50);
  auto* varcheck = app.add_subcommand("varcheck", "Check the variance law");
  AddStateOptions(varcheck, cfg, 50);

  auto* qprofile = app.add_subcommand("qprofile", "Global entanglement Q profiles");
  AddStateOptions(qprofile, cfg, 50);
  qprofile->add_option("--mode", cfg.mode, "lattice or timeseries")
      ->check(CLI::IsMember({"lattice", "timeseries"}))
      ->capture_default_str();
  qprofile->add_option("--sites", cfg.sites,
                       "Lattice sites for timeseries mode")
      ->delimiter(',');

  auto* symmetry = app.add_subcommand("symmetry", "P and Q mirror asymmetry");
  AddStateOptions(symmetry, cfg, 50);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (simulate->parsed()) return CmdSimulate(cfg);
    if (ctilde->parsed()) return CmdCTilde(cfg);
    if (sweep->parsed()) return CmdSweep(cfg);
    if (meancheck->parsed()) return CmdMeanCheck(cfg);
    if (varcheck->parsed()) return CmdVarCheck(cfg);
    if (qprofile->parsed()) return CmdQProfile(cfg);
    if (symmetry->parsed()) return CmdSymmetry(cfg);
  } catch (const std::exception& e) {
    std::cerr << "mcqw: error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
