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

#include "mcqw/io.h"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>
#include <unistd.h>

#include "json.hpp"
#include "mcqw/error.h"

namespace mcqw {
namespace {

using nlohmann::json;

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double ParseNumber(std::string_view text, std::string_view what) {
  const std::string owned(Trim(text));
  if (owned.empty()) throw ParseError("empty value for " + std::string(what));
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(owned.c_str(), &end);
  if (end != owned.c_str() + owned.size() || errno == ERANGE) {
    throw ParseError("cannot parse '" + owned + "' as a number for " +
                     std::string(what));
  }
  return value;
}

json FitToJson(const FitResult& fit) {
  return json{{"model", std::string(ToString(fit.model))},
              {"coefficients", fit.coefficients},
              {"residual_rms", fit.residual_rms}};
}

}  // namespace

std::string FormatDouble(double value) {
  if (value == 0.0) return "0";  // no "-0" in output files
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void WriteDistributionCsv(std::ostream& out, const WalkState& state) {
  out << "site,probability\n";
  const std::vector<double> p = PositionDistribution(state);
  for (std::size_t x = 0; x < p.size(); ++x) {
    out << x << ',' << FormatDouble(p[x]) << '\n';
  }
}

void WriteSnapshotCsv(std::ostream& out, const WalkState& state) {
  out << "coin_index,site,re,im\n";
  for (int c = 0; c < state.coin_dim(); ++c) {
    for (int x = 0; x < state.lattice_size(); ++x) {
      const Complex a = state.amplitude(c, x);
      out << c << ',' << x << ',' << FormatDouble(a.real()) << ','
          << FormatDouble(a.imag()) << '\n';
    }
  }
}

void WriteCTildeCsv(std::ostream& out, const std::vector<CTildeRow>& rows) {
  out << "t,c1_tilde,c2_tilde\n";
  for (const auto& row : rows) {
    out << row.t << ',' << FormatDouble(row.c1_tilde) << ','
        << FormatDouble(row.c2_tilde) << '\n';
  }
}

void WriteProfileCsv(std::ostream& out,
                     const std::vector<ProfileEntry>& profile) {
  out << "site,weight,Q\n";
  for (const auto& e : profile) {
    out << e.site << ',' << FormatDouble(e.weight) << ',';
    if (e.q) out << FormatDouble(*e.q);
    out << '\n';
  }
}

void WriteQTimeSeriesCsv(std::ostream& out, const QTimeSeries& series) {
  out << 't';
  for (int site : series.sites) out << ",Q@" << site;
  out << '\n';
  for (std::size_t t = 0; t < series.rows.size(); ++t) {
    out << t;
    for (const auto& q : series.rows[t]) {
      out << ',';
      if (q) out << FormatDouble(*q);
    }
    out << '\n';
  }
}

void WriteSweepCsv(std::ostream& out, const SweepReport& report) {
  const std::size_t m =
      report.points.empty() ? 0 : report.points.front().ic_squared.size();
  out << "param";
  for (std::size_t q = 1; q <= m; ++q) out << ",ic2_q" << q;
  out << ",mean_direct,mean_integral,second_moment,variance\n";
  for (const auto& p : report.points) {
    out << FormatDouble(p.param);
    for (double ic2 : p.ic_squared) out << ',' << FormatDouble(ic2);
    out << ',' << FormatDouble(p.mean_direct) << ','
        << FormatDouble(p.mean_integral) << ','
        << FormatDouble(p.second_moment) << ',' << FormatDouble(p.variance)
        << '\n';
  }
}

std::string SweepReportJson(const SweepReport& report) {
  json points = json::array();
  for (const auto& p : report.points) {
    points.push_back({{"param", p.param},
                      {"ic_squared", p.ic_squared},
                      {"mean_direct", p.mean_direct},
                      {"mean_integral", p.mean_integral},
                      {"second_moment", p.second_moment},
                      {"variance", p.variance}});
  }
  json doc{{"family", report.family},
           {"param_name", report.param_name},
           {"active_qubit", report.active_qubit},
           {"t", report.t},
           {"c1_tilde_squared", report.c1_tilde_squared},
           {"grid", report.grid},
           {"points", std::move(points)},
           {"fit", report.fit ? FitToJson(*report.fit) : json(nullptr)}};
  return doc.dump(2) + "\n";
}

std::string FitSummaryJson(const FitResult& fit) {
  return FitToJson(fit).dump(2) + "\n";
}

std::string MeanLawJson(const MeanLawReport& r) {
  json doc{{"state", r.state},
           {"active_qubit", r.active_qubit},
           {"t", r.t},
           {"mean_direct", r.mean_direct},
           {"mean_integral", r.mean_integral},
           {"ic_squared", r.ic_squared},
           {"c1_tilde", r.c1_tilde},
           {"predicted_mean_squared", r.predicted_mean_squared},
           {"residual", r.residual},
           {"coherence", r.coherence},
           {"holds", r.holds},
           {"mixed_exception", r.mixed_exception}};
  return doc.dump(2) + "\n";
}

std::string VarianceLawJson(const VarianceLawReport& r) {
  json doc{{"state", r.state},
           {"active_qubit", r.active_qubit},
           {"t", r.t},
           {"variance_direct", r.variance_direct},
           {"second_moment_direct", r.second_moment_direct},
           {"ic_squared", r.ic_squared},
           {"c1_tilde", r.c1_tilde},
           {"c2_tilde", r.c2_tilde},
           {"predicted_variance", r.predicted_variance},
           {"residual", r.residual},
           {"holds", r.holds},
           {"mixed_exception", r.mixed_exception}};
  return doc.dump(2) + "\n";
}

CoinState ReadStateFile(std::istream& in) {
  int num_coins = 0;
  std::vector<Complex> amps;
  std::vector<bool> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = Trim(line);
    if (text.empty() || text.front() == '#') continue;
    const std::string where = "state file line " + std::to_string(line_no);
    if (num_coins == 0) {
      if (text.substr(0, 6) != "coins=") {
        throw ParseError(where + ": expected 'coins=M' header");
      }
      const double m = ParseNumber(text.substr(6), "coins");
      if (m < 1 || m > 20 || m != static_cast<int>(m)) {
        throw ParseError(where + ": coins must be an integer in [1, 20]");
      }
      num_coins = static_cast<int>(m);
      amps.assign(std::size_t{1} << num_coins, Complex{});
      seen.assign(amps.size(), false);
      continue;
    }
    std::istringstream fields{std::string(text)};
    std::string bits, re, im, extra;
    if (!(fields >> bits >> re >> im) || (fields >> extra)) {
      throw ParseError(where + ": expected '<bitstring> <re> <im>'");
    }
    if (static_cast<int>(bits.size()) != num_coins ||
        bits.find_first_not_of("01") != std::string::npos) {
      throw ParseError(where + ": basis label '" + bits + "' is not " +
                       std::to_string(num_coins) + " binary digits");
    }
    const std::size_t index = std::stoull(bits, nullptr, 2);
    if (seen[index]) throw ParseError(where + ": duplicate basis " + bits);
    seen[index] = true;
    amps[index] = Complex(ParseNumber(re, "re"), ParseNumber(im, "im"));
  }
  if (num_coins == 0) throw ParseError("state file has no 'coins=M' header");
  return CoinState(std::move(amps), kNormTolerance);
}

CoinState ReadStateFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file " + path.string());
  return ReadStateFile(in);
}

void WriteStateFile(std::ostream& out, const CoinState& coin) {
  const int m = coin.num_coins();
  out << "coins=" << m << '\n';
  for (std::size_t c = 0; c < coin.dim(); ++c) {
    if (coin[c] == Complex{}) continue;
    std::string bits(static_cast<std::size_t>(m), '0');
    for (int q = 1; q <= m; ++q) {
      if (QubitBit(c, q, m)) bits[static_cast<std::size_t>(q - 1)] = '1';
    }
    out << bits << ' ' << FormatDouble(coin[c].real()) << ' '
        << FormatDouble(coin[c].imag()) << '\n';
  }
}

std::map<std::string, double> ParseParams(std::string_view text) {
  std::map<std::string, double> params;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = Trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{}
                                           : text.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ParseError("expected key=value, got '" + std::string(item) + "'");
    }
    const std::string key(Trim(item.substr(0, eq)));
    if (!params.emplace(key, ParseNumber(item.substr(eq + 1), key)).second) {
      throw ParseError("parameter '" + key + "' given twice");
    }
  }
  return params;
}

StateSpec ParseStateSpec(std::string_view text) {
  text = Trim(text);
  StateSpec spec;
  if (text == "random") {
    spec.kind = StateSpec::Kind::kRandom;
    return spec;
  }
  if (text.substr(0, 5) == "file:") {
    spec.kind = StateSpec::Kind::kFile;
    spec.path = std::string(text.substr(5));
    if (spec.path.empty()) throw ParseError("file: state spec needs a path");
    return spec;
  }
  const auto colon = text.find(':');
  spec.kind = StateSpec::Kind::kCatalog;
  spec.family = std::string(text.substr(0, colon));
  if (spec.family.empty()) throw ParseError("empty state spec");
  if (colon != std::string_view::npos) {
    spec.params = ParseParams(text.substr(colon + 1));
  }
  return spec;
}

void AtomicWriteFile(const std::filesystem::path& path,
                     std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw Error("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

}  // namespace mcqw
