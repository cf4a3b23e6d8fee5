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

#include "mcqw/catalog.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "mcqw/error.h"

namespace mcqw {
namespace {

constexpr double kParamTolerance = 1e-9;

CoinState FromTerms(int num_coins,
                    std::initializer_list<std::pair<std::size_t, double>> terms,
                    double tolerance = kNormTolerance) {
  std::vector<Complex> amps(std::size_t{1} << num_coins);
  for (const auto& [index, value] : terms) amps[index] += value;
  return CoinState(std::move(amps), tolerance);
}

double Require(const std::map<std::string, double>& params,
               const std::string& key, std::string_view family) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw ParseError(std::string(family) + " requires parameter '" + key + "'");
  }
  return it->second;
}

void RejectUnknown(const std::map<std::string, double>& params,
                   std::set<std::string> allowed, std::string_view family) {
  for (const auto& [key, value] : params) {
    if (!allowed.count(key)) {
      throw ParseError("unknown parameter '" + key + "' for " +
                       std::string(family));
    }
  }
}

double IcSquaredDiagonal(double p) { return 4.0 * (p - p * p); }

}  // namespace

std::string_view ToString(EntanglementClass c) {
  return c == EntanglementClass::kPure ? "pure" : "mixed";
}

CatalogEntry GammaGhz(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw DimensionError("gamma must lie in [0, 1]");
  }
  const double other = std::sqrt(std::max(0.0, 1.0 - gamma * gamma));
  const double ic2 = IcSquaredDiagonal(gamma * gamma);
  return CatalogEntry{
      "gammaGHZ",
      FromTerms(3, {{0b000, gamma}, {0b111, other}}),
      {{"gamma", gamma}},
      EntanglementClass::kPure,
      {ic2, ic2, ic2},
  };
}

KappaParams Kappas(double delta) {
  KappaParams p;
  p.eta = std::sqrt(12.0 + delta * (delta - 4.0));
  p.chi = p.eta + delta - 2.0;
  p.kappa1 = std::sqrt(p.chi) / (2.0 * std::sqrt(p.eta));
  p.kappa2 = -2.0 / (std::sqrt(p.chi) * std::sqrt(p.eta));
  return p;
}

CatalogEntry Psi6(double delta) {
  const KappaParams p = Kappas(delta);
  const double k2sq = p.kappa2 * p.kappa2;
  const double outer = 1.0 - k2sq * k2sq;
  return CatalogEntry{
      "psi6",
      FromTerms(3, {{0b001, p.kappa1}, {0b010, p.kappa2}, {0b100, p.kappa1}}),
      {{"delta", delta}},
      EntanglementClass::kPure,
      {outer, 4.0 * (k2sq - k2sq * k2sq), outer},
  };
}

CatalogEntry Psi78(double delta) {
  const KappaParams p = Kappas(delta);
  const double s = 1.0 / std::sqrt(2.0);
  const double k1 = p.kappa1 * s;
  const double k2 = p.kappa2 * s;
  // Both single-qubit reductions are balanced on the diagonal with real
  // coherence kappa1 kappa2 (outer qubits) or kappa1^2 (middle qubit).
  const double k1sq = p.kappa1 * p.kappa1;
  const double outer = 1.0 - 4.0 * k1sq * p.kappa2 * p.kappa2;
  return CatalogEntry{
      "psi78",
      FromTerms(3, {{0b001, k1},
                    {0b010, k2},
                    {0b011, k1},
                    {0b100, k1},
                    {0b101, k2},
                    {0b110, k1}}),
      {{"delta", delta}},
      EntanglementClass::kMixed,
      {outer, 1.0 - 4.0 * k1sq * k1sq, outer},
  };
}

CatalogEntry Phi1(double alpha1, double alpha2, double alpha3) {
  const double a1 = alpha1 * alpha1;
  const double a2 = alpha2 * alpha2;
  const double a3 = alpha3 * alpha3;
  if (std::abs(a1 + a2 + 2.0 * a3 - 1.0) > kParamTolerance) {
    throw NormalizationError(
        "phi1 requires alpha1^2 + alpha2^2 + 2 alpha3^2 = 1");
  }
  return CatalogEntry{
      "phi1",
      FromTerms(4, {{0b1110, alpha1},
                    {0b1011, alpha2},
                    {0b0111, alpha3},
                    {0b1101, -alpha3}}),
      {{"alpha1", alpha1}, {"alpha2", alpha2}, {"alpha3", alpha3}},
      EntanglementClass::kPure,
      {IcSquaredDiagonal(a3), IcSquaredDiagonal(a2), IcSquaredDiagonal(a3),
       IcSquaredDiagonal(a1)},
  };
}

CatalogEntry Phi1Split(double alpha3, double split) {
  if (!(alpha3 >= 0.0 && 2.0 * alpha3 * alpha3 <= 1.0 + kParamTolerance)) {
    throw DimensionError("alpha3 must lie in [0, 1/sqrt2]");
  }
  if (!(split >= 0.0 && split <= 1.0)) {
    throw DimensionError("split must lie in [0, 1]");
  }
  const double rest = std::max(0.0, 1.0 - 2.0 * alpha3 * alpha3);
  CatalogEntry entry = Phi1(std::sqrt(split * rest),
                            std::sqrt((1.0 - split) * rest), alpha3);
  entry.params["split"] = split;
  return entry;
}

CatalogEntry Phi2(double beta1, double beta2) {
  if (std::abs(4.0 * beta1 * beta1 + 2.0 * beta2 * beta2 - 1.0) >
      kParamTolerance) {
    throw NormalizationError("phi2 requires 4 beta1^2 + 2 beta2^2 = 1");
  }
  return CatalogEntry{
      "phi2",
      FromTerms(4, {{0b0011, -beta1},
                    {0b0110, beta1},
                    {0b1001, -beta1},
                    {0b1100, beta1},
                    {0b0101, -beta2},
                    {0b1010, beta2}}),
      {{"beta1", beta1}, {"beta2", beta2}},
      EntanglementClass::kMixed,
      {1.0, 1.0, 1.0, 1.0},
  };
}

CatalogEntry Phi2FromBeta1(double beta1) {
  if (!(beta1 >= 0.0 && 4.0 * beta1 * beta1 <= 1.0 + kParamTolerance)) {
    throw DimensionError("beta1 must lie in [0, 1/2]");
  }
  return Phi2(beta1, std::sqrt(std::max(0.0, (1.0 - 4.0 * beta1 * beta1) / 2.0)));
}

CatalogEntry MakeCatalogEntry(std::string_view family,
                              const std::map<std::string, double>& params) {
  if (family == "gammaGHZ") {
    RejectUnknown(params, {"gamma"}, family);
    return GammaGhz(Require(params, "gamma", family));
  }
  if (family == "psi6" || family == "psi78") {
    RejectUnknown(params, {"delta"}, family);
    const double delta = Require(params, "delta", family);
    return family == "psi6" ? Psi6(delta) : Psi78(delta);
  }
  if (family == "phi1") {
    RejectUnknown(params, {"alpha1", "alpha2", "alpha3", "split"}, family);
    const double alpha3 = Require(params, "alpha3", family);
    if (params.count("alpha1") || params.count("alpha2")) {
      if (params.count("split")) {
        throw ParseError("phi1 takes either alpha1/alpha2 or split");
      }
      return Phi1(Require(params, "alpha1", family),
                  Require(params, "alpha2", family), alpha3);
    }
    auto split = params.find("split");
    return Phi1Split(alpha3, split == params.end() ? 0.5 : split->second);
  }
  if (family == "phi2") {
    RejectUnknown(params, {"beta1", "beta2"}, family);
    const double beta1 = Require(params, "beta1", family);
    if (params.count("beta2")) return Phi2(beta1, params.at("beta2"));
    return Phi2FromBeta1(beta1);
  }
  throw ParseError("unknown catalog state '" + std::string(family) + "'");
}

const std::vector<std::string>& CatalogFamilies() {
  static const std::vector<std::string> names = {"gammaGHZ", "psi6", "psi78",
                                                 "phi1", "phi2"};
  return names;
}

}  // namespace mcqw
