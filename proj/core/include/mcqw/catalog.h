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

#ifndef MCQW_CATALOG_H_
#define MCQW_CATALOG_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mcqw/coin_state.h"

namespace mcqw {

// "pure": a single kind of multipartite entanglement (only 2-qubit or only
// 3-qubit, ...). "mixed": several kinds at once.
enum class EntanglementClass { kPure, kMixed };

std::string_view ToString(EntanglementClass c);

struct CatalogEntry {
  std::string name;
  CoinState coin;
  std::map<std::string, double> params;
  EntanglementClass entanglement_class = EntanglementClass::kPure;
  // Closed-form IC_i^2, index 0 is qubit 1.
  std::vector<double> expected_ic_squared;
};

// gamma |000> + sqrt(1 - gamma^2) |111>, gamma in [0, 1].
CatalogEntry GammaGhz(double gamma);

// Spin-chain parameters shared by psi6 and psi78.
struct KappaParams {
  double eta = 0.0;     // sqrt(12 + delta (delta - 4))
  double chi = 0.0;     // eta + delta - 2
  double kappa1 = 0.0;  // sqrt(chi) / (2 sqrt(eta))
  double kappa2 = 0.0;  // -2 / (sqrt(chi) sqrt(eta))
};
KappaParams Kappas(double delta);

// kappa1 |001> + kappa2 |010> + kappa1 |100>.
CatalogEntry Psi6(double delta);

// (kappa1 |001> + kappa2 |010> + kappa1 |011>
//  + kappa1 |100> + kappa2 |101> + kappa1 |110>) / sqrt2.
CatalogEntry Psi78(double delta);

// alpha1 |1110> + alpha2 |1011> + alpha3 |0111> - alpha3 |1101>.
// Requires alpha1^2 + alpha2^2 + 2 alpha3^2 = 1 within 1e-9.
CatalogEntry Phi1(double alpha1, double alpha2, double alpha3);

// Phi1 with alpha3 given and the remaining weight 1 - 2 alpha3^2 split as
// alpha1^2 = split * rest, alpha2^2 = (1 - split) * rest.
CatalogEntry Phi1Split(double alpha3, double split);

// -b1 |0011> + b1 |0110> - b1 |1001> + b1 |1100> - b2 |0101> + b2 |1010>.
// Requires 4 b1^2 + 2 b2^2 = 1 within 1e-9.
CatalogEntry Phi2(double beta1, double beta2);

// Phi2 with beta2 = sqrt((1 - 4 beta1^2) / 2).
CatalogEntry Phi2FromBeta1(double beta1);

// Builds a catalog entry by family name ("gammaGHZ", "psi6", "psi78",
// "phi1", "phi2") from named parameters. phi1 accepts either
// {alpha1, alpha2, alpha3} or {alpha3[, split]}; phi2 accepts {beta1, beta2}
// or {beta1}. Throws ParseError for unknown names or parameters.
CatalogEntry MakeCatalogEntry(std::string_view family,
                              const std::map<std::string, double>& params);

// Names accepted by MakeCatalogEntry.
const std::vector<std::string>& CatalogFamilies();

}  // namespace mcqw

#endif  // MCQW_CATALOG_H_
