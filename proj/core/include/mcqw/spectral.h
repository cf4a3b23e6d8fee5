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

#ifndef MCQW_SPECTRAL_H_
#define MCQW_SPECTRAL_H_

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include <Eigen/Dense>

#include "mcqw/coin_state.h"

// k-space analysis of the single-qubit walk.
//
// With psi(k) = sum_x e^{ikx} psi(x) one step acts as the 2x2 matrix U_k and
// t steps as U_k^t = (a, b; -b*, a*). Position moments become k-integrals of
// (U_k^t)^dagger d^m/dk^m U_k^t. Multi-qubit coin registers reduce to the
// active qubit: spectators only contribute an identity factor.
//
// Sign convention: position corresponds to -i d/dk under this transform, so
//   <x^m> = (-i)^m / 2pi  Int Tr(rho K_m) dk,
// while c1_tilde keeps the +i prefactor, i.e. c1_tilde(t) = -<x>(t) for the
// coin |0>. Squared means are unaffected.

namespace mcqw {

// (1/sqrt2)(e^{ik}, i e^{ik}; i e^{-ik}, e^{-ik}).
Eigen::Matrix2cd UK(double k);

// Eigenvalues (cos k +- i sqrt(1 + sin^2 k))/sqrt2 of UK(k).
std::pair<Complex, Complex> UKEigenvalues(double k);

// Columns (c+, 1) and (c-, 1) with c+- = e^{ik}(sin k +- sqrt(1 + sin^2 k)).
Eigen::Matrix2cd UKEigenvectors(double k);

// U_k^t from the closed form (a, b; -b*, a*).
Eigen::Matrix2cd UKPower(double k, int t);

// U_k^t as T diag(l1, l2)^t T^{-1}. Cross-check for UKPower.
Eigen::Matrix2cd UKPowerByEigen(double k, int t);

// Per-(k, t) quantities of the closed form and both moment integrands.
struct SpectralKernel {
  double k = 0.0;
  int t = 0;
  double theta = 0.0;  // arccos(cos k / sqrt2)
  Complex a, b;
  Complex c1, d1;  // (U^t)^dagger d/dk U^t = (c1, d1; -d1*, c1*)
  Complex c2, d2;  // (U^t)^dagger d2/dk2 U^t = (c2, d2; -d2*, c2*)
};

SpectralKernel EvaluateKernel(double k, int t);

enum class DerivativeMode { kAnalytic, kFiniteDifference };

// (U_k^t)^dagger d/dk U_k^t.
Eigen::Matrix2cd FirstMomentIntegrand(
    double k, int t, DerivativeMode mode = DerivativeMode::kAnalytic);

// (U_k^t)^dagger d^2/dk^2 U_k^t.
Eigen::Matrix2cd SecondMomentIntegrand(
    double k, int t, DerivativeMode mode = DerivativeMode::kAnalytic);

// Uniform trapezoidal rule on the periodic interval [-pi, pi).
struct QuadratureSpec {
  int num_points = 64;

  // max(64, 32 t).
  static QuadratureSpec ForTime(int t);

  // Throws QuadratureError if the resolution is below max(64, 32 t).
  void Validate(int t) const;
};

// Absolute shift allowed when the number of quadrature points is doubled.
inline constexpr double kQuadratureConvergence = 1e-8;

// Int_{-pi}^{pi} of both integrand matrices, elementwise.
struct MomentIntegrals {
  Eigen::Matrix2cd first = Eigen::Matrix2cd::Zero();
  Eigen::Matrix2cd second = Eigen::Matrix2cd::Zero();
};

// Raw trapezoidal sums for one resolution; no convergence check.
MomentIntegrals IntegrateMoments(int t, int num_points);

// IntegrateMoments at `quad` and at twice the resolution; throws
// QuadratureError if any entry moves by more than kQuadratureConvergence.
// Returns the finer result.
MomentIntegrals ConvergedMomentIntegrals(int t, const QuadratureSpec& quad);

// Memo of ConvergedMomentIntegrals keyed by (t, num_points). Safe for
// concurrent lookups and inserts.
class MomentCache {
 public:
  MomentIntegrals Get(int t, const QuadratureSpec& quad);
  std::size_t size() const;
  void Clear();

  // Process-wide instance used by the free functions below.
  static MomentCache& Global();

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<int, int>, MomentIntegrals> entries_;
};

// c1_tilde = (i/2pi) Int c1 dk. Throws QuadratureError if the imaginary part
// of the raw value exceeds 1e-10 or the quadrature is not converged.
double C1Tilde(int t, const QuadratureSpec& quad);
double C1Tilde(int t);

// c2_tilde = -(1/2pi) Int c2 dk.
double C2Tilde(int t, const QuadratureSpec& quad);
double C2Tilde(int t);

// <x^m> after t steps from `coin`, with the toss acting on `active_qubit`.
double MomentViaIntegral(const CoinState& coin, int active_qubit, int m,
                         int t, const QuadratureSpec& quad);
double MomentViaIntegral(const CoinState& coin, int active_qubit, int m,
                         int t);

}  // namespace mcqw

#endif  // MCQW_SPECTRAL_H_
