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

#include "mcqw/spectral.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mcqw/entanglement.h"
#include "mcqw/error.h"

namespace mcqw {
namespace {

constexpr Complex kI(0.0, 1.0);
constexpr double kPi = std::numbers::pi;

void CheckTime(int t) {
  if (t < 0) throw Error("time must be non-negative");
}

Eigen::Matrix2cd FromAB(Complex a, Complex b) {
  Eigen::Matrix2cd u;
  u << a, b,
       -std::conj(b), std::conj(a);
  return u;
}

// a, b and their first two k-derivatives, differentiated by hand from
//   a = cos(t theta) + i f sin(t theta),     f = sin k / r,
//   b = i e^{ik} g sin(t theta),             g = 1 / r,
// with r = sqrt(1 + sin^2 k) and theta' = f.
struct ClosedForm {
  double theta;
  Complex a, da, d2a;
  Complex b, db, d2b;
};

ClosedForm Differentiate(double k, int t) {
  const double s = std::sin(k);
  const double c = std::cos(k);
  const double r = std::sqrt(1.0 + s * s);
  const double r3 = r * r * r;
  const double r5 = r3 * r * r;

  const double f = s / r;
  const double df = c / r3;
  const double d2f = -s / r3 - 3.0 * s * c * c / r5;
  const double g = 1.0 / r;
  const double dg = -s * c / r3;
  const double d2g = -(c * c - s * s) / r3 + 3.0 * s * s * c * c / r5;

  const double theta = std::acos(c / std::sqrt(2.0));
  const double tt = static_cast<double>(t);
  const double cos_t = std::cos(tt * theta);
  const double sin_t = std::sin(tt * theta);
  // theta' = f, theta'' = f'.
  const double dcos_t = -tt * f * sin_t;
  const double d2cos_t = -tt * df * sin_t - tt * tt * f * f * cos_t;
  const double dsin_t = tt * f * cos_t;
  const double d2sin_t = tt * df * cos_t - tt * tt * f * f * sin_t;

  ClosedForm out;
  out.theta = theta;
  out.a = Complex(cos_t, f * sin_t);
  out.da = Complex(dcos_t, df * sin_t + f * dsin_t);
  out.d2a = Complex(d2cos_t, d2f * sin_t + 2.0 * df * dsin_t + f * d2sin_t);

  // b = i e^{ik} q with q = g sin(t theta).
  const Complex e = std::exp(kI * k);
  const double q = g * sin_t;
  const double dq = dg * sin_t + g * dsin_t;
  const double d2q = d2g * sin_t + 2.0 * dg * dsin_t + g * d2sin_t;
  out.b = kI * e * q;
  out.db = kI * e * (kI * q + dq);
  out.d2b = kI * e * (-q + 2.0 * kI * dq + d2q);
  return out;
}

// Central differences of the closed form: two-point for the first
// derivative, five-point for the second (the t^4 growth of the fourth
// derivative rules out the three-point stencil at t ~ 50).
constexpr double kFirstStep = 1e-6;
constexpr double kSecondStep = 5e-4;

Eigen::Matrix2cd FiniteFirst(double k, int t) {
  return (UKPower(k + kFirstStep, t) - UKPower(k - kFirstStep, t)) /
         (2.0 * kFirstStep);
}

Eigen::Matrix2cd FiniteSecond(double k, int t) {
  const double h = kSecondStep;
  return (-UKPower(k + 2 * h, t) + 16.0 * UKPower(k + h, t) -
          30.0 * UKPower(k, t) + 16.0 * UKPower(k - h, t) -
          UKPower(k - 2 * h, t)) /
         (12.0 * h * h);
}

}  // namespace

Eigen::Matrix2cd UK(double k) {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex ep = std::exp(kI * k);
  const Complex em = std::exp(-kI * k);
  Eigen::Matrix2cd u;
  u << s * ep, s * kI * ep,
       s * kI * em, s * em;
  return u;
}

std::pair<Complex, Complex> UKEigenvalues(double k) {
  const double r = std::sqrt(1.0 + std::sin(k) * std::sin(k));
  const double s = 1.0 / std::sqrt(2.0);
  return {s * Complex(std::cos(k), r), s * Complex(std::cos(k), -r)};
}

Eigen::Matrix2cd UKEigenvectors(double k) {
  const double r = std::sqrt(1.0 + std::sin(k) * std::sin(k));
  const Complex e = std::exp(kI * k);
  Eigen::Matrix2cd t;
  t << e * (std::sin(k) + r), e * (std::sin(k) - r),
       1.0, 1.0;
  return t;
}

Eigen::Matrix2cd UKPower(double k, int t) {
  CheckTime(t);
  const ClosedForm cf = Differentiate(k, t);
  return FromAB(cf.a, cf.b);
}

Eigen::Matrix2cd UKPowerByEigen(double k, int t) {
  CheckTime(t);
  const auto [l1, l2] = UKEigenvalues(k);
  const Eigen::Matrix2cd vecs = UKEigenvectors(k);
  Eigen::Matrix2cd diag = Eigen::Matrix2cd::Zero();
  diag(0, 0) = std::pow(l1, t);
  diag(1, 1) = std::pow(l2, t);
  return vecs * diag * vecs.inverse();
}

SpectralKernel EvaluateKernel(double k, int t) {
  CheckTime(t);
  const ClosedForm cf = Differentiate(k, t);
  const Eigen::Matrix2cd u = FromAB(cf.a, cf.b);
  const Eigen::Matrix2cd k1 = u.adjoint() * FromAB(cf.da, cf.db);
  const Eigen::Matrix2cd k2 = u.adjoint() * FromAB(cf.d2a, cf.d2b);
  SpectralKernel kernel;
  kernel.k = k;
  kernel.t = t;
  kernel.theta = cf.theta;
  kernel.a = cf.a;
  kernel.b = cf.b;
  kernel.c1 = k1(0, 0);
  kernel.d1 = k1(0, 1);
  kernel.c2 = k2(0, 0);
  kernel.d2 = k2(0, 1);
  return kernel;
}

Eigen::Matrix2cd FirstMomentIntegrand(double k, int t, DerivativeMode mode) {
  CheckTime(t);
  if (mode == DerivativeMode::kFiniteDifference) {
    return UKPower(k, t).adjoint() * FiniteFirst(k, t);
  }
  const ClosedForm cf = Differentiate(k, t);
  return FromAB(cf.a, cf.b).adjoint() * FromAB(cf.da, cf.db);
}

Eigen::Matrix2cd SecondMomentIntegrand(double k, int t, DerivativeMode mode) {
  CheckTime(t);
  if (mode == DerivativeMode::kFiniteDifference) {
    return UKPower(k, t).adjoint() * FiniteSecond(k, t);
  }
  const ClosedForm cf = Differentiate(k, t);
  return FromAB(cf.a, cf.b).adjoint() * FromAB(cf.d2a, cf.d2b);
}

QuadratureSpec QuadratureSpec::ForTime(int t) {
  return QuadratureSpec{std::max(64, 32 * t)};
}

void QuadratureSpec::Validate(int t) const {
  if (num_points < 64 || num_points < 32 * t) {
    throw QuadratureError("quadrature with " + std::to_string(num_points) +
                          " points cannot resolve t = " + std::to_string(t) +
                          " (need >= max(64, 32 t))");
  }
}

MomentIntegrals IntegrateMoments(int t, int num_points) {
  CheckTime(t);
  if (num_points < 1) throw QuadratureError("need at least one point");
  MomentIntegrals sum;
  if (t == 0) return sum;
  const double h = 2.0 * kPi / num_points;
  for (int j = 0; j < num_points; ++j) {
    const double k = -kPi + h * j;
    const ClosedForm cf = Differentiate(k, t);
    const Eigen::Matrix2cd u_adj = FromAB(cf.a, cf.b).adjoint();
    sum.first += u_adj * FromAB(cf.da, cf.db);
    sum.second += u_adj * FromAB(cf.d2a, cf.d2b);
  }
  sum.first *= h;
  sum.second *= h;
  return sum;
}

MomentIntegrals ConvergedMomentIntegrals(int t, const QuadratureSpec& quad) {
  quad.Validate(t);
  const MomentIntegrals coarse = IntegrateMoments(t, quad.num_points);
  const MomentIntegrals fine = IntegrateMoments(t, 2 * quad.num_points);
  // Compare on the moment scale (integral / 2pi).
  const double shift =
      std::max((fine.first - coarse.first).cwiseAbs().maxCoeff(),
               (fine.second - coarse.second).cwiseAbs().maxCoeff()) /
      (2.0 * kPi);
  if (shift > kQuadratureConvergence) {
    throw QuadratureError("quadrature not converged at t = " +
                          std::to_string(t) + ": doubling " +
                          std::to_string(quad.num_points) +
                          " points moved the result by " +
                          std::to_string(shift));
  }
  return fine;
}

MomentIntegrals MomentCache::Get(int t, const QuadratureSpec& quad) {
  const std::pair<int, int> key{t, quad.num_points};
  {
    std::shared_lock lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  }
  MomentIntegrals value = ConvergedMomentIntegrals(t, quad);
  std::unique_lock lock(mutex_);
  return entries_.try_emplace(key, value).first->second;
}

std::size_t MomentCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void MomentCache::Clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

MomentCache& MomentCache::Global() {
  static MomentCache cache;
  return cache;
}

double C1Tilde(int t, const QuadratureSpec& quad) {
  const MomentIntegrals ints = MomentCache::Global().Get(t, quad);
  const Complex raw = kI * ints.first(0, 0) / (2.0 * kPi);
  if (std::abs(raw.imag()) > 1e-10) {
    throw QuadratureError("c1_tilde(" + std::to_string(t) +
                          ") has imaginary part " +
                          std::to_string(raw.imag()));
  }
  return raw.real();
}

double C1Tilde(int t) { return C1Tilde(t, QuadratureSpec::ForTime(t)); }

double C2Tilde(int t, const QuadratureSpec& quad) {
  const MomentIntegrals ints = MomentCache::Global().Get(t, quad);
  const Complex raw = -ints.second(0, 0) / (2.0 * kPi);
  if (std::abs(raw.imag()) > 1e-10) {
    throw QuadratureError("c2_tilde(" + std::to_string(t) +
                          ") has imaginary part " +
                          std::to_string(raw.imag()));
  }
  return raw.real();
}

double C2Tilde(int t) { return C2Tilde(t, QuadratureSpec::ForTime(t)); }

double MomentViaIntegral(const CoinState& coin, int active_qubit, int m,
                         int t, const QuadratureSpec& quad) {
  if (m != 1 && m != 2) throw Error("moment order must be 1 or 2");
  CheckQubit(active_qubit, coin.num_coins());
  const MomentIntegrals ints = MomentCache::Global().Get(t, quad);
  const Eigen::Matrix2cd rho = ReduceToQubit(coin, active_qubit);
  const Eigen::Matrix2cd& integral = m == 1 ? ints.first : ints.second;
  const Complex prefactor = m == 1 ? -kI : Complex(-1.0, 0.0);
  return (prefactor * (rho * integral).trace() / (2.0 * kPi)).real();
}

double MomentViaIntegral(const CoinState& coin, int active_qubit, int m,
                         int t) {
  return MomentViaIntegral(coin, active_qubit, m, t,
                           QuadratureSpec::ForTime(t));
}

}  // namespace mcqw
