// Copyright 2026 The okp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Floating-point side of the randomized threshold algorithm: quadrature, the
// threshold distribution X (atoms at 1/2 and 2/3, two density pieces), and
// the harmonic-number constants of the prefix lower bound.

#ifndef OKP_NUMERICS_H_
#define OKP_NUMERICS_H_

#include <functional>
#include <span>
#include <vector>

#include "okp/rational.h"

namespace okp {

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
  int evaluations = 0;
};

// Adaptive Simpson on [a, b] with absolute tolerance `tolerance`. Throws
// ErrorCode::kNumerical when the recursion depth is exhausted before the
// local error estimates meet the tolerance.
QuadratureResult AdaptiveSimpson(const std::function<double(double)>& f,
                                 double a, double b, double tolerance,
                                 int max_depth = 48);

inline constexpr double kHalf = 0.5;
inline constexpr double kTwoThirds = 2.0 / 3.0;

// Distribution of the threshold X:
//   Pr[X = 1/2] = p_half
//   f(x) = p_half / x                            on (1/2, 2/3)
//   Pr[X = 2/3] = p_two_thirds
//   f(x) = p_half (1 + ln(2 - x)) / (2x)         on (2/3, 1]
// Immutable once computed.
class ThresholdDistribution {
 public:
  // Solves the two defining equations. `tolerance` in (0, 1e-6] bounds the
  // quadrature error of J = int_{2/3}^1 (1 + ln(2 - x)) / x dx.
  static ThresholdDistribution Compute(double tolerance = 1e-10);

  double p_half() const { return p_half_; }
  double p_two_thirds() const { return p_two_thirds_; }
  // J above; p_half = 2 / (3 + J).
  double j_integral() const { return j_integral_; }
  double tolerance() const { return tolerance_; }

  // |p_half - (2/3)(p_two_thirds + p_half + p_half ln(4/3))|
  double BalanceResidual() const { return balance_residual_; }
  // |1 - total mass|, with the piece-2 mass integrated independently of the
  // table used by Cdf.
  double MassResidual() const { return mass_residual_; }

  double Density(double x) const;
  // Pr[X <= x] for x in [0, 1].
  double Cdf(double x) const;
  // Pr[X < x].
  double CdfLeft(double x) const;
  // inf { x : Cdf(x) >= u } for u in [0, 1).
  double Sample(double u) const;

  // int_{2/3}^{xi} x f(x) dx for xi in [2/3, 1].
  double PartialMeanAboveTwoThirds(double xi) const;

 private:
  ThresholdDistribution() = default;

  // int_{2/3}^{x} (1 + ln(2 - t)) / t dt via the cumulative table.
  double PieceTwoIntegral(double x) const;
  double Invert(double u, double lo, double hi) const;

  double tolerance_ = 0;
  double p_half_ = 0;
  double p_two_thirds_ = 0;
  double j_integral_ = 0;
  double balance_residual_ = 0;
  double mass_residual_ = 0;
  double cdf_below_two_thirds_ = 0;  // Pr[X < 2/3]
  std::vector<double> grid_x_;       // uniform grid on [2/3, 1]
  std::vector<double> grid_j_;       // piece-2 integral at grid points
};

struct MonotoneCheck {
  bool increasing = false;
  double min_difference = 0;
  double g_first = 0;  // g(2/3)
  double g_last = 0;   // g(1)
};

// g(xi) = xi / ((2/3) p_half + (2/3) p_two_thirds + int_{2/3}^{xi} x f(x) dx)
// on a uniform grid over [2/3, 1]; increasing iff every successive
// difference is >= -1e-12. grid_points >= 10.
MonotoneCheck CheckGMonotone(const ThresholdDistribution& dist,
                             int grid_points);

// H_{2n} - H_n = sum_{k=1}^{n} 1 / (n + k), exact. n >= 1.
Rational HarmonicDiff(int n);

// Kolmogorov-Smirnov distance between the empirical distribution of
// `samples` and the threshold distribution, handling its atoms.
double KolmogorovSmirnov(const ThresholdDistribution& dist,
                         std::vector<double> samples);

// Asymptotic KS critical value at significance 1%: 1.6276 / sqrt(n).
double KsCriticalValue1Percent(std::size_t n);

}  // namespace okp

#endif  // OKP_NUMERICS_H_
