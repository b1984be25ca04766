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

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "okp/error.h"
#include "okp/numerics.h"

namespace okp {
namespace {

constexpr int kGridSegments = 2048;
constexpr double kUpper = 1.0;

double PieceTwoIntegrand(double t) { return (1.0 + std::log(2.0 - t)) / t; }

double GridPoint(int i) {
  if (i == kGridSegments) return kUpper;
  return kTwoThirds + (kUpper - kTwoThirds) * i / kGridSegments;
}

// Composite Simpson with four panels; used on sub-segment pieces of width
// below 2e-4 where its error is far under 1e-15.
double LocalSimpson(double (*f)(double), double a, double b) {
  if (a == b) return 0;
  const double h = (b - a) / 4.0;
  return h / 3.0 *
         (f(a) + 4.0 * f(a + h) + 2.0 * f(a + 2 * h) + 4.0 * f(a + 3 * h) +
          f(b));
}

}  // namespace

ThresholdDistribution ThresholdDistribution::Compute(double tolerance) {
  if (!(tolerance > 0 && tolerance <= 1e-6)) {
    Fail(ErrorCode::kInvalidArgument, "tolerance must lie in (0, 1e-6]");
  }
  ThresholdDistribution dist;
  dist.tolerance_ = tolerance;
  dist.grid_x_.resize(kGridSegments + 1);
  dist.grid_j_.resize(kGridSegments + 1);
  dist.grid_x_[0] = kTwoThirds;
  dist.grid_j_[0] = 0;
  const double segment_tol = tolerance / kGridSegments;
  for (int i = 0; i < kGridSegments; ++i) {
    const double a = GridPoint(i);
    const double b = GridPoint(i + 1);
    dist.grid_x_[i + 1] = b;
    dist.grid_j_[i + 1] =
        dist.grid_j_[i] +
        AdaptiveSimpson(PieceTwoIntegrand, a, b, segment_tol).value;
  }
  const double j = dist.grid_j_.back();
  const double ln43 = std::log(4.0 / 3.0);
  dist.j_integral_ = j;
  dist.p_half_ = 2.0 / (3.0 + j);
  dist.p_two_thirds_ = (1.0 - 2.0 * ln43) / (3.0 + j);
  dist.cdf_below_two_thirds_ = dist.p_half_ * (1.0 + ln43);

  dist.balance_residual_ = std::abs(
      dist.p_half_ - (2.0 / 3.0) * (dist.p_two_thirds_ + dist.p_half_ +
                                    dist.p_half_ * ln43));
  // Independent route for the piece-2 mass: one adaptive pass over the
  // whole interval instead of the segment table.
  const double j_direct =
      AdaptiveSimpson(PieceTwoIntegrand, kTwoThirds, kUpper, tolerance / 10)
          .value;
  const double mass = dist.p_half_ + dist.p_half_ * ln43 + dist.p_two_thirds_ +
                      dist.p_half_ * j_direct / 2.0;
  dist.mass_residual_ = std::abs(1.0 - mass);
  return dist;
}

double ThresholdDistribution::PieceTwoIntegral(double x) const {
  if (x <= kTwoThirds) return 0;
  const double h = (kUpper - kTwoThirds) / kGridSegments;
  int i = static_cast<int>((x - kTwoThirds) / h);
  i = std::clamp(i, 0, kGridSegments - 1);
  while (i > 0 && grid_x_[i] > x) --i;
  while (i + 1 < kGridSegments && grid_x_[i + 1] <= x) ++i;
  return grid_j_[i] + LocalSimpson(PieceTwoIntegrand, grid_x_[i], x);
}

double ThresholdDistribution::Density(double x) const {
  if (x > kHalf && x < kTwoThirds) return p_half_ / x;
  if (x > kTwoThirds && x <= kUpper) {
    return p_half_ * (1.0 + std::log(2.0 - x)) / (2.0 * x);
  }
  return 0;
}

double ThresholdDistribution::Cdf(double x) const {
  if (!(x >= 0 && x <= 1)) {
    Fail(ErrorCode::kInvalidArgument, "Cdf argument outside [0, 1]");
  }
  if (x < kHalf) return 0;
  if (x < kTwoThirds) return p_half_ * (1.0 + std::log(2.0 * x));
  return cdf_below_two_thirds_ + p_two_thirds_ +
         0.5 * p_half_ * PieceTwoIntegral(x);
}

double ThresholdDistribution::CdfLeft(double x) const {
  if (!(x >= 0 && x <= 1)) {
    Fail(ErrorCode::kInvalidArgument, "CdfLeft argument outside [0, 1]");
  }
  if (x <= kHalf) return 0;
  if (x < kTwoThirds) return p_half_ * (1.0 + std::log(2.0 * x));
  if (x == kTwoThirds) return cdf_below_two_thirds_;
  return Cdf(x);
}

double ThresholdDistribution::Invert(double u, double lo, double hi) const {
  // Safeguarded Newton inside a bracket with Cdf(lo) < u <= Cdf(hi).
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 100; ++iter) {
    const double fx = Cdf(x) - u;
    if (fx < 0) {
      lo = x;
    } else {
      hi = x;
    }
    if (hi - lo <= 1e-13) break;
    const double density = Density(x);
    double next = density > 0 ? x - fx / density : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) < 1e-15) {
      x = next;
      break;
    }
    x = next;
  }
  return x;
}

double ThresholdDistribution::Sample(double u) const {
  if (!(u >= 0 && u < 1)) {
    Fail(ErrorCode::kInvalidArgument, "Sample argument outside [0, 1)");
  }
  if (u <= p_half_) return kHalf;
  if (u < cdf_below_two_thirds_) return Invert(u, kHalf, kTwoThirds);
  const double at_two_thirds = cdf_below_two_thirds_ + p_two_thirds_;
  if (u <= at_two_thirds) return kTwoThirds;
  // Locate the table segment, then refine locally.
  auto cdf_at = [&](int i) {
    return at_two_thirds + 0.5 * p_half_ * grid_j_[i];
  };
  if (u > cdf_at(kGridSegments)) return kUpper;
  int lo = 0;
  int hi = kGridSegments;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    if (cdf_at(mid) < u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return Invert(u, grid_x_[lo], grid_x_[hi]);
}

double ThresholdDistribution::PartialMeanAboveTwoThirds(double xi) const {
  Require(xi >= kTwoThirds && xi <= kUpper, "xi outside [2/3, 1]");
  auto integrand = [](double x) { return 1.0 + std::log(2.0 - x); };
  return 0.5 * p_half_ *
         AdaptiveSimpson(integrand, kTwoThirds, xi, tolerance_).value;
}

MonotoneCheck CheckGMonotone(const ThresholdDistribution& dist,
                             int grid_points) {
  Require(grid_points >= 10, "grid_points must be at least 10");
  const double base =
      (2.0 / 3.0) * dist.p_half() + (2.0 / 3.0) * dist.p_two_thirds();
  auto partial_integrand = [](double x) { return 1.0 + std::log(2.0 - x); };
  const double segment_tol = dist.tolerance() / grid_points;
  MonotoneCheck check;
  check.increasing = true;
  check.min_difference = std::numeric_limits<double>::infinity();
  double integral = 0;  // int_{2/3}^{xi} (1 + ln(2 - x)) dx
  double previous_xi = kTwoThirds;
  double previous_g = kTwoThirds / base;
  check.g_first = previous_g;
  for (int i = 1; i < grid_points; ++i) {
    const double xi =
        i == grid_points - 1
            ? 1.0
            : kTwoThirds + (1.0 - kTwoThirds) * i / (grid_points - 1);
    integral +=
        AdaptiveSimpson(partial_integrand, previous_xi, xi, segment_tol).value;
    const double g = xi / (base + 0.5 * dist.p_half() * integral);
    const double diff = g - previous_g;
    check.min_difference = std::min(check.min_difference, diff);
    if (diff < -1e-12) check.increasing = false;
    previous_xi = xi;
    previous_g = g;
  }
  check.g_last = previous_g;
  return check;
}

namespace {

// sum_{k=a}^{b-1} 1/(n+k) as an unreduced fraction, by binary splitting.
std::pair<BigInt, BigInt> HarmonicRange(int n, int a, int b) {
  if (b - a == 1) return {BigInt(1), BigInt(n + a)};
  const int mid = a + (b - a) / 2;
  auto [p1, q1] = HarmonicRange(n, a, mid);
  auto [p2, q2] = HarmonicRange(n, mid, b);
  return {BigInt(p1 * q2 + p2 * q1), BigInt(q1 * q2)};
}

}  // namespace

Rational HarmonicDiff(int n) {
  Require(n >= 1, "HarmonicDiff needs n >= 1");
  auto [p, q] = HarmonicRange(n, 1, n + 1);
  return MakeRational(p, q);
}

double KolmogorovSmirnov(const ThresholdDistribution& dist,
                         std::vector<double> samples) {
  Require(!samples.empty(), "KS statistic of an empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0;
  std::size_t i = 0;
  while (i < samples.size()) {
    std::size_t j = i;
    while (j < samples.size() && samples[j] == samples[i]) ++j;
    const double v = samples[i];
    const double below = static_cast<double>(i) / n;     // F_n(v-)
    const double at = static_cast<double>(j) / n;        // F_n(v)
    d = std::max(d, std::abs(below - dist.CdfLeft(v)));
    d = std::max(d, std::abs(at - dist.Cdf(v)));
    i = j;
  }
  return d;
}

double KsCriticalValue1Percent(std::size_t n) {
  return 1.6276 / std::sqrt(static_cast<double>(n));
}

}  // namespace okp
