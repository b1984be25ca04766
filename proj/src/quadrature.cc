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

#include <cmath>

#include "okp/error.h"
#include "okp/numerics.h"

namespace okp {
namespace {

struct SimpsonState {
  const std::function<double(double)>& f;
  int evaluations = 0;
  double error = 0;

  double Eval(double x) {
    ++evaluations;
    return f(x);
  }

  // Richardson-corrected Simpson on [a, b] given f at a, midpoint, b.
  double Recurse(double a, double b, double fa, double fm, double fb,
                 double whole, double tolerance, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = Eval(lm);
    const double frm = Eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tolerance) {
      error += std::abs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    if (depth <= 0) {
      Fail(ErrorCode::kNumerical,
           "adaptive Simpson did not converge on [" + std::to_string(a) + ", " +
               std::to_string(b) + "]");
    }
    return Recurse(a, m, fa, flm, fm, left, 0.5 * tolerance, depth - 1) +
           Recurse(m, b, fm, frm, fb, right, 0.5 * tolerance, depth - 1);
  }
};

}  // namespace

QuadratureResult AdaptiveSimpson(const std::function<double(double)>& f,
                                 double a, double b, double tolerance,
                                 int max_depth) {
  Require(tolerance > 0, "quadrature tolerance must be positive");
  QuadratureResult result;
  if (a == b) return result;
  SimpsonState state{f};
  const double fa = state.Eval(a);
  const double fb = state.Eval(b);
  const double m = 0.5 * (a + b);
  const double fm = state.Eval(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  result.value =
      state.Recurse(a, b, fa, fm, fb, whole, tolerance, max_depth);
  if (!std::isfinite(result.value)) {
    Fail(ErrorCode::kNumerical, "quadrature produced a non-finite value");
  }
  result.error_estimate = state.error;
  result.evaluations = state.evaluations;
  return result;
}

}  // namespace okp
