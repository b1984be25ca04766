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

// Exact rational arithmetic. Rational is GMP's mpq_class: every arithmetic
// result is kept in canonical form (positive denominator, reduced).
//
// Beware of expression templates: bind results to `Rational`, never `auto`.

#ifndef OKP_RATIONAL_H_
#define OKP_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace okp {

using Rational = mpq_class;
using BigInt = mpz_class;

// Builds num/den in canonical form. den must be nonzero.
Rational MakeRational(std::int64_t num, std::int64_t den = 1);
Rational MakeRational(const BigInt& num, const BigInt& den);

// Accepts "p/q", "p", and decimal strings such as "-0.51" or "1.5e-3";
// decimals are converted exactly.
Rational ParseRational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string ToString(const Rational& value);

double ToDouble(const Rational& value);

BigInt Floor(const Rational& value);

// floor(numerator / denominator) for positive denominator, as uint64.
// Fails if the result does not fit.
std::uint64_t FloorDivU64(const Rational& numerator,
                          const Rational& denominator);

// Checked conversion of a nonnegative integer to uint64/int64.
std::uint64_t ToU64(const BigInt& value);
std::int64_t ToI64(const BigInt& value);

BigInt Lcm(const BigInt& a, const BigInt& b);

// 1 / value; value must be nonzero.
Rational Inverse(const Rational& value);

}  // namespace okp

#endif  // OKP_RATIONAL_H_
