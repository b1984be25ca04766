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

#include "okp/rational.h"

#include <cctype>
#include <cmath>
#include <cstring>
#include <limits>

#include "okp/error.h"

namespace okp {
namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt ParseInteger(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!IsDigits(text)) {
    Fail(ErrorCode::kParse, "malformed number '" + std::string(whole) + "'");
  }
  BigInt value(std::string(text), 10);
  return negative ? BigInt(-value) : value;
}

Rational ParseDecimal(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    BigInt exp = ParseInteger(text.substr(e + 1), whole);
    if (!exp.fits_slong_p() || abs(exp) > 10000) {
      Fail(ErrorCode::kParse, "exponent out of range in '" +
                                  std::string(whole) + "'");
    }
    exponent = exp.get_si();
    text = text.substr(0, e);
  }
  std::string digits;
  long fraction_digits = 0;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if ((!int_part.empty() && !IsDigits(int_part)) ||
        (!frac_part.empty() && !IsDigits(frac_part)) ||
        (int_part.empty() && frac_part.empty())) {
      Fail(ErrorCode::kParse, "malformed decimal '" + std::string(whole) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    fraction_digits = static_cast<long>(frac_part.size());
  } else {
    if (!IsDigits(text)) {
      Fail(ErrorCode::kParse, "malformed number '" + std::string(whole) + "'");
    }
    digits = std::string(text);
  }
  BigInt numerator(digits, 10);
  if (negative) numerator = -numerator;
  const long scale = exponent - fraction_digits;
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(
                                          scale < 0 ? -scale : scale));
  Rational result = scale < 0 ? MakeRational(numerator, power)
                              : Rational(BigInt(numerator * power));
  return result;
}

}  // namespace

Rational MakeRational(std::int64_t num, std::int64_t den) {
  Require(den != 0, "zero denominator");
  Rational r(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

Rational MakeRational(const BigInt& num, const BigInt& den) {
  Require(den != 0, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational ParseRational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) Fail(ErrorCode::kParse, "empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = ParseInteger(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (den_text.empty() || den_text.front() == '-' || den_text.front() == '+')
      Fail(ErrorCode::kParse, "malformed fraction '" + std::string(text) + "'");
    BigInt den = ParseInteger(den_text, text);
    if (den == 0) {
      Fail(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
    }
    return MakeRational(num, den);
  }
  return ParseDecimal(text);
}

std::string ToString(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double ToDouble(const Rational& value) {
  // mpq_get_d truncates toward zero; fix up to round-to-nearest-even so that
  // ToDouble(2/3) == 2.0 / 3.0 and similar identities hold.
  const double truncated = value.get_d();
  if (!std::isfinite(truncated)) return truncated;
  const double away = std::nextafter(
      truncated, sgn(value) >= 0 ? std::numeric_limits<double>::infinity()
                                 : -std::numeric_limits<double>::infinity());
  if (!std::isfinite(away)) return truncated;
  Rational mid = (Rational(truncated) + Rational(away)) / 2;
  const int order = sgn(value) >= 0 ? cmp(value, mid) : cmp(mid, value);
  if (order > 0) return away;
  if (order < 0) return truncated;
  std::int64_t bits = 0;
  std::memcpy(&bits, &truncated, sizeof(bits));
  return (bits & 1) == 0 ? truncated : away;
}

BigInt Floor(const Rational& value) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

std::uint64_t FloorDivU64(const Rational& numerator,
                          const Rational& denominator) {
  Require(sgn(denominator) > 0, "nonpositive divisor");
  if (sgn(numerator) <= 0) return 0;
  Rational quotient = numerator / denominator;
  return ToU64(Floor(quotient));
}

std::uint64_t ToU64(const BigInt& value) {
  if (sgn(value) < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 64) {
    Fail(ErrorCode::kLimitExceeded,
         "integer " + value.get_str() + " does not fit in 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
  return out;
}

std::int64_t ToI64(const BigInt& value) {
  if (mpz_sizeinbase(value.get_mpz_t(), 2) > 62) {
    Fail(ErrorCode::kLimitExceeded,
         "integer " + value.get_str() + " does not fit in 63 bits");
  }
  return value.get_si();
}

BigInt Lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Rational Inverse(const Rational& value) {
  Require(sgn(value) != 0, "inverse of zero");
  Rational out;
  mpq_inv(out.get_mpq_t(), value.get_mpq_t());
  return out;
}

}  // namespace okp
