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

// Advice tape and the two advice-assisted algorithms: a single bit choosing
// between greedy and wait-and-fill, and a near-optimal decoder driven by a
// compact description of an optimal packing.

#ifndef OKP_ADVICE_H_
#define OKP_ADVICE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "okp/instance.h"
#include "okp/oracle.h"

namespace okp {

// Bit sequence with a read cursor. Reading past the end is an error, so an
// oracle cannot signal anything through the tape length.
class AdviceTape {
 public:
  AdviceTape() = default;
  explicit AdviceTape(std::vector<bool> bits) : bits_(std::move(bits)) {}
  // Parses a string of '0' and '1' characters.
  static AdviceTape FromBitString(std::string_view text);

  void AppendBit(bool bit) { bits_.push_back(bit); }
  // `width` bits, most significant first. Requires value < 2^width.
  void AppendUnsigned(std::uint64_t value, int width);
  // Elias gamma code of value >= 1.
  void AppendEliasGamma(std::uint64_t value);

  bool ReadBit();
  std::uint64_t ReadUnsigned(int width);
  std::uint64_t ReadEliasGamma();

  std::size_t size() const { return bits_.size(); }
  std::size_t cursor() const { return cursor_; }
  std::uint64_t bits_read() const { return bits_read_; }
  const std::vector<bool>& bits() const { return bits_; }

  // MSB-first '0'/'1' string.
  std::string ToBitString() const;
  // MSB-first hex, last nibble zero-padded on the right.
  std::string ToHex() const;

 private:
  std::vector<bool> bits_;
  std::size_t cursor_ = 0;
  std::uint64_t bits_read_ = 0;
};

// Length of the Elias gamma code of value >= 1.
int EliasGammaLength(std::uint64_t value);
// ceil(log2(value)) for value >= 1; 0 for value 1.
int CeilLog2(std::uint64_t value);

// One-bit advice: 0 selects greedy, 1 selects wait-and-fill.
enum class OneBitChoice { kGreedy = 0, kWait = 1 };

// Simulates both strategies; ties go to greedy.
OneBitChoice OneBitDecision(const Instance& instance);
AdviceTape OneBitOracle(const Instance& instance);
// Reads exactly one bit, before the first item arrives.
RunTrace OneBitAlgorithm(const Instance& instance, AdviceTape tape);

// delta = eps / (eps + 2); items of size <= delta are small.
Rational AdviceDelta(const Rational& eps);

// Field widths of the near-optimal advice for n items at accuracy eps.
struct EpsAdviceLayout {
  std::uint64_t n = 0;
  Rational delta;
  std::uint64_t inverse_delta = 0;  // floor(1/delta)
  int header_bits = 0;              // Elias gamma of n + 1
  int index_bits = 0;               // ceil(log2(n+1))
  int h_quant_bits = 0;             // ceil(log2(floor(1/delta) + 2))
  int count_bits = 0;               // ceil(log2(floor(1/delta) + 1))
  int multiplicity_bits = 0;        // ceil(log2(floor(1/delta) + 1))

  static EpsAdviceLayout Of(std::uint64_t n, const Rational& eps);
};

struct EpsAdvicePayload {
  std::uint64_t n = 0;
  bool has_small = false;
  std::uint64_t m = 0;        // 1-based index of the densest small item
  std::uint64_t h_quant = 0;  // h' = h_quant * delta
  // (1-based index, multiplicity) of every large item in the packing.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> large_list;

  friend bool operator==(const EpsAdvicePayload&,
                         const EpsAdvicePayload&) = default;
};

// Describes the oracle's optimal witness.
EpsAdvicePayload BuildEpsAdvicePayload(const Instance& instance,
                                       const Rational& eps,
                                       const OracleOptions& options = {});
AdviceTape EncodeEpsAdvice(const EpsAdvicePayload& payload,
                           const Rational& eps);
// Reads one payload from the current cursor.
EpsAdvicePayload DecodeEpsAdvice(AdviceTape& tape, const Rational& eps);

AdviceTape EpsAdviceOracle(const Instance& instance, const Rational& eps,
                           const OracleOptions& options = {});
// Decodes the whole payload before the first item arrives, then packs item
// m floor(h'/s_m) times and every listed item its multiplicity.
// Guarantees gain >= (1 - eps) opt.
RunTrace EpsAdviceAlgorithm(const Instance& instance, const Rational& eps,
                            AdviceTape tape);

// Worst-case tape length of the layout: gamma(n+1), the small flag, m,
// h_quant, the list count, and floor(1/delta) entries of index and
// multiplicity.
std::uint64_t AdviceBitBound(std::uint64_t n, const Rational& eps);

}  // namespace okp

#endif  // OKP_ADVICE_H_
