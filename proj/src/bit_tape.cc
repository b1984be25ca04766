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

#include <bit>

#include "okp/advice.h"
#include "okp/error.h"

namespace okp {

int CeilLog2(std::uint64_t value) {
  Require(value >= 1, "CeilLog2 of zero");
  return value == 1 ? 0 : 64 - std::countl_zero(value - 1);
}

int EliasGammaLength(std::uint64_t value) {
  Require(value >= 1, "Elias gamma codes start at 1");
  return 2 * (63 - std::countl_zero(value)) + 1;
}

AdviceTape AdviceTape::FromBitString(std::string_view text) {
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      Fail(ErrorCode::kParse, std::string("advice tape character '") + c +
                                  "' is not a bit");
    }
    bits.push_back(c == '1');
  }
  return AdviceTape(std::move(bits));
}

void AdviceTape::AppendUnsigned(std::uint64_t value, int width) {
  Require(width >= 0 && width <= 64, "field width out of range");
  if (width < 64 && (value >> width) != 0) {
    Fail(ErrorCode::kInternal, "value " + std::to_string(value) +
                                   " does not fit in " +
                                   std::to_string(width) + " bits");
  }
  for (int b = width - 1; b >= 0; --b) bits_.push_back((value >> b) & 1);
}

void AdviceTape::AppendEliasGamma(std::uint64_t value) {
  const int length = EliasGammaLength(value);
  const int payload = (length - 1) / 2;
  for (int i = 0; i < payload; ++i) bits_.push_back(false);
  AppendUnsigned(value, payload + 1);
}

bool AdviceTape::ReadBit() {
  if (cursor_ >= bits_.size()) {
    Fail(ErrorCode::kInvalidArgument, "read past the end of the advice tape");
  }
  ++bits_read_;
  return bits_[cursor_++];
}

std::uint64_t AdviceTape::ReadUnsigned(int width) {
  std::uint64_t value = 0;
  for (int i = 0; i < width; ++i) value = (value << 1) | ReadBit();
  return value;
}

std::uint64_t AdviceTape::ReadEliasGamma() {
  int zeros = 0;
  while (!ReadBit()) {
    if (++zeros > 63) Fail(ErrorCode::kParse, "malformed Elias gamma code");
  }
  std::uint64_t value = 1;
  for (int i = 0; i < zeros; ++i) value = (value << 1) | ReadBit();
  return value;
}

std::string AdviceTape::ToBitString() const {
  std::string out;
  out.reserve(bits_.size());
  for (bool b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

std::string AdviceTape::ToHex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < bits_.size(); i += 4) {
    int nibble = 0;
    for (std::size_t j = i; j < i + 4; ++j) {
      nibble = (nibble << 1) | (j < bits_.size() && bits_[j] ? 1 : 0);
    }
    out.push_back(kDigits[nibble]);
  }
  return out;
}

}  // namespace okp
