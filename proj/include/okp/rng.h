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

#ifndef OKP_RNG_H_
#define OKP_RNG_H_

#include <cstdint>
#include <limits>

namespace okp {

// SplitMix64: small, fast, and fully specified, so streams are identical on
// every platform. Satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t Mix64(std::uint64_t x) { return SplitMix64(x)(); }

// Seed of trial `trial` on stream `stream` (an instance id); depends only on
// the three inputs, never on evaluation order.
inline std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t stream,
                                std::uint64_t trial) {
  return Mix64(Mix64(master ^ Mix64(stream + 0x632be59bd9b4e019ULL)) + trial);
}

// Uniform double in [0, 1) with 53 random bits.
inline double UniformDouble(SplitMix64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace okp

#endif  // OKP_RNG_H_
