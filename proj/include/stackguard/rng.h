// Copyright 2026 The Stackguard Authors
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

#ifndef STACKGUARD_RNG_H_
#define STACKGUARD_RNG_H_

#include <cstdint>
#include <random>

namespace stackguard {

// Portable random source, algorithm "sg-mt64-v1":
//
//   * raw stream: std::mt19937_64 seeded with the 64-bit seed. The engine's
//     output sequence is fixed by the C++ standard, so it is identical on
//     every conforming platform.
//   * uniform01(): top 53 bits of one raw draw, scaled by 2^-53, in [0, 1).
//   * uniform_index(n): rejection sampling on one or more raw draws.
//
// std::uniform_*_distribution is deliberately not used; its output is
// implementation-defined.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "sg-mt64-v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n). n must be positive.
  std::uint64_t uniform_index(std::uint64_t n);

  // Derives an independent seed for a named sub-stream (splitmix64 finalizer
  // over seed ^ stream).
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
};

}  // namespace stackguard

#endif  // STACKGUARD_RNG_H_
