// Copyright 2026 The qregret authors
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

#pragma once

#include <cstdint>
#include <random>

namespace qregret {

/// Seeded random source used everywhere randomness appears.
///
/// The stream is mt19937_64; normal variates come from a hand-rolled
/// Box-Muller transform so draws do not depend on the standard library's
/// unspecified std::normal_distribution algorithm.  Child streams are
/// derived from the base seed with splitmix64, independent of how many
/// draws the parent has made.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (cosine branch).
  double gaussian();

  /// Independent stream for task `index`, reproducible from the base seed.
  Rng child(std::uint64_t index) const;

  /// Algorithm identifier recorded in run metadata.
  static const char* algorithm_name() {
    return "mt19937_64/box-muller/splitmix64-streams";
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

/// splitmix64 step; used to derive child seeds.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace qregret
