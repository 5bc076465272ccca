// Copyright 2026 The topocat Authors
//
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


#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "topocat/point_set.hpp"

namespace topocat {

/// Seeded generator used by every randomized check and generator.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Bounded draws use rejection sampling on the raw output instead
/// of std::uniform_int_distribution, whose algorithm is implementation
/// defined, so sequences agree across standard libraries.
class Rng {
 public:
  static constexpr std::uint64_t kDefaultSeed = 20260101;

  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw = engine_();
    while (draw >= limit) draw = engine_();
    return draw % bound;
  }

  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  /// Each point included independently with probability 1/2.
  PointSet subset(std::size_t n) {
    PointSet s(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (engine_() >> 63) s.set(i);
    }
    return s;
  }

 private:
  std::mt19937_64 engine_;
};

enum class SweepFallback {
  Throw,       ///< SizeCap when the subset count exceeds the cap
  Singletons,  ///< exact for union-preserving inclusions: test {} and singletons
  Sample,      ///< test `cap` seeded random subsets
};

struct SweepResult {
  std::optional<PointSet> failure;
  std::uint64_t checked = 0;
  bool exhaustive = true;
};

/// Looks for a subset of [0, n) on which `holds` is false. When 2^n fits in
/// `cap` every subset is visited in mask order, so the reported failure is
/// the first one in that order.
SweepResult sweep_subsets(std::size_t n, std::uint64_t cap, SweepFallback fallback,
                          const std::function<bool(const PointSet&)>& holds,
                          std::uint64_t seed = Rng::kDefaultSeed);

}  // namespace topocat
