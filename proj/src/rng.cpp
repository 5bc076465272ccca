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


#include "topocat/rng.hpp"

#include "topocat/error.hpp"

namespace topocat {

SweepResult sweep_subsets(std::size_t n, std::uint64_t cap, SweepFallback fallback,
                          const std::function<bool(const PointSet&)>& holds, std::uint64_t seed) {
  SweepResult result;
  const bool fits = n < 63 && (std::uint64_t{1} << n) <= cap;
  if (fits) {
    for_each_subset(n, [&](const PointSet& a) {
      ++result.checked;
      if (!holds(a)) {
        result.failure = a;
        return false;
      }
      return true;
    });
    return result;
  }
  switch (fallback) {
    case SweepFallback::Throw:
      throw Error(ErrorKind::SizeCap, "2^" + std::to_string(n) + " subsets exceed the cap of " +
                                          std::to_string(cap));
    case SweepFallback::Singletons: {
      // The union of the tested sets covers every subset, so an inclusion
      // between union-preserving operators holds everywhere iff it holds here.
      ++result.checked;
      if (!holds(PointSet(n))) {
        result.failure = PointSet(n);
        return result;
      }
      for (std::size_t i = 0; i < n; ++i) {
        ++result.checked;
        PointSet s = PointSet::singleton(n, i);
        if (!holds(s)) {
          result.failure = s;
          return result;
        }
      }
      return result;
    }
    case SweepFallback::Sample: {
      result.exhaustive = false;
      Rng rng(seed);
      for (std::uint64_t k = 0; k < cap; ++k) {
        ++result.checked;
        PointSet s = rng.subset(n);
        if (!holds(s)) {
          result.failure = s;
          return result;
        }
      }
      return result;
    }
  }
  return result;
}

}  // namespace topocat
