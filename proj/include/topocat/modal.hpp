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

#include "topocat/point_set.hpp"
#include "topocat/rel.hpp"
#include "topocat/report.hpp"
#include "topocat/rng.hpp"
#include "topocat/space.hpp"

namespace topocat {

/// The powerset of a space seen as a modal algebra.
struct ModalAlgebraView {
  FiniteSpace space;
  std::function<PointSet(const PointSet&)> diamond;
  std::function<PointSet(const PointSet&)> box;

  /// Closure and interior of the space.
  static ModalAlgebraView of(const FiniteSpace& space);
  /// Arbitrary operator; box is derived as not-diamond-not.
  static ModalAlgebraView with_diamond(const FiniteSpace& space,
                                       std::function<PointSet(const PointSet&)> diamond);
};

/// Bound on the number of subsets (or subset pairs) visited by one check.
struct CheckBudget {
  std::uint64_t cap = std::uint64_t{1} << 20;
  std::uint64_t seed = Rng::kDefaultSeed;
};

/// Laws: diamond_empty, join_preservation, inflationary, idempotence,
/// box_duality. Beyond the budget, subsets are sampled with the seed.
Report check_modal_s4(const ModalAlgebraView& view, const CheckBudget& budget = {});

/// Laws: pi_equality (cl(A x B) = cl A x cl B) and pi_reverse
/// (cl(A x B) inside cl A x cl B). Throws SizeCap when 2^(|X|+|Y|)
/// exceeds the budget.
Report check_pi(const FiniteSpace& x, const FiniteSpace& y, const CheckBudget& budget = {});

struct LaxResult {
  bool lax = true;       ///< cl(h A) inside h(cl A) for every A
  bool equality = true;  ///< cl(h A) = h(cl A) for every A
  std::optional<PointSet> witness;           ///< first A breaking laxness
  std::optional<PointSet> equality_witness;  ///< first A breaking equality
};

/// h = preimage along f. Exact for every space size: both sides preserve
/// unions, so beyond 2^20 subsets only the empty set and singletons are
/// compared.
LaxResult is_lax_morphism(const TotalMap& f);

/// For a partial map the preimage lands in the Boolean algebra of dom f, so
/// the closure on the left is taken in the subspace dom f.
LaxResult is_lax_morphism(const PartialMap& f);

}  // namespace topocat
