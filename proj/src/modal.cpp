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


#include "topocat/modal.hpp"

#include "topocat/error.hpp"

namespace topocat {

namespace {

constexpr std::uint64_t kExactCap = std::uint64_t{1} << 20;

Json subset_pair(const char* ka, const PointSet& a, const char* kb, const PointSet& b) {
  Json w;
  w[ka] = subset_json(a);
  w[kb] = subset_json(b);
  return w;
}

LaxResult lax_check(std::size_t n, const std::function<PointSet(const PointSet&)>& lhs,
                    const std::function<PointSet(const PointSet&)>& rhs) {
  LaxResult out;
  auto lax = sweep_subsets(n, kExactCap, SweepFallback::Singletons,
                           [&](const PointSet& a) { return lhs(a).is_subset_of(rhs(a)); });
  auto eq = sweep_subsets(n, kExactCap, SweepFallback::Singletons,
                          [&](const PointSet& a) { return lhs(a) == rhs(a); });
  out.lax = !lax.failure.has_value();
  out.witness = lax.failure;
  out.equality = !eq.failure.has_value();
  out.equality_witness = eq.failure;
  return out;
}

}  // namespace

ModalAlgebraView ModalAlgebraView::of(const FiniteSpace& space) {
  ModalAlgebraView v;
  v.space = space;
  v.diamond = [space](const PointSet& a) { return space.closure(a); };
  v.box = [space](const PointSet& a) { return space.interior(a); };
  return v;
}

ModalAlgebraView ModalAlgebraView::with_diamond(const FiniteSpace& space,
                                                std::function<PointSet(const PointSet&)> diamond) {
  ModalAlgebraView v;
  v.space = space;
  v.diamond = diamond;
  v.box = [diamond](const PointSet& a) { return diamond(a.complement()).complement(); };
  return v;
}

Report check_modal_s4(const ModalAlgebraView& view, const CheckBudget& budget) {
  const std::size_t n = view.space.size();
  const auto& dia = view.diamond;
  Report report;

  {
    LawResult r{.law = "diamond_empty", .checked = 1};
    const PointSet d = dia(PointSet(n));
    if (d.any()) {
      r.pass = false;
      r.witness["diamond_of_empty"] = subset_json(d);
    }
    report.add(std::move(r));
  }

  {
    // Pairs are indexed by a 2n-bit mask: the low n bits give A, the rest B.
    LawResult r{.law = "join_preservation"};
    auto res = sweep_subsets(
        2 * n, budget.cap, SweepFallback::Sample,
        [&](const PointSet& ab) {
          PointSet a(n), b(n);
          ab.for_each([&](std::size_t i) { i < n ? a.set(i) : b.set(i - n); });
          return dia(a | b) == (dia(a) | dia(b));
        },
        budget.seed);
    r.checked = res.checked;
    r.exhaustive = res.exhaustive;
    if (res.failure) {
      PointSet a(n), b(n);
      res.failure->for_each([&](std::size_t i) { i < n ? a.set(i) : b.set(i - n); });
      r.pass = false;
      r.witness = subset_pair("A", a, "B", b);
    }
    report.add(std::move(r));
  }

  auto unary = [&](const char* law, const std::function<bool(const PointSet&)>& holds) {
    LawResult r{.law = law};
    auto res = sweep_subsets(n, budget.cap, SweepFallback::Sample, holds, budget.seed);
    r.checked = res.checked;
    r.exhaustive = res.exhaustive;
    if (res.failure) {
      r.pass = false;
      r.witness["S"] = subset_json(*res.failure);
      r.witness["diamond_S"] = subset_json(dia(*res.failure));
    }
    report.add(std::move(r));
  };
  unary("inflationary", [&](const PointSet& s) { return s.is_subset_of(dia(s)); });
  unary("idempotence", [&](const PointSet& s) {
    const PointSet d = dia(s);
    return dia(d) == d;
  });
  if (view.box) {
    unary("box_duality",
          [&](const PointSet& s) { return view.box(s) == dia(s.complement()).complement(); });
  }
  return report;
}

Report check_pi(const FiniteSpace& x, const FiniteSpace& y, const CheckBudget& budget) {
  const std::size_t nx = x.size();
  const std::size_t ny = y.size();
  if (nx + ny >= 63 || (std::uint64_t{1} << (nx + ny)) > budget.cap) {
    throw Error(ErrorKind::SizeCap, "2^" + std::to_string(nx + ny) +
                                        " subset pairs exceed the budget of " +
                                        std::to_string(budget.cap));
  }
  const ProductSpace xy = product(x, y);
  LawResult eq{.law = "pi_equality"};
  LawResult rev{.law = "pi_reverse"};
  for_each_subset(nx, [&](const PointSet& a) {
    const PointSet ca = x.closure(a);
    for_each_subset(ny, [&](const PointSet& b) {
      const PointSet lhs = xy.space.closure(rectangle(a, b));
      const PointSet rhs = rectangle(ca, y.closure(b));
      ++eq.checked;
      ++rev.checked;
      if (eq.pass && !(lhs == rhs)) {
        eq.pass = false;
        eq.witness = subset_pair("A", a, "B", b);
        eq.witness["closure_of_rectangle"] = subset_json(lhs);
        eq.witness["rectangle_of_closures"] = subset_json(rhs);
      }
      if (rev.pass && !lhs.is_subset_of(rhs)) {
        rev.pass = false;
        rev.witness = subset_pair("A", a, "B", b);
      }
    });
  });
  Report report;
  report.add(std::move(eq));
  report.add(std::move(rev));
  return report;
}

LaxResult is_lax_morphism(const TotalMap& f) {
  const FiniteSpace& src = f.source();
  const FiniteSpace& tgt = f.target();
  return lax_check(
      tgt.size(), [&](const PointSet& a) { return src.closure(f.preimage(a)); },
      [&](const PointSet& a) { return f.preimage(tgt.closure(a)); });
}

LaxResult is_lax_morphism(const PartialMap& f) {
  const FiniteSpace& src = f.source();
  const FiniteSpace& tgt = f.target();
  const PointSet dom = f.domain();
  return lax_check(
      tgt.size(), [&](const PointSet& a) { return src.closure(f.preimage(a)) & dom; },
      [&](const PointSet& a) { return f.preimage(tgt.closure(a)); });
}

}  // namespace topocat
