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

#include "topocat/point_set.hpp"

#include <algorithm>
#include <sstream>

#include "topocat/error.hpp"

namespace topocat {

namespace {

std::size_t word_count(std::size_t universe) {
  return (universe + PointSet::kWordBits - 1) / PointSet::kWordBits;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotATopology: return "NotATopology";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::NotContinuous: return "NotContinuous";
    case ErrorKind::NotFunctional: return "NotFunctional";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::NotAPreorder: return "NotAPreorder";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::AnchorMismatch: return "AnchorMismatch";
    case ErrorKind::PartialMapPresent: return "PartialMapPresent";
    case ErrorKind::InvalidSequence: return "InvalidSequence";
    case ErrorKind::DepthMismatch: return "DepthMismatch";
    case ErrorKind::BadMetric: return "BadMetric";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::InvalidModel: return "InvalidModel";
    case ErrorKind::NotASubpredicate: return "NotASubpredicate";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SortError: return "SortError";
    case ErrorKind::SortMismatch: return "SortMismatch";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
  }
  return "Unknown";
}

PointSet::PointSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

PointSet PointSet::full(std::size_t universe) {
  PointSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  s.clear_tail();
  return s;
}

PointSet PointSet::singleton(std::size_t universe, std::size_t index) {
  PointSet s(universe);
  s.set(index);
  return s;
}

PointSet PointSet::from_mask(std::size_t universe, std::uint64_t mask) {
  PointSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  s.clear_tail();
  return s;
}

PointSet PointSet::of(std::size_t universe, std::initializer_list<std::size_t> indices) {
  return from_indices(universe, std::span<const std::size_t>(indices.begin(), indices.size()));
}

PointSet PointSet::from_indices(std::size_t universe, std::span<const std::size_t> indices) {
  PointSet s(universe);
  for (std::size_t i : indices) {
    if (i >= universe) {
      throw Error(ErrorKind::InvalidInput,
                  "index " + std::to_string(i) + " out of range for " + std::to_string(universe) +
                      " points");
    }
    s.set(i);
  }
  return s;
}

std::size_t PointSet::count() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool PointSet::none() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool PointSet::is_subset_of(const PointSet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool PointSet::intersects(const PointSet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

PointSet& PointSet::operator|=(const PointSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

PointSet& PointSet::operator&=(const PointSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

PointSet& PointSet::operator-=(const PointSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

PointSet PointSet::complement() const {
  PointSet s = *this;
  for (Word& w : s.words_) w = ~w;
  s.clear_tail();
  return s;
}

std::vector<std::size_t> PointSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::uint64_t PointSet::to_mask() const {
  if (universe_ > kWordBits) {
    throw Error(ErrorKind::SizeCap, "to_mask needs at most 64 points");
  }
  return words_.empty() ? 0 : words_[0];
}

std::size_t PointSet::hash() const {
  std::size_t h = std::hash<std::size_t>{}(universe_);
  for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string PointSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for_each([&](std::size_t i) {
    if (!first) out << ',';
    out << i;
    first = false;
  });
  out << '}';
  return out.str();
}

void PointSet::require_same_universe(const PointSet& other) const {
  if (universe_ != other.universe_) {
    throw Error(ErrorKind::SpaceMismatch, "subsets of universes of size " +
                                              std::to_string(universe_) + " and " +
                                              std::to_string(other.universe_));
  }
}

void PointSet::clear_tail() {
  const std::size_t rem = universe_ % kWordBits;
  if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
}

bool canonical_less(const PointSet& a, const PointSet& b) {
  const std::size_t ca = a.count();
  const std::size_t cb = b.count();
  if (ca != cb) return ca < cb;
  const auto ia = a.indices();
  const auto ib = b.indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

}  // namespace topocat
