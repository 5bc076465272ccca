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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <type_traits>
#include <string>
#include <vector>

namespace topocat {

/// A subset of the index range [0, universe), stored as a dense bit vector.
///
/// Every subset in the library (open sets, predicates, relation rows) is a
/// PointSet whose universe is the number of points of the ambient space.
/// Binary operations require equal universes and throw SpaceMismatch
/// otherwise.
class PointSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  PointSet() = default;
  explicit PointSet(std::size_t universe);

  static PointSet full(std::size_t universe);
  static PointSet singleton(std::size_t universe, std::size_t index);
  /// Bit i of `mask` selects point i; requires universe <= 64.
  static PointSet from_mask(std::size_t universe, std::uint64_t mask);
  static PointSet of(std::size_t universe, std::initializer_list<std::size_t> indices);
  static PointSet from_indices(std::size_t universe, std::span<const std::size_t> indices);

  std::size_t universe() const { return universe_; }
  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  std::size_t count() const;
  bool none() const;
  bool any() const { return !none(); }
  bool is_full() const { return count() == universe_; }

  bool is_subset_of(const PointSet& other) const;
  bool intersects(const PointSet& other) const;

  PointSet& operator|=(const PointSet& other);
  PointSet& operator&=(const PointSet& other);
  /// Set difference.
  PointSet& operator-=(const PointSet& other);
  PointSet complement() const;

  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  bool operator==(const PointSet& other) const = default;

  /// Indices in increasing order.
  std::vector<std::size_t> indices() const;
  std::uint64_t to_mask() const;

  template <typename F>
  void for_each(F&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        fn(w * kWordBits + bit);
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const;
  std::string to_string() const;

 private:
  void require_same_universe(const PointSet& other) const;
  void clear_tail();

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

/// Canonical order on subsets of a common universe: by cardinality, then
/// lexicographically on the sorted index lists.
bool canonical_less(const PointSet& a, const PointSet& b);

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const { return s.hash(); }
};

/// Calls `fn` on every subset of [0, n) in mask order (bit i = point i).
/// Requires n < 64. If `fn` returns bool, returning false stops the sweep.
template <typename F>
void for_each_subset(std::size_t n, F&& fn) {
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if constexpr (std::is_same_v<std::invoke_result_t<F&, PointSet>, bool>) {
      if (!fn(PointSet::from_mask(n, mask))) return;
    } else {
      fn(PointSet::from_mask(n, mask));
    }
  }
}

}  // namespace topocat
