// Copyright 2026 The Authors.
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

#ifndef COMBCONTRACT_ID_SET_HPP_
#define COMBCONTRACT_ID_SET_HPP_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace combcontract {

using ActionId = int;
using AgentId = int;

// Hard ceiling on the number of actions (and agents) an instance may have.
// Everything the library does is exact and mostly exhaustive, so instances
// live far below this.
inline constexpr int kMaxIds = 64;

// A set of small non-negative ids stored as a 64-bit mask. The tag keeps
// action sets and agent sets from being mixed up.
template <class Tag>
class IdSet {
 public:
  constexpr IdSet() = default;
  IdSet(std::initializer_list<int> ids) {
    for (int id : ids) insert(id);
  }
  static constexpr IdSet fromMask(std::uint64_t mask) {
    IdSet s;
    s.bits_ = mask;
    return s;
  }
  // {0, ..., count - 1}.
  static constexpr IdSet range(int count) {
    return fromMask(count >= 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << count) - 1);
  }

  constexpr std::uint64_t mask() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int id) const {
    return id >= 0 && id < kMaxIds && ((bits_ >> id) & 1U) != 0;
  }
  constexpr void insert(int id) { bits_ |= std::uint64_t{1} << id; }
  constexpr void erase(int id) { bits_ &= ~(std::uint64_t{1} << id); }
  constexpr IdSet with(int id) const { return fromMask(bits_ | (std::uint64_t{1} << id)); }
  constexpr IdSet without(int id) const { return fromMask(bits_ & ~(std::uint64_t{1} << id)); }
  constexpr bool subsetOf(IdSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(IdSet other) const { return (bits_ & other.bits_) != 0; }

  friend constexpr IdSet operator|(IdSet a, IdSet b) { return fromMask(a.bits_ | b.bits_); }
  friend constexpr IdSet operator&(IdSet a, IdSet b) { return fromMask(a.bits_ & b.bits_); }
  friend constexpr IdSet operator-(IdSet a, IdSet b) { return fromMask(a.bits_ & ~b.bits_); }
  IdSet& operator|=(IdSet o) { bits_ |= o.bits_; return *this; }
  IdSet& operator&=(IdSet o) { bits_ &= o.bits_; return *this; }
  IdSet& operator-=(IdSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(IdSet a, IdSet b) = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator a, iterator b) = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> toVector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

struct ActionTag {};
struct AgentTag {};
using ActionSet = IdSet<ActionTag>;
using AgentSet = IdSet<AgentTag>;

// An action profile S is just the set of chosen actions; S_i = S & T_i.
using ActionProfile = ActionSet;

// True iff the sorted id sequence of `a` is lexicographically smaller than
// that of `b` (so the empty set precedes everything).
template <class Tag>
constexpr bool lexLess(IdSet<Tag> a, IdSet<Tag> b) {
  const std::uint64_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  const int first = std::countr_zero(diff);
  const std::uint64_t above =
      first >= 63 ? 0 : ~((std::uint64_t{1} << (first + 1)) - 1);
  if (a.contains(first)) {
    // b continues past the common prefix with a larger id, or ends there.
    return (b.mask() & above) != 0;
  }
  return (a.mask() & above) == 0;
}

// Calls fn(subset) for every subset of `base`, starting with the empty set.
template <class Tag, class Fn>
void forEachSubset(IdSet<Tag> base, Fn&& fn) {
  const std::uint64_t full = base.mask();
  std::uint64_t sub = 0;
  while (true) {
    fn(IdSet<Tag>::fromMask(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

}  // namespace combcontract

#endif  // COMBCONTRACT_ID_SET_HPP_
