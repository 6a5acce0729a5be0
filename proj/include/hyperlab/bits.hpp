#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace hyperlab {

/// A subset of a finite carrier {0, ..., width-1}, stored as one machine word.
///
/// The tag keeps subsets of different carriers (points of X versus members of
/// a hyperspace) from being mixed up at compile time. The width is not stored;
/// it belongs to the owning model or topology, and no bit at or beyond it is
/// ever set by library code.
template <class Tag, unsigned MaxWidth>
class BitSubset {
  static_assert(MaxWidth >= 1 && MaxWidth <= 64);

 public:
  using word_type = std::uint64_t;
  static constexpr unsigned max_width = MaxWidth;

  constexpr BitSubset() = default;
  constexpr explicit BitSubset(word_type bits) : bits_(bits) {}
  constexpr BitSubset(std::initializer_list<unsigned> elements) {
    for (unsigned e : elements) bits_ |= word_type{1} << e;
  }

  static constexpr BitSubset full(unsigned width) {
    return BitSubset(width >= 64 ? ~word_type{0} : (word_type{1} << width) - 1);
  }
  static constexpr BitSubset singleton(unsigned element) {
    return BitSubset(word_type{1} << element);
  }

  constexpr word_type bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
  constexpr bool contains(unsigned element) const { return (bits_ >> element) & 1U; }
  constexpr bool meets(BitSubset other) const { return (bits_ & other.bits_) != 0; }
  constexpr bool subset_of(BitSubset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(BitSubset other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr BitSubset complement(unsigned width) const {
    return BitSubset(~bits_ & full(width).bits_);
  }
  /// Lowest element; undefined on the empty set.
  constexpr unsigned first() const { return static_cast<unsigned>(std::countr_zero(bits_)); }

  constexpr void insert(unsigned element) { bits_ |= word_type{1} << element; }
  constexpr void erase(unsigned element) { bits_ &= ~(word_type{1} << element); }

  constexpr BitSubset& operator|=(BitSubset o) { bits_ |= o.bits_; return *this; }
  constexpr BitSubset& operator&=(BitSubset o) { bits_ &= o.bits_; return *this; }
  constexpr BitSubset& operator-=(BitSubset o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr BitSubset operator|(BitSubset a, BitSubset b) { return a |= b; }
  friend constexpr BitSubset operator&(BitSubset a, BitSubset b) { return a &= b; }
  friend constexpr BitSubset operator-(BitSubset a, BitSubset b) { return a -= b; }

  friend constexpr bool operator==(BitSubset, BitSubset) = default;
  friend constexpr auto operator<=>(BitSubset a, BitSubset b) { return a.bits_ <=> b.bits_; }

  /// Elements in increasing order.
  std::vector<unsigned> elements() const {
    std::vector<unsigned> out;
    out.reserve(size());
    for (word_type w = bits_; w != 0; w &= w - 1) {
      out.push_back(static_cast<unsigned>(std::countr_zero(w)));
    }
    return out;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (word_type w = bits_; w != 0; w &= w - 1) {
      f(static_cast<unsigned>(std::countr_zero(w)));
    }
  }

 private:
  word_type bits_ = 0;
};

struct PointTag {};
struct MemberTag {};

/// A subset of the ground set X. |X| is capped at 16.
using PointSet = BitSubset<PointTag, 16>;
/// A subset of the hyperspace carrier M, indexed by canonical member position.
using HyperSet = BitSubset<MemberTag, 64>;

inline constexpr unsigned kMaxPoints = PointSet::max_width;
inline constexpr unsigned kMaxMembers = HyperSet::max_width;

/// Calls f on every subset of `universe`, including the empty set and
/// `universe` itself, in increasing numeric order of the bit pattern.
template <class Set, class F>
void for_each_subset(Set universe, F&& f) {
  using W = typename Set::word_type;
  const W u = universe.bits();
  W s = 0;
  while (true) {
    f(Set(s));
    if (s == u) break;
    s = (s - u) & u;
  }
}

}  // namespace hyperlab

template <class Tag, unsigned W>
struct std::hash<hyperlab::BitSubset<Tag, W>> {
  std::size_t operator()(hyperlab::BitSubset<Tag, W> s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
