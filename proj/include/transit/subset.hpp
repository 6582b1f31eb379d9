#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace transit {

/// Maximum number of elements in a ground set; a subset is one machine word.
inline constexpr std::size_t kMaxElements = 64;

/// A subset of the ground set {0, ..., n-1}, stored as a 64-bit membership mask.
///
/// Subset is a plain value; it may be empty. Nonemptiness of clusters is
/// enforced by the containers (SetSystem, TransitFunction), not here.
class Subset {
 public:
  using word_type = std::uint64_t;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::size_t;

    constexpr iterator() = default;
    constexpr explicit iterator(word_type rest) : rest_(rest) {}

    constexpr std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    word_type rest_ = 0;
  };

  constexpr Subset() = default;
  constexpr explicit Subset(word_type bits) : bits_(bits) {}

  static constexpr Subset singleton(std::size_t e) {
    assert(e < kMaxElements);
    return Subset(word_type{1} << e);
  }
  static constexpr Subset full(std::size_t n) {
    assert(n <= kMaxElements);
    return Subset(n == kMaxElements ? ~word_type{0} : (word_type{1} << n) - 1);
  }
  static constexpr Subset pair(std::size_t a, std::size_t b) { return singleton(a) | singleton(b); }

  constexpr word_type bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t e) const { return e < kMaxElements && ((bits_ >> e) & 1U) != 0; }
  constexpr bool contains_all(Subset other) const { return (other.bits_ & ~bits_) == 0; }
  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }
  /// Two sets overlap properly when they intersect and neither contains the other.
  constexpr bool overlaps_properly(Subset other) const {
    return intersects(other) && !subset_of(other) && !other.subset_of(*this);
  }

  /// Smallest element; undefined on the empty set.
  constexpr std::size_t front() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }
  /// Largest element; undefined on the empty set.
  constexpr std::size_t back() const { return 63U - static_cast<std::size_t>(std::countl_zero(bits_)); }

  constexpr Subset with(std::size_t e) const { return *this | singleton(e); }
  constexpr Subset without(std::size_t e) const { return *this - singleton(e); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<std::size_t> elements() const { return {begin(), end()}; }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr Subset operator^(Subset a, Subset b) { return Subset(a.bits_ ^ b.bits_); }
  constexpr Subset& operator|=(Subset o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr Subset& operator&=(Subset o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr Subset& operator-=(Subset o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr bool operator==(const Subset&) const = default;

 private:
  word_type bits_ = 0;
};

/// Canonical cluster order: by cardinality, then lexicographically by the
/// sorted element lists ({a,b} < {a,c} < {b,c}).
struct CanonicalLess {
  constexpr bool operator()(Subset a, Subset b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    const Subset::word_type diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    const Subset::word_type lowest = diff & (~diff + 1);
    return (a.bits() & lowest) != 0;
  }
};

struct SubsetHash {
  std::size_t operator()(Subset s) const noexcept {
    // splitmix64 finalizer
    std::uint64_t z = s.bits() + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(z ^ (z >> 31));
  }
};

}  // namespace transit
