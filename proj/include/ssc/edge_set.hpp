#pragma once

#include <bit>
#include <cstdint>
#include <compare>
#include <initializer_list>
#include <vector>

namespace ssc {

// Subset of the edge indices 0..63 of a graph, stored as a bit mask.
class EdgeSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr EdgeSet() = default;
  constexpr explicit EdgeSet(std::uint64_t bits) : bits_(bits) {}
  EdgeSet(std::initializer_list<int> members) {
    for (int e : members) insert(e);
  }

  static constexpr EdgeSet full(int n) {
    return EdgeSet(n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr void insert(int e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(int e) { bits_ &= ~(std::uint64_t{1} << e); }

  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool is_subset_of(EdgeSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr EdgeSet operator|(EdgeSet o) const { return EdgeSet(bits_ | o.bits_); }
  constexpr EdgeSet operator&(EdgeSet o) const { return EdgeSet(bits_ & o.bits_); }
  constexpr EdgeSet operator-(EdgeSet o) const { return EdgeSet(bits_ & ~o.bits_); }
  constexpr EdgeSet& operator|=(EdgeSet o) { bits_ |= o.bits_; return *this; }
  constexpr EdgeSet& operator&=(EdgeSet o) { bits_ &= o.bits_; return *this; }
  constexpr EdgeSet& operator-=(EdgeSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const EdgeSet&) const = default;

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  // Lowest member, or -1 when empty.
  constexpr int first() const { return bits_ ? std::countr_zero(bits_) : -1; }

 private:
  std::uint64_t bits_ = 0;
};

// Canonical order: by cardinality, then lexicographically on the ascending
// member list.
inline bool canonical_less(EdgeSet a, EdgeSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  std::uint64_t x = a.bits(), y = b.bits();
  while (x && y) {
    int ax = std::countr_zero(x), by = std::countr_zero(y);
    if (ax != by) return ax < by;
    x &= x - 1;
    y &= y - 1;
  }
  return false;
}

struct CanonicalLess {
  bool operator()(EdgeSet a, EdgeSet b) const { return canonical_less(a, b); }
};

}  // namespace ssc

template <>
struct std::hash<ssc::EdgeSet> {
  std::size_t operator()(ssc::EdgeSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
