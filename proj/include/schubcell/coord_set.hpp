#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace schubcell {

/// A subset of the ground set E = {0, ..., n-1}, bit i for element i.
using CoordSet = std::uint32_t;

/// Hard ceiling imposed by the CoordSet encoding.
inline constexpr std::size_t kMaxGroundSize = 32;

/// Default size guardrail; larger inputs need an explicit override.
inline constexpr std::size_t kDefaultGroundLimit = 14;

constexpr CoordSet full_set(std::size_t n) {
  return n >= 32 ? ~CoordSet{0} : ((CoordSet{1} << n) - 1);
}

constexpr bool contains(CoordSet set, std::size_t i) { return (set >> i) & 1u; }

constexpr bool is_subset(CoordSet a, CoordSet b) { return (a & ~b) == 0; }

inline std::size_t cardinality(CoordSet s) { return static_cast<std::size_t>(std::popcount(s)); }

/// Elements in increasing order.
std::vector<std::size_t> elements(CoordSet s);

/// Renumbers the bits of `s` that lie in `within` to 0..|within|-1, preserving order.
CoordSet compress(CoordSet s, CoordSet within);

/// Inverse of compress: spreads the low |within| bits of `s` onto the members of `within`.
CoordSet expand(CoordSet s, CoordSet within);

/// Human-facing label with 1-based element names, e.g. "{1,4}" or "{}".
std::string set_label(CoordSet s);

/// Compact label in the style "14", "E" is not substituted; empty set is "0".
std::string short_label(CoordSet s);

}  // namespace schubcell
