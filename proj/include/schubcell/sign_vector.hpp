#pragma once

#include "schubcell/coord_set.hpp"
#include "schubcell/rational.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace schubcell {

/// An element of {-,0,+}^E, stored as the disjoint pair (X+, X-).
struct SignVector {
  CoordSet plus = 0;
  CoordSet minus = 0;

  CoordSet support() const { return plus | minus; }
  CoordSet zero_set(std::size_t n) const { return full_set(n) & ~support(); }
  int at(std::size_t i) const { return contains(plus, i) ? 1 : contains(minus, i) ? -1 : 0; }
  bool is_zero() const { return support() == 0; }

  SignVector operator-() const { return {minus, plus}; }

  /// Over the alphabet {+,-,0}, coordinate 1 first.
  static SignVector parse(std::string_view text);
  std::string str(std::size_t n) const;

  friend bool operator==(const SignVector&, const SignVector&) = default;
};

/// 0^F +^{rest} on the ground set of size n.
inline SignVector positive_off(CoordSet f, std::size_t n) { return {full_set(n) & ~f, 0}; }

SignVector sign_of(const RationalVector& v);

/// (X o Y)_i = X_i if X_i != 0 else Y_i.
inline SignVector compose(SignVector x, SignVector y) {
  const CoordSet free = ~x.support();
  return {x.plus | (y.plus & free), x.minus | (y.minus & free)};
}

/// Containment order: X <= Y iff X+ in Y+ and X- in Y-.
inline bool conforms(SignVector x, SignVector y) {
  return is_subset(x.plus, y.plus) && is_subset(x.minus, y.minus);
}

/// Coordinates where X and Y are nonzero with opposite signs.
inline CoordSet separation(SignVector x, SignVector y) {
  return (x.plus & y.minus) | (x.minus & y.plus);
}

/// Zeroes every coordinate outside `keep`, staying on the same ground set.
inline SignVector mask(SignVector x, CoordSet keep) { return {x.plus & keep, x.minus & keep}; }

/// pi_G(X): the coordinates in G, renumbered 0..|G|-1.
inline SignVector project(SignVector x, CoordSet g) { return {compress(x.plus, g), compress(x.minus, g)}; }

/// Inverse of project: places a sign vector on G back into E (zero outside G).
inline SignVector lift(SignVector x, CoordSet g) { return {expand(x.plus, g), expand(x.minus, g)}; }

/// Negates the coordinates in A.
inline SignVector reorient(SignVector x, CoordSet a) {
  return {(x.plus & ~a) | (x.minus & a), (x.minus & ~a) | (x.plus & a)};
}

/**
 * Lexicographic order on coordinates 1, 2, ... with 0 < + < -. It does not
 * depend on |E| because unused high coordinates are zero in both operands.
 */
bool lex_less(SignVector a, SignVector b);

struct SignVectorHash {
  std::size_t operator()(SignVector x) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{x.plus} << 32) | x.minus);
  }
};

}  // namespace schubcell
