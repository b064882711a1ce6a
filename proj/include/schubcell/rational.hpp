#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace schubcell {

/// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const RationalVector& v);

/// Sign of q as -1, 0 or +1.
inline int sign(const Rational& q) { return sgn(q); }

/// Dot product of two equally sized vectors.
Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace schubcell
