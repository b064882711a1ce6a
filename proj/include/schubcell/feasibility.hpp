#pragma once

#include "schubcell/linear.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace schubcell {

/// Per-coordinate demand: -1 (must be negative), 0 (must vanish), +1 (must be positive).
struct SignPattern {
  std::vector<std::int8_t> entries;

  std::size_t size() const { return entries.size(); }
  CoordSet positive() const;
  CoordSet negative() const;
  CoordSet zero() const;

  /// From a string over {+,-,0}, e.g. "++-".
  static SignPattern parse(std::string_view text);
  static SignPattern from_sets(std::size_t n, CoordSet plus, CoordSet minus);
  std::string str() const;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;
};

/// A point of V whose sign vector is exactly the requested pattern.
struct FeasibilityWitness {
  RationalVector point;
};

/// A functional sum_i alpha_i x_i vanishing on V with p_i * alpha_i >= 0 on the
/// support of p and strictly positive somewhere there; it rules the pattern out.
struct FeasibilityCertificate {
  RationalVector functional;
};

struct FeasibilityResult {
  std::variant<FeasibilityWitness, FeasibilityCertificate> outcome;

  bool feasible() const { return std::holds_alternative<FeasibilityWitness>(outcome); }
  const RationalVector& witness() const { return std::get<FeasibilityWitness>(outcome).point; }
  const RationalVector& certificate() const {
    return std::get<FeasibilityCertificate>(outcome).functional;
  }
};

/**
 * Decides whether some v in V has sign vector exactly `p`.
 *
 * Zero demands are imposed by restricting to V cap ker(pi_Z); the strict
 * demands become p_i v_i >= 1, which is equivalent because V is a cone. The
 * primal system and its Farkas alternative are both solved with the exact
 * simplex; exactly one of them must succeed.
 */
FeasibilityResult sign_feasible(const Subspace& v, const SignPattern& p);

bool check_witness(const Subspace& v, const SignPattern& p, const RationalVector& point);
bool check_certificate(const Subspace& v, const SignPattern& p, const RationalVector& functional);

/// Scales a nonzero vector to the primitive integer vector on the same ray.
RationalVector primitive(RationalVector v);

}  // namespace schubcell
