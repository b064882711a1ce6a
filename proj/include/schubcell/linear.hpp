#pragma once

#include "schubcell/coord_set.hpp"
#include "schubcell/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace schubcell {

/// Reduced row echelon form in place; returns pivot columns. Zero rows are dropped.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t columns);

std::size_t matrix_rank(RationalMatrix m, std::size_t columns);

/// Some x with A x = b, or nullopt if the system is inconsistent.
std::optional<RationalVector> solve_linear(const RationalMatrix& a, const RationalVector& b,
                                           std::size_t columns);

/**
 * A linear subspace V of Q^E, identified by the reduced row echelon form of
 * any spanning set. Two Subspace values compare equal exactly when they are
 * the same subspace.
 */
class Subspace {
 public:
  Subspace() = default;

  /// The span of `rows`, each of length `ground_size`. Throws on ragged rows.
  static Subspace span(std::size_t ground_size, RationalMatrix rows);
  static Subspace zero(std::size_t ground_size);
  static Subspace full(std::size_t ground_size);

  std::size_t ground_size() const { return ground_size_; }
  std::size_t dim() const { return basis_.size(); }
  const RationalMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const RationalVector& v) const;

  /// Linear combination sum_i c_i * basis_i.
  RationalVector combine(const RationalVector& coefficients) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ground_size_ = 0;
  RationalMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space of the equations; `ground_size` is required so that an empty
/// equation list still determines |E|.
Subspace kernel_basis(const RationalMatrix& equations, std::size_t ground_size);
Subspace kernel_basis(const RationalMatrix& equations);

/// pi_G(V), re-indexed to Q^G with the members of G in increasing order.
Subspace project_subspace(const Subspace& v, CoordSet g);

/// { v in V : v_i = 0 for all i in S }, still inside Q^E.
Subspace vanish_solve(const Subspace& v, CoordSet s);

/// Negates the coordinates in A.
Subspace reorient(const Subspace& v, CoordSet a);

/// The annihilator of V: all functionals alpha with sum alpha_i v_i = 0 on V.
Subspace orthogonal_complement(const Subspace& v);

}  // namespace schubcell
