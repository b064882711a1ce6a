#include "schubcell/linear.hpp"

#include <stdexcept>
#include <utility>

namespace schubcell {

std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = 1 / m[row][col];
    for (std::size_t c = col; c < columns; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational factor = m[r][col];
      for (std::size_t c = col; c < columns; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

std::size_t matrix_rank(RationalMatrix m, std::size_t columns) {
  return row_reduce(m, columns).size();
}

std::optional<RationalVector> solve_linear(const RationalMatrix& a, const RationalVector& b,
                                           std::size_t columns) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_linear: row count mismatch");
  RationalMatrix aug;
  aug.reserve(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != columns) throw std::invalid_argument("solve_linear: ragged matrix");
    RationalVector row = a[r];
    row.push_back(b[r]);
    aug.push_back(std::move(row));
  }
  auto pivots = row_reduce(aug, columns + 1);
  RationalVector x(columns, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == columns) return std::nullopt;
    x[pivots[r]] = aug[r][columns];
  }
  return x;
}

Subspace Subspace::span(std::size_t ground_size, RationalMatrix rows) {
  for (const auto& row : rows)
    if (row.size() != ground_size)
      throw std::invalid_argument("subspace: row of length " + std::to_string(row.size()) +
                                  ", expected " + std::to_string(ground_size));
  Subspace s;
  s.ground_size_ = ground_size;
  s.pivots_ = row_reduce(rows, ground_size);
  s.basis_ = std::move(rows);
  return s;
}

Subspace Subspace::zero(std::size_t ground_size) { return span(ground_size, {}); }

Subspace Subspace::full(std::size_t ground_size) {
  RationalMatrix id(ground_size, RationalVector(ground_size, 0));
  for (std::size_t i = 0; i < ground_size; ++i) id[i][i] = 1;
  return span(ground_size, std::move(id));
}

bool Subspace::contains(const RationalVector& v) const {
  if (v.size() != ground_size_) return false;
  // Reduce v against the echelon basis; V contains v iff the residue vanishes.
  RationalVector residue = v;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    Rational factor = residue[pivots_[r]];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < ground_size_; ++c) residue[c] -= factor * basis_[r][c];
  }
  for (const auto& x : residue)
    if (x != 0) return false;
  return true;
}

RationalVector Subspace::combine(const RationalVector& coefficients) const {
  if (coefficients.size() != basis_.size())
    throw std::invalid_argument("combine: expected " + std::to_string(basis_.size()) + " coefficients");
  RationalVector v(ground_size_, 0);
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    if (coefficients[r] == 0) continue;
    for (std::size_t c = 0; c < ground_size_; ++c) v[c] += coefficients[r] * basis_[r][c];
  }
  return v;
}

Subspace kernel_basis(const RationalMatrix& equations, std::size_t ground_size) {
  RationalMatrix m = equations;
  for (const auto& row : m)
    if (row.size() != ground_size)
      throw std::invalid_argument("kernel_basis: ragged equation matrix");
  auto pivots = row_reduce(m, ground_size);
  std::vector<bool> is_pivot(ground_size, false);
  for (auto p : pivots) is_pivot[p] = true;

  RationalMatrix basis;
  for (std::size_t free = 0; free < ground_size; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(ground_size, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return Subspace::span(ground_size, std::move(basis));
}

Subspace kernel_basis(const RationalMatrix& equations) {
  if (equations.empty()) throw std::invalid_argument("kernel_basis: empty matrix has no column count");
  return kernel_basis(equations, equations.front().size());
}

Subspace project_subspace(const Subspace& v, CoordSet g) {
  if (!is_subset(g, full_set(v.ground_size())))
    throw std::out_of_range("project_subspace: coordinate out of range");
  auto cols = elements(g);
  RationalMatrix rows;
  rows.reserve(v.dim());
  for (const auto& b : v.basis()) {
    RationalVector r;
    r.reserve(cols.size());
    for (auto c : cols) r.push_back(b[c]);
    rows.push_back(std::move(r));
  }
  return Subspace::span(cols.size(), std::move(rows));
}

Subspace vanish_solve(const Subspace& v, CoordSet s) {
  if (!is_subset(s, full_set(v.ground_size())))
    throw std::out_of_range("vanish_solve: coordinate out of range");
  // Coefficient vectors c with (c * B)_i = 0 for i in S, i.e. the kernel of B_S^T.
  auto cols = elements(s);
  RationalMatrix constraints;
  for (auto c : cols) {
    RationalVector row;
    row.reserve(v.dim());
    for (const auto& b : v.basis()) row.push_back(b[c]);
    constraints.push_back(std::move(row));
  }
  Subspace coeffs = kernel_basis(constraints, v.dim());
  RationalMatrix rows;
  for (const auto& c : coeffs.basis()) rows.push_back(v.combine(c));
  return Subspace::span(v.ground_size(), std::move(rows));
}

Subspace reorient(const Subspace& v, CoordSet a) {
  RationalMatrix rows = v.basis();
  for (auto& row : rows)
    for (auto i : elements(a))
      if (i < row.size()) row[i] = -row[i];
  return Subspace::span(v.ground_size(), std::move(rows));
}

Subspace orthogonal_complement(const Subspace& v) {
  return kernel_basis(v.basis(), v.ground_size());
}

}  // namespace schubcell
