#include "schubcell/simplex.hpp"

#include <stdexcept>

namespace schubcell {

std::optional<RationalVector> find_nonnegative_solution(const RationalMatrix& a,
                                                        const RationalVector& b,
                                                        std::size_t columns) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("simplex: row count mismatch");
  const std::size_t width = columns + rows;  // originals, then one artificial per row

  // Tableau rows: [A | I | b] with b made non-negative.
  RationalMatrix t(rows, RationalVector(width + 1, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    if (a[r].size() != columns) throw std::invalid_argument("simplex: ragged matrix");
    const bool flip = b[r] < 0;
    for (std::size_t c = 0; c < columns; ++c) t[r][c] = flip ? Rational(-a[r][c]) : a[r][c];
    t[r][columns + r] = 1;
    t[r][width] = flip ? Rational(-b[r]) : b[r];
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = columns + r;

  // Reduced costs of the auxiliary objective sum(artificials); last entry is -objective.
  RationalVector cost(width + 1, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns; ++c) cost[c] -= t[r][c];
    cost[width] -= t[r][width];
  }

  for (;;) {
    std::size_t enter = width;
    for (std::size_t c = 0; c < width; ++c)
      if (cost[c] < 0) {
        enter = c;
        break;
      }
    if (enter == width) break;

    std::size_t leave = rows;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][width] / t[r][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    // The auxiliary objective is bounded below by zero, so a leaving row exists.
    if (leave == rows) throw std::logic_error("simplex: unbounded auxiliary problem");

    Rational inv = 1 / t[leave][enter];
    for (auto& x : t[leave]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      Rational f = t[r][enter];
      for (std::size_t c = 0; c <= width; ++c) t[r][c] -= f * t[leave][c];
    }
    Rational f = cost[enter];
    for (std::size_t c = 0; c <= width; ++c) cost[c] -= f * t[leave][c];
    basis[leave] = enter;
  }

  if (cost[width] != 0) return std::nullopt;
  RationalVector x(columns, 0);
  for (std::size_t r = 0; r < rows; ++r)
    if (basis[r] < columns) x[basis[r]] = t[r][width];
  return x;
}

}  // namespace schubcell
