#pragma once

#include "schubcell/linear.hpp"
#include "schubcell/matrix_io.hpp"

#include <fstream>
#include <initializer_list>
#include <string>

namespace testing {

inline schubcell::RationalVector vec(std::initializer_list<int> xs) {
  schubcell::RationalVector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

inline schubcell::CoordSet set_of(std::initializer_list<int> one_based) {
  schubcell::CoordSet s = 0;
  for (int i : one_based) s |= schubcell::CoordSet{1} << (i - 1);
  return s;
}

/// Kernel of the given equations.
inline schubcell::Subspace ker(std::initializer_list<std::initializer_list<int>> rows, std::size_t n) {
  schubcell::RationalMatrix m;
  for (auto r : rows) m.push_back(vec(r));
  return schubcell::kernel_basis(m, n);
}

inline schubcell::Subspace data_file(const std::string& name) {
  std::ifstream in(std::string(SCHUBCELL_TEST_DATA_DIR) + "/" + name);
  const auto parsed = schubcell::parse_matrix(in);
  return schubcell::kernel_basis(parsed.rows, parsed.columns);
}

inline schubcell::Subspace r5_example() { return ker({{1, 1, -1, 0, 0}, {0, 0, 1, -1, -1}}, 5); }
inline schubcell::Subspace plane_three() { return ker({{1, 1, -1}}, 3); }
inline schubcell::Subspace four_plane() { return ker({{1, -1, -1, -1}}, 4); }

}  // namespace testing
