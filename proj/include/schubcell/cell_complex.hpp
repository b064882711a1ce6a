#pragma once

#include "schubcell/coord_set.hpp"
#include "schubcell/poset.hpp"
#include "schubcell/sign_vector.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schubcell {

/**
 * A cell indexed by flats F <= G and, for cells of the full real variety, a
 * tope T of (M/F)|_G stored as a sign vector on E supported on G \ F.
 */
struct Cell {
  CoordSet lower = 0;
  CoordSet upper = 0;
  std::optional<SignVector> tope;
  std::size_t dim = 0;

  std::string label(std::size_t n) const;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Deterministic listing order: dimension, then F, G and the tope.
bool cell_order(const Cell& a, const Cell& b);

/// Cells plus their closure order. closure.label(i) == cells[i].label(n).
struct CellComplexPoset {
  std::size_t ground_size = 0;
  CoordSet loops = 0;
  std::vector<Cell> cells;
  GradedPoset closure;

  std::size_t dimension() const;
  /// The unique maximal cell, if there is one.
  std::optional<std::size_t> top_cell() const;
  /// Every cell except the top cell (empty if there is no unique top).
  std::vector<std::size_t> boundary() const;
  /// Cells whose lower flat is not the minimum lower flat, i.e. points with an
  /// extra vanishing coordinate.
  std::vector<std::size_t> zero_locus() const;
  std::vector<std::size_t> cells_of_dim(std::size_t d) const;
  std::optional<std::size_t> find(const Cell& c) const;
  /// Number of cells of each dimension.
  std::vector<std::size_t> f_vector() const;
};

/// Sorts the cells canonically and builds the closure order from `leq`, which is
/// evaluated on the sorted cells.
CellComplexPoset make_cell_complex(std::size_t ground_size, CoordSet loops, std::vector<Cell> cells,
                                   const std::function<bool(const Cell&, const Cell&)>& leq);

/// Maximal elements of a subset of cells.
std::vector<std::size_t> maximal_cells(const CellComplexPoset& c, const std::vector<std::size_t>& subset);

/// The subposet on `subset` (typically a subcomplex).
GradedPoset induced_order(const CellComplexPoset& c, const std::vector<std::size_t>& subset);

}  // namespace schubcell
