#pragma once

#include "schubcell/cell_complex.hpp"
#include "schubcell/homology.hpp"
#include "schubcell/oriented_matroid.hpp"
#include "schubcell/report.hpp"

#include <optional>
#include <vector>

namespace schubcell {

/// Zero sets of the covectors conformal to T. Throws std::domain_error if T is
/// not a tope of M.
std::vector<Flat> relatively_acyclic_flats(const OrientedMatroid& m, SignVector tope);

/**
 * The chart of the real variety at tope T: reorient by T^-, take the totally
 * nonnegative cell poset, and label each cell [F, G] by the tope T restricted
 * to G \ F. Throws std::domain_error if T is not a tope.
 */
CellComplexPoset tope_chart(const OrientedMatroid& m, SignVector tope);
CellComplexPoset tope_chart(const Subspace& v, SignVector tope, const BuildOptions& options = {});

/// One cell per flats F <= G and tope of (M/F)|_G, stored on E with support G \ F.
std::vector<Cell> triple_cells(const OrientedMatroid& m);

/// Cell data as seen from a chart: two flats relatively acyclic in `tope`.
struct ChartTriple {
  CoordSet lower = 0;
  CoordSet upper = 0;
  SignVector tope;

  friend bool operator==(const ChartTriple&, const ChartTriple&) = default;
};

/// Two chart triples name the same cell iff the flats agree and the topes
/// agree on G \ F.
bool same_cell(const ChartTriple& a, const ChartTriple& b);

/// The cell of a chart triple. Throws std::domain_error unless both flats are
/// relatively acyclic in the tope.
Cell cell_of_chart_triple(const OrientedMatroid& m, const ChartTriple& t);

/// The chart triple with lexicographically least tope naming this cell, if any.
std::optional<ChartTriple> chart_triple_of_cell(const OrientedMatroid& m, const Cell& c);

/**
 * The cell poset of the real matroid Schubert variety: triple cells, where
 * [F', G'; T'] lies in the closure of [F, G; T] iff F <= F' <= G' <= G and some
 * tope S has all four flats relatively acyclic and restricts to T on G \ F
 * and to T' on G' \ F'.
 */
CellComplexPoset yv_complex(const OrientedMatroid& m);
CellComplexPoset yv_complex(const Subspace& v, const BuildOptions& options = {});

BettiVector yv_betti(const Subspace& v, const BuildOptions& options = {});

/// Covering by charts, overlap agreement, per-chart ball certification,
/// chart orders induced by the global order, triple round trips and the
/// per-cell regularity of the full complex.
Report chart_consistency_check(const Subspace& v, const BuildOptions& options = {});

}  // namespace schubcell
