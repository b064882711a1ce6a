#pragma once

#include "schubcell/cell_complex.hpp"
#include "schubcell/oriented_matroid.hpp"
#include "schubcell/report.hpp"

#include <vector>

namespace schubcell {

/// Flats ordered by inclusion, labelled by set_label.
GradedPoset flat_lattice(const OrientedMatroid& m);

/// Acyclic flats ordered by inclusion.
GradedPoset las_vergnas_lattice(const OrientedMatroid& m);

/// Covectors ordered by conformal containment.
GradedPoset covector_poset(const OrientedMatroid& m);

/// Cells [F, G] for every pair F <= G of the given flats, closure by nesting of
/// intervals. With the acyclic flats this is the face poset of the totally
/// nonnegative part; other flat families serve as negative controls.
CellComplexPoset interval_cell_complex(const OrientedMatroid& m, const std::vector<Flat>& flats);

/// The cell poset of the totally nonnegative matroid Schubert variety:
/// intervals of the Las Vergnas lattice. Loops are stripped before the lattice
/// is built and re-attached to every flat afterwards.
CellComplexPoset tnn_cell_poset(const OrientedMatroid& m);

/**
 * Cross-checks the strata combinatorics against the geometry of V. For every
 * pair of flats F <= G it asks the feasibility oracle whether
 * pi_G(V) meets 0^F x R_{>0}^{G\F} and whether V meets 0^G x R_{>0}^{E\G};
 * the stratum is nonempty iff both hold, and that must coincide with
 * [F, G] being a cell.
 */
Report verify_strata_oracle(const Subspace& v, const BuildOptions& options = {});

/// Closure order equals interval nesting (computed independently), ranks equal
/// rk(G) - rk(F), covers drop dimension by one, the poset is thin.
Report closure_report(const OrientedMatroid& m, const CellComplexPoset& c);

/// For every cell of dimension k >= 1, the order complex of its proper faces has
/// the homology of S^{k-1}.
Report cell_regularity(const CellComplexPoset& c);

/// cell_regularity plus: the whole complex has point homology, the boundary of
/// the top cell has sphere homology, and the Euler characteristics match.
Report regularity_report(const CellComplexPoset& c);

/// Every (d-1)-cell of the boundary lies in exactly two d-cells, and some
/// (d-1)-cell of the zero locus lies in exactly one d-cell of the zero locus.
Report boundary_pairing_check(const CellComplexPoset& c);

/// Cells of the complexes of pi_G(V) and V cap ker(pi_F) match the cells of the
/// full complex below [min, G] and above [F, E] respectively.
Report minor_correspondence_check(const Subspace& v, const BuildOptions& options = {});

}  // namespace schubcell
