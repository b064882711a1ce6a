#pragma once

#include "schubcell/cell_complex.hpp"

#include <optional>
#include <vector>

namespace schubcell {

/**
 * Shellings of regular CW complexes given by a face poset. A complex is the
 * union of the closed cells (lower sets) of its facets; the rank of an element
 * is its dimension, and the facets of the boundary of a cell are its lower
 * covers.
 *
 * An order (F_1, ..., F_m) of the facets of a pure d-complex is a shelling if
 * the boundary of F_1 is shellable and, for j > 1, C_j = F_j cap (F_1 u ... u
 * F_{j-1}) is a nonempty pure (d-1)-complex and the boundary of F_j has a
 * shelling in which the facets of C_j come first. For d = 0 every order is a
 * shelling.
 */

struct ShellingOptions {
  /// Facets that must occupy the first positions, in some order.
  std::vector<std::size_t> first;
};

/// Throws std::invalid_argument if the facets do not all have the same rank or
/// some facet lies below another.
bool verify_shelling(const GradedPoset& faces, const std::vector<std::size_t>& order);

/// Depth-first search over facet orders, trying facets in index order; returns
/// the first shelling found.
std::optional<std::vector<std::size_t>> find_shelling(const GradedPoset& faces, std::vector<std::size_t> facets,
                                                      const ShellingOptions& options = {});

/// For all i > j some k < i has F_i cap F_j inside F_k and dim(F_k cap F_i) = d - 1.
bool has_property_s(const GradedPoset& faces, const std::vector<std::size_t>& order);

/// Maximal cells of the boundary (everything but the top cell).
std::vector<std::size_t> boundary_facets(const CellComplexPoset& c);

/// A shelling of the boundary; with zero_locus_first the facets lying in the
/// zero locus come first.
std::optional<std::vector<std::size_t>> find_boundary_shelling(const CellComplexPoset& c, bool zero_locus_first);

}  // namespace schubcell
