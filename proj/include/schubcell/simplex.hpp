#pragma once

#include "schubcell/rational.hpp"

#include <optional>

namespace schubcell {

/**
 * Phase-one simplex over Q: finds x >= 0 with A x = b, or reports that none
 * exists. Pivoting follows Bland's lowest-index rule, so the returned vertex
 * is a deterministic function of (A, b) and the method cannot cycle.
 */
std::optional<RationalVector> find_nonnegative_solution(const RationalMatrix& a,
                                                        const RationalVector& b,
                                                        std::size_t columns);

}  // namespace schubcell
