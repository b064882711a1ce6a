#pragma once

#include "schubcell/cell_complex.hpp"
#include "schubcell/homology.hpp"
#include "schubcell/oriented_matroid.hpp"
#include "schubcell/report.hpp"

#include <json.hpp>

namespace schubcell::cli {

inline constexpr int kSchemaVersion = 1;

nlohmann::json set_json(CoordSet s);
nlohmann::json flats_json(const std::vector<Flat>& flats);
nlohmann::json covectors_json(const OrientedMatroid& m);
nlohmann::json cells_json(const CellComplexPoset& c);
nlohmann::json covers_json(const GradedPoset& p);
nlohmann::json betti_json(const BettiVector& b);
nlohmann::json report_json(const Report& r);

/// Ground set, covector count, flats, acyclic flats.
nlohmann::json matroid_document(const OrientedMatroid& m);

}  // namespace schubcell::cli
