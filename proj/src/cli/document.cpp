#include "document.hpp"

#include "schubcell/tnn.hpp"

namespace schubcell::cli {

using nlohmann::json;

json set_json(CoordSet s) {
  json a = json::array();
  for (auto i : elements(s)) a.push_back(i + 1);
  return a;
}

json flats_json(const std::vector<Flat>& flats) {
  json a = json::array();
  for (const auto& f : flats) a.push_back({{"members", set_json(f.members)}, {"rank", f.rank}});
  return a;
}

json covectors_json(const OrientedMatroid& m) {
  json a = json::array();
  for (auto x : m.covectors()) a.push_back(x.str(m.ground_size()));
  return a;
}

json cells_json(const CellComplexPoset& c) {
  json a = json::array();
  for (const auto& cell : c.cells) {
    json e = {{"F", set_json(cell.lower)}, {"G", set_json(cell.upper)}, {"dim", cell.dim}};
    if (cell.tope) e["T"] = cell.tope->str(c.ground_size);
    a.push_back(std::move(e));
  }
  return a;
}

json covers_json(const GradedPoset& p) {
  json a = json::array();
  for (auto [x, y] : p.covers()) a.push_back({x, y});
  return a;
}

json betti_json(const BettiVector& b) { return json(trimmed(b)); }

json report_json(const Report& r) {
  json a = json::array();
  for (const auto& rec : r.records) {
    json e = {{"subject", rec.subject}, {"check", rec.check}, {"pass", rec.pass}};
    if (!rec.witness.empty()) e["witness"] = rec.witness;
    a.push_back(std::move(e));
  }
  return a;
}

json matroid_document(const OrientedMatroid& m) {
  json d;
  d["schema_version"] = kSchemaVersion;
  d["ground_set"] = set_json(full_set(m.ground_size()));
  d["rank"] = m.rank();
  d["loops"] = set_json(m.loops());
  d["covector_count"] = m.covectors().size();
  d["tope_count"] = m.topes().size();
  d["flats"] = flats_json(m.flats());
  d["acyclic_flats"] = flats_json(acyclic_flats(m));
  return d;
}

}  // namespace schubcell::cli
