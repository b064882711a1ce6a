#include "schubcell/tnn.hpp"

#include "schubcell/feasibility.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace schubcell {

namespace {

GradedPoset flats_by_inclusion(const std::vector<Flat>& flats) {
  std::vector<std::string> labels;
  for (const auto& f : flats) labels.push_back(set_label(f.members));
  return GradedPoset::from_order(std::move(labels), [&](std::size_t a, std::size_t b) {
    return is_subset(flats[a].members, flats[b].members);
  });
}

std::string pair_label(CoordSet f, CoordSet g) { return "[" + set_label(f) + "," + set_label(g) + "]"; }

std::string betti_string(const BettiVector& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + ")";
}

}  // namespace

GradedPoset flat_lattice(const OrientedMatroid& m) { return flats_by_inclusion(m.flats()); }

GradedPoset las_vergnas_lattice(const OrientedMatroid& m) { return flats_by_inclusion(acyclic_flats(m)); }

GradedPoset covector_poset(const OrientedMatroid& m) {
  const auto& cov = m.covectors();
  std::vector<std::string> labels;
  for (auto x : cov) labels.push_back(x.str(m.ground_size()));
  return GradedPoset::from_order(std::move(labels),
                                 [&](std::size_t a, std::size_t b) { return conforms(cov[a], cov[b]); });
}

CellComplexPoset interval_cell_complex(const OrientedMatroid& m, const std::vector<Flat>& flats) {
  const GradedPoset lattice = flats_by_inclusion(flats);
  const IntervalPoset ivs = interval_poset(lattice);
  std::map<std::pair<CoordSet, CoordSet>, std::size_t> index;
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < ivs.intervals.size(); ++i) {
    const Flat& f = flats[ivs.intervals[i].lower];
    const Flat& g = flats[ivs.intervals[i].upper];
    index[{f.members, g.members}] = i;
    cells.push_back({f.members, g.members, std::nullopt, g.rank - f.rank});
  }
  return make_cell_complex(m.ground_size(), m.loops(), std::move(cells), [&](const Cell& a, const Cell& b) {
    return ivs.poset.leq(index.at({a.lower, a.upper}), index.at({b.lower, b.upper}));
  });
}

CellComplexPoset tnn_cell_poset(const OrientedMatroid& m) {
  const CoordSet loops = m.loops();
  const CoordSet rest = full_set(m.ground_size()) & ~loops;
  const OrientedMatroid loopless = restrict_to_subset(m, rest);
  std::vector<Flat> lifted;
  for (const auto& f : acyclic_flats(loopless)) {
    const CoordSet members = expand(f.members, rest) | loops;
    lifted.push_back({members, m.rank_of(members)});
  }
  return interval_cell_complex(m, lifted);
}

Report verify_strata_oracle(const Subspace& v, const BuildOptions& options) {
  Report report;
  const OrientedMatroid m = from_subspace(v, options);
  const std::size_t n = v.ground_size();
  const CoordSet all = full_set(n);

  std::map<CoordSet, bool> avoids_infinity;  // G acyclic, decided geometrically
  for (const auto& g : m.flats()) {
    const auto pattern = SignPattern::from_sets(n, all & ~g.members, 0);
    const auto res = sign_feasible(v, pattern);
    const bool ok = res.feasible() ? check_witness(v, pattern, res.witness())
                                   : check_certificate(v, pattern, res.certificate());
    report.add(set_label(g.members), "feasibility-certificate", ok);
    avoids_infinity[g.members] = res.feasible();
    const bool combinatorial = is_acyclic_flat(m, g.members);
    report.add(set_label(g.members), "infinity-avoidance", res.feasible() == combinatorial,
               res.feasible() == combinatorial ? "" : "geometry and covectors disagree on acyclicity");
  }

  for (const auto& g : m.flats()) {
    const Subspace projected = project_subspace(v, g.members);
    const OrientedMatroid restricted = restrict(m, g.members);
    const std::size_t k = cardinality(g.members);
    for (const auto& f : m.flats()) {
      if (!is_subset(f.members, g.members)) continue;
      const CoordSet fz = compress(f.members, g.members);
      const auto pattern = SignPattern::from_sets(k, full_set(k) & ~fz, 0);
      const auto res = sign_feasible(projected, pattern);
      const bool ok = res.feasible() ? check_witness(projected, pattern, res.witness())
                                     : check_certificate(projected, pattern, res.certificate());
      const std::string subject = pair_label(f.members, g.members);
      report.add(subject, "feasibility-certificate", ok);

      const bool relative = is_acyclic_flat(restricted, fz);
      report.add(subject, "restricted-acyclicity", res.feasible() == relative,
                 res.feasible() == relative ? "" : "pi_G(V) stratum disagrees with acyclicity in M|_G");

      const bool stratum = res.feasible() && avoids_infinity[g.members];
      const bool cell = is_acyclic_flat(m, f.members) && is_acyclic_flat(m, g.members);
      report.add(subject, "strata-oracle", stratum == cell,
                 stratum == cell ? "" : std::string(stratum ? "nonempty stratum is not a cell" : "cell has empty stratum"));
    }
  }
  return report;
}

Report closure_report(const OrientedMatroid& m, const CellComplexPoset& c) {
  Report report;
  const auto& p = c.closure;
  // Nesting order recomputed straight from the flats.
  bool equal = true;
  std::string witness;
  for (std::size_t a = 0; a < c.cells.size() && equal; ++a) {
    for (std::size_t b = 0; b < c.cells.size(); ++b) {
      const Cell& x = c.cells[a];
      const Cell& y = c.cells[b];
      const bool nested = is_subset(y.lower, x.lower) && is_subset(x.lower, x.upper) && is_subset(x.upper, y.upper);
      if (nested != p.leq(a, b)) {
        equal = false;
        witness = x.label(c.ground_size) + " vs " + y.label(c.ground_size);
        break;
      }
    }
  }
  report.add("complex", "closure-equals-interval-order", equal, witness);

  bool ranks_ok = true;
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    const Cell& x = c.cells[i];
    const bool ok = x.dim == m.rank_of(x.upper) - m.rank_of(x.lower) && p.rank(i) == x.dim;
    if (!ok) {
      ranks_ok = false;
      report.add(x.label(c.ground_size), "dimension-additivity", false, "rank " + std::to_string(p.rank(i)));
    }
  }
  if (ranks_ok) report.add("complex", "dimension-additivity", true);

  bool covers_ok = true;
  for (auto [a, b] : p.covers())
    if (c.cells[b].dim != c.cells[a].dim + 1) {
      covers_ok = false;
      report.add(c.cells[a].label(c.ground_size) + " < " + c.cells[b].label(c.ground_size), "cover-drops-one", false);
    }
  if (covers_ok) report.add("complex", "cover-drops-one", true);

  bool transitive = true;
  for (std::size_t a = 0; a < c.cells.size() && transitive; ++a)
    for (std::size_t b = 0; b < c.cells.size() && transitive; ++b) {
      if (!p.leq(a, b)) continue;
      for (std::size_t z = 0; z < c.cells.size(); ++z)
        if (p.leq(b, z) && !p.leq(a, z)) {
          transitive = false;
          break;
        }
    }
  report.add("complex", "closure-transitivity", transitive);

  if (p.is_graded()) {
    const auto thin = is_thin(p);
    report.add("complex", "cell-poset-thin", thin.thin,
               thin.witness ? p.label(thin.witness->first) + ".." + p.label(thin.witness->second) : "");
  } else {
    report.add("complex", "cell-poset-thin", false, "closure poset not graded");
  }
  return report;
}

Report cell_regularity(const CellComplexPoset& c) {
  Report report;
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    const std::size_t k = c.cells[i].dim;
    if (k == 0) continue;
    const GradedPoset faces = c.closure.subposet(c.closure.strict_lower_set(i));
    const BettiVector b = order_complex_betti(faces);
    const bool ok = has_sphere_homology(b, static_cast<int>(k) - 1);
    report.add(c.cells[i].label(c.ground_size), "cell-boundary-sphere", ok, ok ? "" : "betti " + betti_string(b));
  }
  return report;
}

Report regularity_report(const CellComplexPoset& c) {
  Report report = cell_regularity(c);
  const BettiVector whole = order_complex_betti(c.closure);
  report.add("complex", "ball-homology", has_point_homology(whole), betti_string(whole));

  const auto f = c.f_vector();
  report.add("complex", "euler-characteristic-ball", euler_characteristic(f) == 1,
             "chi " + std::to_string(euler_characteristic(f)));

  if (auto top = c.top_cell()) {
    const int d = static_cast<int>(c.cells[*top].dim);
    const auto boundary = c.boundary();
    const BettiVector b = order_complex_betti(c.closure.subposet(boundary));
    report.add("boundary", "boundary-sphere-homology", has_sphere_homology(b, d - 1), betti_string(b));
    std::vector<std::size_t> bf = f;
    if (!bf.empty()) --bf[static_cast<std::size_t>(d)];
    const long chi = euler_characteristic(bf);
    const long expected = (d - 1) % 2 == 0 ? 2 : 0;
    report.add("boundary", "euler-characteristic-sphere", chi == expected, "chi " + std::to_string(chi));
  } else {
    report.add("complex", "unique-top-cell", false);
  }
  return report;
}

Report boundary_pairing_check(const CellComplexPoset& c) {
  Report report;
  const auto top = c.top_cell();
  if (!top) {
    report.add("complex", "unique-top-cell", false);
    return report;
  }
  const std::size_t full = c.cells[*top].dim;
  if (full < 2) {
    report.add("boundary", "pairing", true, "boundary has no ridges");
    return report;
  }
  const std::size_t d = full - 1;
  const auto in_boundary = [&](std::size_t i) { return i != *top; };
  bool all_two = true;
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    if (!in_boundary(i) || c.cells[i].dim != d - 1) continue;
    std::size_t above = 0;
    for (auto j : c.closure.upper_covers(i))
      if (in_boundary(j) && c.cells[j].dim == d) ++above;
    if (above != 2) {
      all_two = false;
      report.add(c.cells[i].label(c.ground_size), "ridge-in-two-facets", false,
                 "lies in " + std::to_string(above) + " facets");
    }
  }
  if (all_two) report.add("boundary", "ridge-in-two-facets", true);

  const auto zero = c.zero_locus();
  std::set<std::size_t> zero_set(zero.begin(), zero.end());
  std::string found;
  for (auto i : zero) {
    if (c.cells[i].dim != d - 1) continue;
    std::size_t above = 0;
    for (auto j : c.closure.upper_covers(i))
      if (zero_set.count(j) && c.cells[j].dim == d) ++above;
    if (above == 1) {
      found = c.cells[i].label(c.ground_size);
      break;
    }
  }
  report.add("zero-locus", "free-ridge", !found.empty(), found);
  return report;
}

Report minor_correspondence_check(const Subspace& v, const BuildOptions& options) {
  Report report;
  const OrientedMatroid m = from_subspace(v, options);
  const CellComplexPoset full = tnn_cell_poset(m);
  using Key = std::tuple<CoordSet, CoordSet, std::size_t>;
  const auto key_set = [](const CellComplexPoset& c, auto&& keep, auto&& map) {
    std::set<Key> out;
    for (const auto& cell : c.cells)
      if (keep(cell)) out.insert({map(cell.lower), map(cell.upper), cell.dim});
    return out;
  };
  const auto cover_set = [](const CellComplexPoset& c, auto&& keep, auto&& map) {
    std::set<std::pair<std::pair<CoordSet, CoordSet>, std::pair<CoordSet, CoordSet>>> out;
    for (auto [a, b] : c.closure.covers()) {
      const Cell &x = c.cells[a], &y = c.cells[b];
      if (keep(x) && keep(y)) out.insert({{map(x.lower), map(x.upper)}, {map(y.lower), map(y.upper)}});
    }
    return out;
  };
  const auto identity = [](CoordSet s) { return s; };

  for (const auto& g : acyclic_flats(m)) {
    const CoordSet gm = g.members;
    const CellComplexPoset sub = tnn_cell_poset(from_subspace(project_subspace(v, gm), options));
    const auto lift_g = [gm](CoordSet s) { return expand(s, gm); };
    const auto all = [](const Cell&) { return true; };
    const auto below = [gm](const Cell& c) { return is_subset(c.upper, gm); };
    const bool ok = key_set(sub, all, lift_g) == key_set(full, below, identity) &&
                    cover_set(sub, all, lift_g) == cover_set(full, below, identity);
    report.add(set_label(gm), "restriction-correspondence", ok);
  }
  for (const auto& f : acyclic_flats(m)) {
    const CoordSet fm = f.members;
    const CellComplexPoset sub = tnn_cell_poset(from_subspace(vanish_solve(v, fm), options));
    const auto all = [](const Cell&) { return true; };
    const auto above = [fm](const Cell& c) { return is_subset(fm, c.lower); };
    const bool ok = key_set(sub, all, identity) == key_set(full, above, identity) &&
                    cover_set(sub, all, identity) == cover_set(full, above, identity);
    report.add(set_label(fm), "contraction-correspondence", ok);
  }
  return report;
}

}  // namespace schubcell
