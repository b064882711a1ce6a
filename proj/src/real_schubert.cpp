#include "schubcell/real_schubert.hpp"

#include "schubcell/tnn.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace schubcell {

namespace {

void require_tope(const OrientedMatroid& m, SignVector tope) {
  if (!m.is_tope(tope)) throw std::domain_error("not a tope: " + tope.str(m.ground_size()));
}

std::set<CoordSet> relative_set(const OrientedMatroid& m, SignVector tope) {
  std::set<CoordSet> out;
  for (auto x : m.covectors())
    if (conforms(x, tope)) out.insert(x.zero_set(m.ground_size()));
  return out;
}

Cell strip(Cell c) {
  c.tope.reset();
  return c;
}

}  // namespace

std::vector<Flat> relatively_acyclic_flats(const OrientedMatroid& m, SignVector tope) {
  require_tope(m, tope);
  const auto zs = relative_set(m, tope);
  std::vector<Flat> out;
  for (const auto& f : m.flats())
    if (zs.count(f.members)) out.push_back(f);
  return out;
}

CellComplexPoset tope_chart(const OrientedMatroid& m, SignVector tope) {
  require_tope(m, tope);
  CellComplexPoset base = tnn_cell_poset(reorient(m, tope.minus));
  std::vector<Cell> cells;
  for (auto c : base.cells) {
    c.tope = mask(tope, c.upper & ~c.lower);
    cells.push_back(c);
  }
  return make_cell_complex(base.ground_size, base.loops, std::move(cells), [&](const Cell& a, const Cell& b) {
    return base.closure.leq(*base.find(strip(a)), *base.find(strip(b)));
  });
}

CellComplexPoset tope_chart(const Subspace& v, SignVector tope, const BuildOptions& options) {
  const OrientedMatroid m = from_subspace(v, options);
  require_tope(m, tope);
  const OrientedMatroid flipped = from_subspace(reorient(v, tope.minus), options);
  CellComplexPoset base = tnn_cell_poset(flipped);
  std::vector<Cell> cells;
  for (auto c : base.cells) {
    c.tope = mask(tope, c.upper & ~c.lower);
    cells.push_back(c);
  }
  return make_cell_complex(base.ground_size, base.loops, std::move(cells), [&](const Cell& a, const Cell& b) {
    return base.closure.leq(*base.find(strip(a)), *base.find(strip(b)));
  });
}

std::vector<Cell> triple_cells(const OrientedMatroid& m) {
  const std::size_t n = m.ground_size();
  std::vector<Cell> out;
  for (const auto& f : m.flats()) {
    std::set<SignVector, decltype(&lex_less)> minor_topes(&lex_less);
    for (auto x : m.covectors())
      if (x.zero_set(n) == f.members) minor_topes.insert(x);
    for (const auto& g : m.flats()) {
      if (!is_subset(f.members, g.members)) continue;
      std::set<SignVector, decltype(&lex_less)> restricted(&lex_less);
      for (auto x : minor_topes) restricted.insert(mask(x, g.members));
      for (auto t : restricted) out.push_back({f.members, g.members, t, g.rank - f.rank});
    }
  }
  std::sort(out.begin(), out.end(), cell_order);
  return out;
}

bool same_cell(const ChartTriple& a, const ChartTriple& b) {
  const CoordSet open = a.upper & ~a.lower;
  return a.lower == b.lower && a.upper == b.upper && mask(a.tope, open) == mask(b.tope, open);
}

Cell cell_of_chart_triple(const OrientedMatroid& m, const ChartTriple& t) {
  require_tope(m, t.tope);
  const auto zs = relative_set(m, t.tope);
  if (!zs.count(t.lower) || !zs.count(t.upper) || !is_subset(t.lower, t.upper))
    throw std::domain_error("flats are not relatively acyclic in the tope");
  return {t.lower, t.upper, mask(t.tope, t.upper & ~t.lower), m.rank_of(t.upper) - m.rank_of(t.lower)};
}

std::optional<ChartTriple> chart_triple_of_cell(const OrientedMatroid& m, const Cell& c) {
  if (!c.tope) return std::nullopt;
  for (auto s : m.topes()) {  // topes are sorted by lex_less
    if (mask(s, c.upper & ~c.lower) != *c.tope) continue;
    const auto zs = relative_set(m, s);
    if (zs.count(c.lower) && zs.count(c.upper)) return ChartTriple{c.lower, c.upper, s};
  }
  return std::nullopt;
}

CellComplexPoset yv_complex(const OrientedMatroid& m) {
  std::vector<Cell> cells = triple_cells(m);
  const std::size_t count = cells.size();
  std::map<std::tuple<CoordSet, CoordSet, CoordSet, CoordSet>, std::size_t> index;
  for (std::size_t i = 0; i < count; ++i) index[{cells[i].lower, cells[i].upper, cells[i].tope->plus, cells[i].tope->minus}] = i;

  std::vector<boost::dynamic_bitset<>> below(count, boost::dynamic_bitset<>(count));
  for (auto s : m.topes()) {
    const auto zs = relative_set(m, s);
    std::vector<std::size_t> chart;
    for (auto f : zs)
      for (auto g : zs) {
        if (!is_subset(f, g)) continue;
        const SignVector t = mask(s, g & ~f);
        chart.push_back(index.at({f, g, t.plus, t.minus}));
      }
    for (auto a : chart)
      for (auto b : chart) {
        const Cell &x = cells[a], &y = cells[b];
        if (is_subset(y.lower, x.lower) && is_subset(x.upper, y.upper)) below[b].set(a);
      }
  }
  // Positions of the (already sorted) cells survive make_cell_complex unchanged.
  return make_cell_complex(m.ground_size(), m.loops(), cells, [&](const Cell& a, const Cell& b) {
    const auto ia = index.at({a.lower, a.upper, a.tope->plus, a.tope->minus});
    const auto ib = index.at({b.lower, b.upper, b.tope->plus, b.tope->minus});
    return below[ib].test(ia);
  });
}

CellComplexPoset yv_complex(const Subspace& v, const BuildOptions& options) {
  return yv_complex(from_subspace(v, options));
}

BettiVector yv_betti(const Subspace& v, const BuildOptions& options) {
  return order_complex_betti(yv_complex(v, options).closure);
}

Report chart_consistency_check(const Subspace& v, const BuildOptions& options) {
  Report report;
  const OrientedMatroid m = from_subspace(v, options);
  const std::size_t n = m.ground_size();
  const CellComplexPoset y = yv_complex(m);

  std::vector<CellComplexPoset> charts;
  std::set<std::size_t> covered;
  for (auto s : m.topes()) {
    charts.push_back(tope_chart(v, s, options));
    const auto& chart = charts.back();
    const std::string subject = "chart " + s.str(n);

    bool inside = true;
    std::vector<std::size_t> positions;
    for (const auto& c : chart.cells) {
      auto pos = y.find(c);
      if (!pos) {
        inside = false;
        report.add(subject, "chart-cell-is-triple", false, c.label(n));
        continue;
      }
      positions.push_back(*pos);
      covered.insert(*pos);
    }
    if (inside) report.add(subject, "chart-cell-is-triple", true);

    const Report ball = regularity_report(chart);
    std::string witness;
    for (const auto& r : ball.records)
      if (!r.pass) {
        witness = r.subject + " " + r.check;
        break;
      }
    report.add(subject, "chart-ball", ball.all_pass(), witness);

    if (inside) {
      bool same = true;
      for (std::size_t a = 0; a < chart.cells.size() && same; ++a)
        for (std::size_t b = 0; b < chart.cells.size(); ++b)
          if (chart.closure.leq(a, b) != y.closure.leq(positions[a], positions[b])) {
            same = false;
            break;
          }
      report.add(subject, "chart-order-induced", same);
    }
  }
  report.add("complex", "chart-covering", covered.size() == y.cells.size(),
             std::to_string(covered.size()) + " of " + std::to_string(y.cells.size()) + " cells covered");

  // Overlaps: label comparison against the flats-and-restriction criterion.
  const auto& topes = m.topes();
  bool overlaps = true;
  for (std::size_t i = 0; i < topes.size(); ++i)
    for (std::size_t j = i + 1; j < topes.size(); ++j) {
      std::set<std::size_t> by_label;
      for (const auto& c : charts[i].cells)
        if (charts[j].find(c)) by_label.insert(*y.find(c));
      std::set<std::size_t> by_rule;
      const auto zi = relative_set(m, topes[i]);
      const auto zj = relative_set(m, topes[j]);
      for (auto f : zi)
        for (auto g : zi) {
          if (!is_subset(f, g) || !zj.count(f) || !zj.count(g)) continue;
          const ChartTriple a{f, g, topes[i]}, b{f, g, topes[j]};
          if (same_cell(a, b)) by_rule.insert(*y.find(cell_of_chart_triple(m, a)));
        }
      if (by_label != by_rule) {
        overlaps = false;
        report.add(topes[i].str(n) + " / " + topes[j].str(n), "chart-overlap", false);
      }
    }
  if (overlaps) report.add("complex", "chart-overlap", true);

  bool roundtrip = true;
  for (const auto& c : y.cells) {
    const auto t = chart_triple_of_cell(m, c);
    if (!t || !(cell_of_chart_triple(m, *t) == c)) {
      roundtrip = false;
      report.add(c.label(n), "triple-roundtrip", false);
    }
  }
  if (roundtrip) report.add("complex", "triple-roundtrip", true);

  report.append(cell_regularity(y));
  return report;
}

}  // namespace schubcell
