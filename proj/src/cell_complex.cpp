#include "schubcell/cell_complex.hpp"

#include <algorithm>

namespace schubcell {

std::string Cell::label(std::size_t n) const {
  std::string s = "[" + set_label(lower) + "," + set_label(upper);
  if (tope) s += ";" + tope->str(n);
  return s + "]";
}

bool cell_order(const Cell& a, const Cell& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  if (a.lower != b.lower) return a.lower < b.lower;
  if (a.upper != b.upper) return a.upper < b.upper;
  if (a.tope.has_value() != b.tope.has_value()) return !a.tope.has_value();
  return a.tope && lex_less(*a.tope, *b.tope);
}

std::size_t CellComplexPoset::dimension() const {
  std::size_t d = 0;
  for (const auto& c : cells) d = std::max(d, c.dim);
  return d;
}

std::optional<std::size_t> CellComplexPoset::top_cell() const {
  auto maxes = closure.maximal_elements();
  if (maxes.size() != 1) return std::nullopt;
  return maxes.front();
}

std::vector<std::size_t> CellComplexPoset::boundary() const {
  std::vector<std::size_t> out;
  auto top = top_cell();
  if (!top) return out;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (i != *top) out.push_back(i);
  return out;
}

std::vector<std::size_t> CellComplexPoset::zero_locus() const {
  std::vector<std::size_t> out;
  if (cells.empty()) return out;
  CoordSet bottom = cells.front().lower;
  for (const auto& c : cells) bottom &= c.lower;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].lower != bottom) out.push_back(i);
  return out;
}

std::vector<std::size_t> CellComplexPoset::cells_of_dim(std::size_t d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].dim == d) out.push_back(i);
  return out;
}

std::optional<std::size_t> CellComplexPoset::find(const Cell& c) const {
  auto it = std::lower_bound(cells.begin(), cells.end(), c, cell_order);
  if (it == cells.end() || !(*it == c)) return std::nullopt;
  return static_cast<std::size_t>(it - cells.begin());
}

std::vector<std::size_t> CellComplexPoset::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& c : cells) {
    if (f.size() <= c.dim) f.resize(c.dim + 1, 0);
    ++f[c.dim];
  }
  return f;
}

CellComplexPoset make_cell_complex(std::size_t ground_size, CoordSet loops, std::vector<Cell> cells,
                                   const std::function<bool(const Cell&, const Cell&)>& leq) {
  std::sort(cells.begin(), cells.end(), cell_order);
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  CellComplexPoset c;
  c.ground_size = ground_size;
  c.loops = loops;
  c.cells = std::move(cells);
  std::vector<std::string> labels;
  for (const auto& cell : c.cells) labels.push_back(cell.label(ground_size));
  const auto& cs = c.cells;
  c.closure = GradedPoset::from_order(std::move(labels),
                                      [&](std::size_t a, std::size_t b) { return leq(cs[a], cs[b]); });
  return c;
}

std::vector<std::size_t> maximal_cells(const CellComplexPoset& c, const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> out;
  for (auto a : subset) {
    bool maximal = true;
    for (auto b : subset)
      if (c.closure.less(a, b)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(a);
  }
  return out;
}

GradedPoset induced_order(const CellComplexPoset& c, const std::vector<std::size_t>& subset) {
  return c.closure.subposet(subset);
}

}  // namespace schubcell
