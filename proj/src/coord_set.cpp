#include "schubcell/coord_set.hpp"

namespace schubcell {

std::vector<std::size_t> elements(CoordSet s) {
  std::vector<std::size_t> out;
  while (s) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

CoordSet compress(CoordSet s, CoordSet within) {
  CoordSet out = 0;
  std::size_t k = 0;
  for (std::size_t i : elements(within)) {
    if (contains(s, i)) out |= CoordSet{1} << k;
    ++k;
  }
  return out;
}

CoordSet expand(CoordSet s, CoordSet within) {
  CoordSet out = 0;
  std::size_t k = 0;
  for (std::size_t i : elements(within)) {
    if (contains(s, k)) out |= CoordSet{1} << i;
    ++k;
  }
  return out;
}

std::string set_label(CoordSet s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : elements(s)) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::string short_label(CoordSet s) {
  if (s == 0) return "0";
  std::string out;
  bool wide = false;
  for (std::size_t i : elements(s)) wide = wide || i >= 9;
  for (std::size_t i : elements(s)) {
    if (wide && !out.empty()) out += ".";
    out += std::to_string(i + 1);
  }
  return out;
}

}  // namespace schubcell
