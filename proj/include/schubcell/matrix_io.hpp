#pragma once

#include "schubcell/rational.hpp"

#include <istream>
#include <string_view>

namespace schubcell {

struct ParsedMatrix {
  RationalMatrix rows;
  std::size_t columns = 0;
};

/**
 * Reads a rational matrix: one row per line, entries separated by whitespace,
 * each an integer or "p/q". Blank lines and everything after '#' are ignored.
 * Throws InputError (with the offending line number) on bad tokens or ragged rows.
 */
ParsedMatrix parse_matrix(std::istream& in);
ParsedMatrix parse_matrix(std::string_view text);

}  // namespace schubcell
