#include "schubcell/matrix_io.hpp"

#include "schubcell/errors.hpp"

#include <sstream>
#include <string>

namespace schubcell {

ParsedMatrix parse_matrix(std::istream& in) {
  ParsedMatrix out;
  std::string line;
  std::size_t lineno = 0;
  bool have_width = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    RationalVector row;
    std::string tok;
    while (tokens >> tok) {
      try {
        row.push_back(parse_rational(tok));
      } catch (const std::invalid_argument& e) {
        throw InputError("line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    if (row.empty()) continue;
    if (!have_width) {
      out.columns = row.size();
      have_width = true;
    } else if (row.size() != out.columns) {
      throw InputError("line " + std::to_string(lineno) + ": expected " + std::to_string(out.columns) +
                       " entries, found " + std::to_string(row.size()));
    }
    out.rows.push_back(std::move(row));
  }
  if (!have_width) throw InputError("matrix input contains no rows");
  return out;
}

ParsedMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in);
}

}  // namespace schubcell
