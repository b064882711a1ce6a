#pragma once

#include <string>
#include <vector>

namespace schubcell {

/// One verdict: which object was checked, by which check, and what went wrong.
struct CheckRecord {
  std::string subject;
  std::string check;
  bool pass = true;
  std::string witness;
};

struct Report {
  std::vector<CheckRecord> records;

  void add(std::string subject, std::string check, bool pass, std::string witness = {});
  void append(const Report& other);
  bool all_pass() const;
  std::size_t failures() const;
  /// Records whose check name matches.
  std::vector<CheckRecord> select(const std::string& check) const;
};

}  // namespace schubcell
