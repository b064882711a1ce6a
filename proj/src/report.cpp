#include "schubcell/report.hpp"

#include <algorithm>

namespace schubcell {

void Report::add(std::string subject, std::string check, bool pass, std::string witness) {
  records.push_back({std::move(subject), std::move(check), pass, std::move(witness)});
}

void Report::append(const Report& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

bool Report::all_pass() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass; }));
}

std::vector<CheckRecord> Report::select(const std::string& check) const {
  std::vector<CheckRecord> out;
  for (const auto& r : records)
    if (r.check == check) out.push_back(r);
  return out;
}

}  // namespace schubcell
