#include "apxconv/report.hpp"

#include <algorithm>
#include <iomanip>

namespace apxconv {

void Report::add(std::string name, bool pass, std::string witness) {
  results.push_back({std::move(name), pass, std::move(witness)});
}

void Report::note(std::string text) { notes.push_back(std::move(text)); }

void Report::merge(Report other) {
  for (auto& r : other.results) results.push_back(std::move(r));
  for (auto& n : other.notes) notes.push_back(std::move(n));
}

bool Report::all_pass() const {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

namespace {

std::vector<CheckResult> sorted_results(const Report& rep) {
  std::vector<CheckResult> rs = rep.results;
  std::stable_sort(rs.begin(), rs.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     return a.name < b.name;
                   });
  return rs;
}

}  // namespace

void render_text(const Report& rep, std::ostream& os) {
  for (const auto& n : rep.notes) os << "note: " << n << "\n";
  size_t passed = 0;
  for (const auto& r : sorted_results(rep)) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.pass && r.witness != "-") os << "  " << r.witness;
    os << "\n";
    if (r.pass) ++passed;
  }
  os << passed << "/" << rep.results.size() << " checks passed\n";
}

void render_machine(const Report& rep, std::ostream& os) {
  for (const auto& n : rep.notes) os << "# " << n << "\n";
  for (const auto& r : sorted_results(rep))
    os << r.name << "\t" << (r.pass ? "PASS" : "FAIL") << "\t" << r.witness
       << "\n";
}

}  // namespace apxconv
