#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace apxconv {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness = "-";  // compact json-like payload, "-" when none
};

/// An ordered list of named check outcomes plus free-form notes. Rendering
/// sorts by check name so output is reproducible across runs.
struct Report {
  std::vector<CheckResult> results;
  std::vector<std::string> notes;

  void add(std::string name, bool pass, std::string witness = "-");
  void note(std::string text);
  void merge(Report other);
  bool all_pass() const;
  /// 0 when everything passed, 1 otherwise (the CLI's violation exit code).
  int exit_code() const { return all_pass() ? 0 : 1; }
};

void render_text(const Report& rep, std::ostream& os);
/// One line per check: name<TAB>PASS|FAIL<TAB>witness. Notes become leading
/// '#' comment lines.
void render_machine(const Report& rep, std::ostream& os);

}  // namespace apxconv
