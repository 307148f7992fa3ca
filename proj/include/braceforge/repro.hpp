#ifndef BRACEFORGE_REPRO_HPP
#define BRACEFORGE_REPRO_HPP

#include <string>
#include <vector>

namespace braceforge {

struct RunConfig {
  int max_order = -1;      // -1: use each operation's default bound
  int max_hol = -1;
  int jobs = 1;
  unsigned seed = 12345;
  std::string format = "text";
  std::string out_path;
  bool deterministic = true;  // reserved
};

struct ReproResult {
  std::string name;
  bool ok = false;
  std::vector<std::string> lines;  // one line per sub-check, "ok  label" / "FAIL label"
};

/// Names of all reproduction targets, in report order.
std::vector<std::string> repro_targets();

/// Runs one named end-to-end reproduction.
ReproResult run_repro(const std::string& name, const RunConfig& cfg);

/// Runs every target; jobs > 1 evaluates targets concurrently with an
/// order-stable merge.
std::vector<ReproResult> run_all_repro(const RunConfig& cfg);

}  // namespace braceforge

#endif  // BRACEFORGE_REPRO_HPP
