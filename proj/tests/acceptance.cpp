// Acceptance suite: runs every end-to-end criterion and prints one
// pass/fail line each. Exit code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "braceforge/repro.hpp"

using namespace braceforge;

namespace {

struct Criterion {
  int id;
  std::string target;
  std::string label;
};

const std::vector<Criterion> kCriteria = {
    {1, "algebra-counts", "split-algebra operator counts 2, 12, 128 for n = 1, 2, 3"},
    {2, "algebra-orbits", "split-algebra orbit counts 7 and 26 for n = 2, 3"},
    {3, "algebra-oracle", "combinatorial conditions match the operator identity on all 3^(n^2) matrices, n <= 3"},
    {4, "s3-b1", "S3 splitting operator: five images, cyclic derived group, generator powers"},
    {5, "s3-b2", "S3 homomorphism operator: five images, cyclic derived group, brace isomorphism"},
    {6, "s3-multibrace", "S3 two-level tower: o2 = o1"},
    {7, "brace-universality", "every enumerated operator on the order <= 8 catalog induces a verified brace"},
    {8, "ybe-universality", "every induced solution passes braid/non-degeneracy; involutive iff abelian; routes agree"},
    {9, "embedding", "pair-group embedding with splitting operator and star-commutator identity"},
    {10, "complete-recovery", "S3 is complete; every regular-subgroup brace round-trips through recovery"},
    {11, "criteria-equivalences", "six criterion equivalences over all enumerated operators, zero disagreements"},
    {12, "corollaries", "nilpotent circle implies solvable dot; abelian circle implies metabelian dot"},
    {13, "parity-window", "integer parity brace window N = 50, all formula checks"},
    {14, "colazzo", "semidirect brace Z3 x| Z2: Z6 additive, S3 multiplicative, non-ideal left center"},
    {15, "scale-note", "large-scale regular-subgroup count is documented as out of scope, never asserted"},
};

bool readme_has_scale_note(const std::string& path, std::string& detail) {
  std::ifstream in(path);
  if (!in) {
    detail = "README not found at " + path;
    return false;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  bool has_formula = text.find("(n|Aut(G)|+1)") != std::string::npos;
  bool has_scale = text.find("3600") != std::string::npos;
  if (!has_formula || !has_scale) {
    detail = "README lacks the out-of-scope note on the regular-subgroup count";
    return false;
  }
  detail = "README documents the count as out of desk-scale reach";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::string readme_path = "README.md";
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--readme" && i + 1 < argc) readme_path = argv[++i];
    if (a == "--verbose" || a == "-v") verbose = true;
  }
  RunConfig cfg;
  int failed = 0;
  auto suite_start = std::chrono::steady_clock::now();
  for (const Criterion& c : kCriteria) {
    auto t0 = std::chrono::steady_clock::now();
    ReproResult r = run_repro(c.target, cfg);
    if (c.id == 15) {
      std::string detail;
      bool doc_ok = readme_has_scale_note(readme_path, detail);
      r.ok = r.ok && doc_ok;
      r.lines.push_back(std::string(doc_ok ? "ok   " : "FAIL ") + detail);
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%2d] %s  %s (%.2fs)\n", c.id, r.ok ? "PASS" : "FAIL", c.label.c_str(),
                secs);
    for (const std::string& line : r.lines)
      if (verbose || !r.ok || line.rfind("note", 0) == 0)
        std::printf("       %s\n", line.c_str());
    if (!r.ok) ++failed;
  }
  double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
  std::printf("%d/%zu criteria passed (%.1fs total)\n",
              static_cast<int>(kCriteria.size()) - failed, kCriteria.size(), total);
  return failed;
}
