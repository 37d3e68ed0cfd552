#pragma once

#include <string>
#include <vector>

#include "covol/certify.hpp"
#include "covol/multipoly.hpp"
#include "covol/permutation.hpp"

namespace covol {

// Polynomial families certified per Bruhat-comparable pair (u, w). The
// double families carry the sign change on the second alphabet that the
// certification needs; skew_schubert is exploratory and never asserted.
enum class SurveyFamily {
  schubert,
  double_schubert,
  richardson,
  double_richardson,
  skew_schubert,
};

std::string family_name(SurveyFamily f);
SurveyFamily parse_family(const std::string& name);
bool family_asserts(SurveyFamily f);

// The family polynomial of a comparable pair, in the conventional
// variables (t for single families, t then s for double ones).
MultiPoly survey_polynomial(SurveyFamily f, const Permutation& u, const Permutation& w);
std::vector<std::string> survey_var_names(SurveyFamily f, int n);

struct SurveyOptions {
  int n = 3;
  std::vector<SurveyFamily> families;
  CheckSet checks = CheckSet::support_only();
  std::string out_path;
  int jobs = 1;
  bool resume = false;
  int max_n = 6;
};

struct SurveyOutcome {
  int exit_code = 0;  // 0 all assertions pass, 1 an assertion family failed
  int records = 0;
  int failed_records = 0;
  std::string first_failure;  // "family u<=w" label of the first assertion failure
};

// Writes one JSONL record per (family, pair) in deterministic order:
// families as given, pairs in u-major lexicographic order. Assertion
// families abort the run (exit 1) at the first failing record; records up
// to and including it are still written. --resume reuses records already
// present in the output file verbatim.
SurveyOutcome run_survey(const SurveyOptions& options);

}  // namespace covol
