#include "covol/survey.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "covol/json_io.hpp"
#include "covol/schubert.hpp"
#include "doctest.h"

using namespace covol;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// survey files are byte-identical up to per-record timing
std::string strip_wall_ms(const std::string& contents) {
  std::istringstream in(contents);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json rec = Json::parse(line);
    rec.erase("wall_ms");
    out << rec.dump() << "\n";
  }
  return out.str();
}

SurveyOptions base_options(int n, const std::string& out) {
  SurveyOptions options;
  options.n = n;
  options.families = {SurveyFamily::schubert, SurveyFamily::double_schubert,
                      SurveyFamily::richardson, SurveyFamily::double_richardson};
  options.checks = CheckSet::support_only();
  options.out_path = out;
  return options;
}

}  // namespace

TEST_CASE("survey family polynomials") {
  auto u = Permutation::parse("2143");
  auto w = Permutation::parse("3412");
  CHECK(survey_polynomial(SurveyFamily::schubert, u, w) == schubert_polynomial(u));
  CHECK(survey_polynomial(SurveyFamily::richardson, u, w) == richardson_polynomial(w, u));
  CHECK(survey_polynomial(SurveyFamily::skew_schubert, u, w) == skew_schubert(w, u));
  auto ds = survey_polynomial(SurveyFamily::double_schubert, u, w);
  CHECK(ds == flip_signs(schubert_polynomial(u, true), {4, 5, 6, 7}));
  // the sign change leaves nonnegative coefficients
  for (const auto& [e, c] : ds.terms()) CHECK(c > 0);
}

TEST_CASE("survey over S2 double schuberts") {
  auto out = temp_path("covol_s2.jsonl");
  SurveyOptions options = base_options(2, out);
  options.families = {SurveyFamily::double_schubert};
  auto outcome = run_survey(options);
  CHECK(outcome.exit_code == 0);
  CHECK(outcome.records == 3);
  std::istringstream in(read_file(out));
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    Json rec = Json::parse(line);
    for (const auto& [k, v] : rec.at("report").at("flags").items()) CHECK(v.get<bool>());
    ++count;
  }
  CHECK(count == 3);
}

TEST_CASE("richardson family passes support checks on S3") {
  auto out = temp_path("covol_s3_rich.jsonl");
  SurveyOptions options = base_options(3, out);
  options.families = {SurveyFamily::richardson};
  auto outcome = run_survey(options);
  CHECK(outcome.exit_code == 0);
  CHECK(outcome.records == static_cast<int>(enumerate_bruhat_pairs(3).size()));
}

TEST_CASE("skew schubert family reports without asserting") {
  auto out = temp_path("covol_s4_skew.jsonl");
  SurveyOptions options = base_options(4, out);
  options.families = {SurveyFamily::skew_schubert};
  auto outcome = run_survey(options);
  CHECK(outcome.exit_code == 0);
  CHECK(outcome.records == static_cast<int>(enumerate_bruhat_pairs(4).size()));
}

TEST_CASE("survey output is deterministic and resumable") {
  auto out1 = temp_path("covol_det1.jsonl");
  auto out2 = temp_path("covol_det2.jsonl");
  SurveyOptions options = base_options(3, out1);
  options.jobs = 4;
  auto first = run_survey(options);
  CHECK(first.exit_code == 0);
  options.out_path = out2;
  options.jobs = 1;
  run_survey(options);
  CHECK(strip_wall_ms(read_file(out1)) == strip_wall_ms(read_file(out2)));

  // resuming over a complete file rewrites it byte-identically
  std::string before = read_file(out1);
  options.out_path = out1;
  options.resume = true;
  auto resumed = run_survey(options);
  CHECK(resumed.records == first.records);
  CHECK(read_file(out1) == before);

  // resuming over a truncated file recomputes only the missing tail
  std::istringstream in(before);
  std::ostringstream head;
  std::string line;
  for (int i = 0; i < 10 && std::getline(in, line); ++i) head << line << "\n";
  {
    std::ofstream trunc(out1, std::ios::trunc);
    trunc << head.str();
  }
  auto resumed2 = run_survey(options);
  CHECK(resumed2.records == first.records);
  CHECK(strip_wall_ms(read_file(out1)) == strip_wall_ms(before));
  std::istringstream check_head(read_file(out1));
  for (int i = 0; i < 10; ++i) {
    std::string a, b;
    std::getline(check_head, a);
    std::istringstream orig(before);
    for (int k = 0; k <= i; ++k) std::getline(orig, b);
    CHECK(a == b);  // reused lines are verbatim
  }
}

TEST_CASE("resume recomputes records that miss a requested check") {
  auto out = temp_path("covol_checks.jsonl");
  SurveyOptions options = base_options(2, out);
  options.families = {SurveyFamily::schubert};
  run_survey(options);  // mconvex + dlc only
  options.resume = true;
  options.checks.dually_lorentzian = true;
  run_survey(options);
  std::istringstream in(read_file(out));
  std::string line;
  while (std::getline(in, line)) {
    Json rec = Json::parse(line);
    CHECK(rec.at("report").at("flags").contains("dually_lorentzian"));
  }
}

TEST_CASE("survey respects the symmetric group bound") {
  SurveyOptions options = base_options(7, temp_path("covol_bound.jsonl"));
  CHECK_THROWS_AS(run_survey(options), std::invalid_argument);
  options.n = 2;
  options.families.clear();
  CHECK_THROWS_AS(run_survey(options), std::invalid_argument);
}

TEST_CASE("family names round trip") {
  for (SurveyFamily f : {SurveyFamily::schubert, SurveyFamily::double_schubert,
                         SurveyFamily::richardson, SurveyFamily::double_richardson,
                         SurveyFamily::skew_schubert}) {
    CHECK(parse_family(family_name(f)) == f);
  }
  CHECK_THROWS_AS(parse_family("nope"), std::invalid_argument);
  CHECK(family_asserts(SurveyFamily::richardson));
  CHECK_FALSE(family_asserts(SurveyFamily::skew_schubert));
}
