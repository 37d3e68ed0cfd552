// covol: exact construction and log-concavity certification of Schubert /
// Richardson polynomials, multidegrees, Macaulay dual generators, and
// toric volume polynomials.
//
// Exit codes: 0 success, 1 a requested check failed (witness JSON on
// stdout), 2 malformed input or usage error (message on stderr).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "covol/json_io.hpp"
#include "covol/schubert.hpp"
#include "covol/survey.hpp"

namespace {

using namespace covol;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("malformed integer list: " + csv);
    out.push_back(std::stoi(tok));
  }
  return out;
}

std::vector<ToricDivisor> parse_divisors(const std::string& spec) {
  std::vector<ToricDivisor> out;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ';')) out.push_back(parse_int_list(tok));
  return out;
}

CheckSet parse_checks(const std::string& csv) {
  CheckSet checks;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok == "mconvex") {
      checks.mconvex = true;
    } else if (tok == "dlc") {
      checks.dlc = true;
    } else if (tok == "lorentzian") {
      checks.lorentzian = true;
    } else if (tok == "dually-lorentzian") {
      checks.dually_lorentzian = true;
    } else if (tok == "all") {
      checks = CheckSet::all();
    } else {
      throw std::invalid_argument("unknown check: " + tok);
    }
  }
  return checks;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_schubert(const std::string& perm, bool dbl) {
  Permutation w = Permutation::parse(perm);
  MultiPoly f = schubert_polynomial(w, dbl);
  print_json(poly_to_json(f, dbl ? ts_names(w.size()) : t_names(w.size())));
  return 0;
}

int cmd_richardson(const std::string& ws, const std::string& us, bool dbl, bool normal) {
  Permutation w = Permutation::parse(ws);
  Permutation u = Permutation::parse(us);
  if (dbl && normal) throw std::invalid_argument("--double and --normal-form are exclusive");
  MultiPoly f = normal ? skew_schubert(w, u) : richardson_polynomial(w, u, dbl);
  print_json(poly_to_json(f, dbl ? ts_names(w.size()) : t_names(w.size())));
  return 0;
}

int cmd_certify(const std::string& check, const std::string& poly_path) {
  std::vector<std::string> names;
  MultiPoly f = poly_from_json(read_json_file(poly_path), &names);
  CheckSet checks = parse_checks(check == "all" ? "all" : check);
  CertReport report = certify_report(f, checks);
  bool pass = true;
  if (check == "mconvex") {
    pass = report.m_convex.value_or(true);
  } else if (check == "dlc") {
    pass = report.dlc.value_or(true);
  } else if (check == "lorentzian") {
    pass = report.lorentzian.value_or(true);
  } else if (check == "dually-lorentzian") {
    pass = report.dually_lorentzian.value_or(true);
  } else {
    pass = report.all_requested_pass();
  }
  print_json(report_to_json(report));
  return pass ? 0 : 1;
}

int cmd_multidegree(const std::string& ring_path, const std::string& ideal_path, bool twisted) {
  GradingSpec grading = grading_from_json(read_json_file(ring_path));
  MonomialIdeal ideal = ideal_from_json(read_json_file(ideal_path));
  MultiPoly c(grading.p);
  if (twisted) {
    if (!grading.q) throw std::invalid_argument("--twisted needs \"q\" in the grading");
    c = multidegree_twisted(ideal, grading, *grading.q);
  } else if (grading.is_positive()) {
    c = multidegree(ideal, grading);
  } else if (ideal.generated_by_variables()) {
    // non-positive grading: the linear-factor formula for variable ideals
    c = multidegree_linear(ideal, grading);
  } else {
    throw std::invalid_argument(
        "grading is not positive; only ideals generated by variables are supported directly "
        "(use --twisted for twisted positive gradings)");
  }
  print_json(poly_to_json(c, t_names(grading.p)));
  return 0;
}

int cmd_standardize(const std::string& ring_path, const std::string& ideal_path) {
  GradingSpec grading = grading_from_json(read_json_file(ring_path));
  MonomialIdeal ideal = ideal_from_json(read_json_file(ideal_path));
  Standardization s = standardize(ideal, grading);
  print_json(Json{{"ring", grading_to_json(s.grading)},
                  {"ideal", ideal_to_json(s.ideal)},
                  {"vars", s.variable_names}});
  return 0;
}

int cmd_dualgen(const std::string& presentation_path) {
  PresentationInput p = presentation_from_json(read_json_file(presentation_path));
  DegreeMap rho = derive_degree_map(p.ring, p.positive_monomial);
  InversePoly g = dual_generator(p.ring, rho);
  print_json(poly_to_json(g.poly, y_names(p.ring.nvars())));
  return 0;
}

int cmd_annihilator(const std::string& dual_path, const std::string& degrees_csv, int through) {
  std::vector<std::string> names;
  MultiPoly g = poly_from_json(read_json_file(dual_path), &names);
  std::vector<int> degrees = parse_int_list(degrees_csv);
  auto gens = annihilator(InversePoly{g}, degrees, through);
  Json out = Json::array();
  auto xnames = x_names(static_cast<int>(degrees.size()));
  for (const auto& gen : gens) out.push_back(poly_to_json(gen, xnames));
  print_json(Json{{"gens", std::move(out)}});
  return 0;
}

int cmd_verify(const std::string& presentation_path, const std::string& dual_path) {
  PresentationInput p = presentation_from_json(read_json_file(presentation_path));
  MultiPoly g = poly_from_json(read_json_file(dual_path));
  PairVerification v = verify_inverse_pair(p.ring, InversePoly{g});
  if (v.ok) {
    print_json(Json{{"verified", true}});
    return 0;
  }
  Json witness{{"verified", false}, {"degree", v.failed_degree}};
  if (v.separating) witness["separating"] = poly_to_json(*v.separating, x_names(p.ring.nvars()));
  print_json(witness);
  return 1;
}

int cmd_toric(const std::string& fan_path, const std::string& mode, const std::string& divisors_spec,
              const std::string& reduced_csv) {
  Fan fan = fan_from_json(read_json_file(fan_path));
  if (mode == "presentation") {
    PresentationInput p;
    p.ring = jd_presentation(fan);
    p.positive_monomial.assign(fan.nrays(), 0);
    for (int idx : fan.max_cones[0]) p.positive_monomial[idx] = 1;
    print_json(presentation_to_json(p));
    return 0;
  }
  if (mode == "dualgen") {
    InversePoly g = divisors_spec.empty()
                        ? jd_dual_generator(fan)
                        : toric_dual_generator(fan, parse_divisors(divisors_spec));
    const int nv = g.poly.nvars();
    print_json(poly_to_json(g.poly, y_names(nv)));
    return 0;
  }
  if (mode == "volume") {
    std::vector<int> basis;
    if (!reduced_csv.empty()) basis = parse_int_list(reduced_csv);
    MultiPoly v = volume_polynomial(fan, basis);
    print_json(poly_to_json(v, y_names(v.nvars())));
    return 0;
  }
  if (mode == "mixedvol") {
    if (divisors_spec.empty()) throw std::invalid_argument("mixedvol needs --divisors");
    auto divisors = parse_divisors(divisors_spec);
    std::vector<LatticePolytope> polytopes;
    for (const auto& d : divisors) polytopes.push_back(divisor_polytope(fan, d));
    auto mixed = mixed_volumes(polytopes, fan.dim);
    Json out = Json::array();
    for (const auto& [alpha, mv] : mixed) {
      out.push_back(Json{{"alpha", alpha}, {"mv", rational_to_string(mv)}});
    }
    print_json(Json{{"mixed_volumes", std::move(out)}});
    return 0;
  }
  throw std::invalid_argument("unknown toric mode: " + mode);
}

int cmd_survey(int n, const std::string& families_csv, const std::string& checks_csv,
               const std::string& out_path, int jobs, bool resume) {
  SurveyOptions options;
  options.n = n;
  options.checks = parse_checks(checks_csv);
  options.out_path = out_path;
  options.jobs = jobs;
  options.resume = resume;
  std::istringstream in(families_csv);
  std::string tok;
  while (std::getline(in, tok, ',')) options.families.push_back(parse_family(tok));
  if (const char* env = std::getenv("COVOL_MAX_N")) options.max_n = std::atoi(env);
  SurveyOutcome outcome = run_survey(options);
  Json summary{{"records", outcome.records}, {"out", out_path}};
  if (outcome.exit_code != 0) summary["first_failure"] = outcome.first_failure;
  print_json(summary);
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact log-concavity certification for cohomology-ring polynomials"};
  app.require_subcommand(1);

  std::string perm, w_str, u_str, check = "all", poly_path, ring_path, ideal_path;
  std::string presentation_path, dual_path, degrees_csv, fan_path, toric_mode;
  std::string divisors_spec, reduced_csv, families_csv, checks_csv = "mconvex,dlc", out_path;
  bool dbl = false, normal_form = false, twisted = false, resume = false;
  int through = 0, survey_n = 3, jobs = 1;

  auto* schubert_cmd = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
  schubert_cmd->add_option("--perm", perm, "one-line permutation, e.g. 2143")->required();
  schubert_cmd->add_flag("--double", dbl, "double Schubert polynomial in t, s");

  auto* richardson_cmd = app.add_subcommand("richardson", "Richardson polynomial of a pair");
  richardson_cmd->add_option("--w", w_str)->required();
  richardson_cmd->add_option("--u", u_str)->required();
  richardson_cmd->add_flag("--double", dbl, "double Richardson polynomial");
  richardson_cmd->add_flag("--normal-form", normal_form, "skew Schubert normal form");

  auto* certify_cmd = app.add_subcommand("certify", "log-concavity certification battery");
  certify_cmd->add_option("--check", check, "mconvex|dlc|lorentzian|dually-lorentzian|all")
      ->check(CLI::IsMember({"mconvex", "dlc", "lorentzian", "dually-lorentzian", "all"}));
  certify_cmd->add_option("--poly", poly_path, "polynomial JSON file")->required();

  auto* multidegree_cmd = app.add_subcommand("multidegree", "multidegree of a monomial ideal");
  multidegree_cmd->add_option("--ring", ring_path, "grading JSON file")->required();
  multidegree_cmd->add_option("--ideal", ideal_path, "ideal JSON file")->required();
  multidegree_cmd->add_flag("--twisted", twisted, "twisted positive grading (uses \"q\")");

  auto* standardize_cmd = app.add_subcommand("standardize", "standardize a graded monomial ideal");
  standardize_cmd->add_option("--ring", ring_path)->required();
  standardize_cmd->add_option("--ideal", ideal_path)->required();

  auto* dualgen_cmd = app.add_subcommand("dualgen", "Macaulay dual generator of a presentation");
  dualgen_cmd->add_option("--presentation", presentation_path)->required();

  auto* annihilator_cmd = app.add_subcommand("annihilator", "annihilator ideal of a dual generator");
  annihilator_cmd->add_option("--dual", dual_path)->required();
  annihilator_cmd->add_option("--degrees", degrees_csv, "variable weights, e.g. 1,2")->required();
  annihilator_cmd->add_option("--through", through, "generation bound (default socle + 1)");

  auto* verify_cmd = app.add_subcommand("verify", "verify a presentation/dual-generator pair");
  verify_cmd->add_option("--presentation", presentation_path)->required();
  verify_cmd->add_option("--dual", dual_path)->required();

  auto* toric_cmd = app.add_subcommand("toric", "toric cohomology computations");
  toric_cmd->add_option("--fan", fan_path, "fan JSON file")->required();
  toric_cmd->add_option("mode", toric_mode, "presentation|dualgen|volume|mixedvol")->required();
  toric_cmd->add_option("--divisors", divisors_spec, "divisors, e.g. 0,0,1,0;0,0,0,1");
  toric_cmd->add_option("--reduced", reduced_csv, "0-based ray indices of a Picard basis");

  auto* survey_cmd = app.add_subcommand("survey", "certify families over all Bruhat pairs");
  survey_cmd->add_option("--n", survey_n, "symmetric group size")->required();
  survey_cmd->add_option("--families", families_csv, "comma list of families")->required();
  survey_cmd->add_option("--checks", checks_csv, "comma list of checks (default mconvex,dlc)");
  survey_cmd->add_option("--out", out_path, "JSONL output path")->required();
  survey_cmd->add_option("--jobs", jobs, "worker threads");
  survey_cmd->add_flag("--resume", resume, "reuse records already in the output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (schubert_cmd->parsed()) return cmd_schubert(perm, dbl);
    if (richardson_cmd->parsed()) return cmd_richardson(w_str, u_str, dbl, normal_form);
    if (certify_cmd->parsed()) return cmd_certify(check, poly_path);
    if (multidegree_cmd->parsed()) return cmd_multidegree(ring_path, ideal_path, twisted);
    if (standardize_cmd->parsed()) return cmd_standardize(ring_path, ideal_path);
    if (dualgen_cmd->parsed()) return cmd_dualgen(presentation_path);
    if (annihilator_cmd->parsed()) return cmd_annihilator(dual_path, degrees_csv, through);
    if (verify_cmd->parsed()) return cmd_verify(presentation_path, dual_path);
    if (toric_cmd->parsed()) return cmd_toric(fan_path, toric_mode, divisors_spec, reduced_csv);
    if (survey_cmd->parsed()) return cmd_survey(survey_n, families_csv, checks_csv, out_path, jobs, resume);
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
