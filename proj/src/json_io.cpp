#include "covol/json_io.hpp"

#include <cstdint>
#include <cstdio>
#include <stdexcept>

namespace covol {

namespace {

std::vector<std::string> prefixed(const std::string& prefix, int count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (int i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

}  // namespace

std::vector<std::string> t_names(int p) { return prefixed("t", p); }

std::vector<std::string> ts_names(int p) {
  auto names = prefixed("t", p);
  auto s = prefixed("s", p);
  names.insert(names.end(), s.begin(), s.end());
  return names;
}

std::vector<std::string> x_names(int n) { return prefixed("x", n); }
std::vector<std::string> y_names(int n) { return prefixed("y", n); }

Json poly_to_json(const MultiPoly& f, const std::vector<std::string>& var_names) {
  if (static_cast<int>(var_names.size()) != f.nvars()) {
    throw std::invalid_argument("variable name count mismatch");
  }
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    terms.push_back(Json{{"e", e}, {"c", rational_to_string(c)}});
  }
  return Json{{"vars", var_names}, {"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const Json& j, std::vector<std::string>* var_names) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms")) {
    throw std::invalid_argument("polynomial JSON needs \"vars\" and \"terms\"");
  }
  std::vector<std::string> names = j.at("vars").get<std::vector<std::string>>();
  MultiPoly f(static_cast<int>(names.size()));
  for (const auto& term : j.at("terms")) {
    Exponent e = term.at("e").get<Exponent>();
    const auto& c = term.at("c");
    Rat coeff = c.is_string() ? parse_rational(c.get<std::string>())
                              : Rat(c.get<long long>());
    f.add_term(e, coeff);
  }
  if (var_names) *var_names = std::move(names);
  return f;
}

Json grading_to_json(const GradingSpec& g) {
  Json j{{"p", g.p}, {"degrees", g.degrees}};
  if (g.q) j["q"] = *g.q;
  return j;
}

GradingSpec grading_from_json(const Json& j) {
  GradingSpec g;
  g.p = j.at("p").get<int>();
  g.degrees = j.at("degrees").get<std::vector<std::vector<int>>>();
  if (j.contains("q")) g.q = j.at("q").get<int>();
  for (const auto& d : g.degrees) {
    if (static_cast<int>(d.size()) != g.p) {
      throw std::invalid_argument("degree vector length does not match p");
    }
  }
  return g;
}

Json ideal_to_json(const MonomialIdeal& ideal) {
  return Json{{"nvars", ideal.nvars()}, {"gens", ideal.generators()}};
}

MonomialIdeal ideal_from_json(const Json& j) {
  auto gens = j.at("gens").get<std::vector<Exponent>>();
  int nvars;
  if (j.contains("nvars")) {
    nvars = j.at("nvars").get<int>();
  } else if (!gens.empty()) {
    nvars = static_cast<int>(gens[0].size());
  } else {
    throw std::invalid_argument("ideal JSON needs \"nvars\" when there are no generators");
  }
  return MonomialIdeal(nvars, std::move(gens));
}

Json fan_to_json(const Fan& fan) {
  return Json{{"dim", fan.dim}, {"rays", fan.rays}, {"max_cones", fan.max_cones}};
}

Fan fan_from_json(const Json& j) {
  Fan fan;
  fan.dim = j.at("dim").get<int>();
  fan.rays = j.at("rays").get<std::vector<std::vector<int>>>();
  fan.max_cones = j.at("max_cones").get<std::vector<std::vector<int>>>();
  validate_fan(fan);
  return fan;
}

Json presentation_to_json(const PresentationInput& p) {
  Json gens = Json::array();
  auto names = x_names(p.ring.nvars());
  for (const auto& g : p.ring.generators) gens.push_back(poly_to_json(g, names));
  return Json{{"var_degrees", p.ring.var_degrees},
              {"gens", std::move(gens)},
              {"socle_degree", p.ring.socle_degree},
              {"positive_monomial", p.positive_monomial}};
}

PresentationInput presentation_from_json(const Json& j) {
  PresentationInput p;
  p.ring.var_degrees = j.at("var_degrees").get<std::vector<int>>();
  p.ring.socle_degree = j.at("socle_degree").get<int>();
  for (const auto& g : j.at("gens")) p.ring.generators.push_back(poly_from_json(g));
  p.positive_monomial = j.at("positive_monomial").get<Exponent>();
  validate_ring(p.ring);
  if (static_cast<int>(p.positive_monomial.size()) != p.ring.nvars()) {
    throw std::invalid_argument("positive monomial length does not match variable count");
  }
  return p;
}

Json witness_to_json(const CertWitness& w) {
  Json j{{"kind", w.kind}};
  if (!w.points.empty()) j["points"] = w.points;
  if (!w.indices.empty()) j["indices"] = w.indices;
  if (!w.derivative.empty()) j["derivative"] = w.derivative;
  if (w.kind == "hessian") {
    j["n_plus"] = w.n_plus;
    Json form = Json::array();
    for (const auto& row : w.form) {
      Json jrow = Json::array();
      for (const auto& x : row) jrow.push_back(rational_to_string(x));
      form.push_back(std::move(jrow));
    }
    j["form"] = std::move(form);
  }
  return j;
}

Json report_to_json(const CertReport& r) {
  Json flags = Json::object();
  auto put = [&](const char* name, const std::optional<bool>& flag) {
    if (flag) flags[name] = *flag;
  };
  put("nonnegative", r.nonnegative);
  put("homogeneous", r.homogeneous);
  put("m_convex", r.m_convex);
  put("dlc", r.dlc);
  put("lorentzian", r.lorentzian);
  put("dually_lorentzian", r.dually_lorentzian);
  Json j{{"flags", std::move(flags)}, {"degenerate", r.degenerate}};
  j["degree"] = r.degree ? Json(*r.degree) : Json(nullptr);
  if (!r.witnesses.empty()) {
    Json w = Json::object();
    for (const auto& [flag, witness] : r.witnesses) w[flag] = witness_to_json(witness);
    j["witnesses"] = std::move(w);
  }
  return j;
}

std::string canonical_poly_string(const MultiPoly& f, const std::vector<std::string>& var_names) {
  return poly_to_json(f, var_names).dump();
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return std::string(buf);
}

}  // namespace covol
