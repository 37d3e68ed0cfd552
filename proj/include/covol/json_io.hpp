#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "covol/certify.hpp"
#include "covol/macaulay.hpp"
#include "covol/multidegree.hpp"
#include "covol/multipoly.hpp"
#include "covol/toric.hpp"

namespace covol {

using Json = nlohmann::json;

// variable-name conventions for the CLI surfaces
std::vector<std::string> t_names(int p);
std::vector<std::string> ts_names(int p);  // t1..tp, s1..sp
std::vector<std::string> x_names(int n);
std::vector<std::string> y_names(int n);

// {"vars": [...], "terms": [{"e": [...], "c": "num[/den]"}, ...]} with the
// terms in the canonical term order
Json poly_to_json(const MultiPoly& f, const std::vector<std::string>& var_names);
MultiPoly poly_from_json(const Json& j, std::vector<std::string>* var_names = nullptr);

Json grading_to_json(const GradingSpec& g);
GradingSpec grading_from_json(const Json& j);

Json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& j);

Json fan_to_json(const Fan& fan);
Fan fan_from_json(const Json& j);

struct PresentationInput {
  PresentedRing ring;
  Exponent positive_monomial;
};
Json presentation_to_json(const PresentationInput& p);
PresentationInput presentation_from_json(const Json& j);

Json witness_to_json(const CertWitness& w);
Json report_to_json(const CertReport& r);

// canonical serialization string and its 64-bit FNV-1a digest, used for
// survey bookkeeping
std::string canonical_poly_string(const MultiPoly& f, const std::vector<std::string>& var_names);
std::string fnv1a_hex(const std::string& data);

}  // namespace covol
