#pragma once

#include <map>
#include <optional>
#include <vector>

#include "covol/multipoly.hpp"

namespace covol {

// Z^p-grading on a polynomial ring: one length-p degree vector per ring
// variable. A positive grading has every degree in N^p \ {0}; a twisted
// positive grading (with split q) is nonnegative on coordinates 1..q and
// nonpositive on coordinates q+1..p, nonzero after flipping the negative
// block.
struct GradingSpec {
  int p = 0;
  std::vector<std::vector<int>> degrees;
  std::optional<int> q;

  int nvars() const { return static_cast<int>(degrees.size()); }
  bool is_positive() const;
  bool is_standard() const;  // positive with |deg(x_i)| = 1
  // Empty when twisted-positive for the split; otherwise a message naming
  // the offending variable and coordinate.
  std::optional<std::string> twisted_violation(int split) const;
};

// Monomial ideal given by exponent-vector generators, minimalized on
// construction (no generator divides another). The unit ideal is
// rejected.
class MonomialIdeal {
 public:
  MonomialIdeal(int nvars, std::vector<Exponent> generators);

  int nvars() const { return nvars_; }
  const std::vector<Exponent>& generators() const { return gens_; }
  bool contains_monomial(const Exponent& e) const;
  bool generated_by_variables() const;

 private:
  int nvars_;
  std::vector<Exponent> gens_;
};

// K-polynomial by inclusion-exclusion over generator subsets
// (Taylor complex): sum_S (-1)^|S| t^{deg lcm(S)}. Positive gradings only.
MultiPoly k_polynomial(const MonomialIdeal& ideal, const GradingSpec& grading);

// Height of a monomial ideal: minimum number of variables meeting every
// generator's support.
int codim(const MonomialIdeal& ideal);

// Degree-codim slice of K(1 - t); verifies no lower-degree terms survive.
MultiPoly multidegree(const MonomialIdeal& ideal, const GradingSpec& grading);

// Product of <deg(x_i), t> over the generators of an ideal generated by
// variables; valid in any Z^p-grading. This is the documented escape
// hatch for non-positive, non-twisted gradings.
MultiPoly multidegree_linear(const MonomialIdeal& ideal, const GradingSpec& grading);

// Negates coordinates q+1..p of every degree vector; requires the
// twisted-positive invariant and returns a positive grading.
GradingSpec flip_grading(const GradingSpec& grading, int split);

// Multidegree in the original twisted-positive grading, computed in the
// flipped grading and pushed back through the sign flip.
MultiPoly multidegree_twisted(const MonomialIdeal& ideal, const GradingSpec& grading, int split);

// Standardization x_i -> y_{i,1} ... y_{i,l_i} with unit-vector degrees
// repeating coordinate k exactly deg(x_i)_k times, in coordinate order.
struct Standardization {
  MonomialIdeal ideal;
  GradingSpec grading;                       // standard
  std::vector<std::string> variable_names;   // y_{i,j} labels
};
Standardization standardize(const MonomialIdeal& ideal, const GradingSpec& grading);

// d! * normalize(reverse(C, m)) for a multidegree C in a standard
// multigrading of a product of projective spaces with exponent bound m
// and dim d = |m| - deg C.
MultiPoly volume_poly_from_multidegree(const MultiPoly& c, const Exponent& m, int d);

// Counts standard monomials (not in the ideal) per multidegree, for all
// degrees componentwise below the bound.
std::map<std::vector<int>, Int> hilbert_function(const MonomialIdeal& ideal,
                                                 const GradingSpec& grading,
                                                 const std::vector<int>& bound);

}  // namespace covol
