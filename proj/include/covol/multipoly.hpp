#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "covol/numeric.hpp"

namespace covol {

// Exponent vector of a monomial; always of length nvars of the owning
// polynomial. Entries are nonnegative (Laurent exponents are not
// representable; operations that would create one throw instead).
using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

// Graded lexicographic order, larger-first: higher total degree wins,
// ties broken by lexicographically larger exponent vector. This is the
// canonical term order for iteration and serialization.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

using TermMap = std::map<Exponent, Rat, GrlexGreater>;

// Sparse multivariate polynomial with exact rational coefficients.
// Invariants: no stored coefficient is zero; every stored exponent vector
// has length nvars(). Values are immutable in spirit: operations return
// new polynomials.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars);
  MultiPoly(int nvars, TermMap terms);

  static MultiPoly constant(int nvars, const Rat& c);
  static MultiPoly monomial(Exponent e, const Rat& c);
  // t_i as a polynomial; var is 0-based.
  static MultiPoly variable(int nvars, int var);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rat coeff(const Exponent& e) const;
  // Accumulates c onto the coefficient of e, dropping the term if it cancels.
  void add_term(const Exponent& e, const Rat& c);

  bool is_integral() const;
  bool is_homogeneous() const;
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  // Per-variable maximum exponent (all zeros for the zero polynomial).
  Exponent max_exponents() const;
  std::vector<Exponent> support() const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly operator-(const MultiPoly& other) const;
  MultiPoly operator*(const MultiPoly& other) const;
  MultiPoly operator*(const Rat& scalar) const;
  bool operator==(const MultiPoly& other) const;
  bool operator!=(const MultiPoly& other) const { return !(*this == other); }

  // Human-readable form, mostly for diagnostics and tests.
  std::string to_string(const std::vector<std::string>& var_names = {}) const;

 private:
  void check_same_vars(const MultiPoly& other) const;

  int nvars_;
  TermMap terms_;
};

Int exponent_factorial(const Exponent& e);  // n1! * ... * np!

// Coefficientwise a_n -> a_n / n!.
MultiPoly normalize(const MultiPoly& h);
// Coefficientwise a_n -> a_n * n!; inverse of normalize.
MultiPoly denormalize(const MultiPoly& h);

// t^m * h(1/t1, ..., 1/tp): exponent n becomes m - n. Requires m to
// dominate every exponent of h componentwise; throws otherwise.
MultiPoly reverse(const MultiPoly& h, const Exponent& m);

// Keeps exactly the terms with exponent <= w componentwise.
MultiPoly truncate(const MultiPoly& h, const Exponent& w);

// Substitutes t_i -> -t_i for every i in vars (0-based indices).
MultiPoly flip_signs(const MultiPoly& h, const std::vector<int>& vars);

// Substitutes t_i -> 1 - t_i for all i and expands.
MultiPoly subst_one_minus(const MultiPoly& h);

// All exponent vectors of total degree deg in nvars variables, listed in
// the canonical term order.
std::vector<Exponent> monomials_of_degree(int nvars, int deg);

}  // namespace covol
