#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covol/intlinalg.hpp"
#include "covol/multipoly.hpp"

namespace covol {

// Signature (n_plus, n_zero, n_minus) of a symmetric bilinear form.
struct Inertia {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;
  bool operator==(const Inertia&) const = default;
};

// Exact inertia by symmetric congruence diagonalization with rational
// pivots; zero-diagonal blocks are handled by the usual row+column
// addition before pivoting. Throws on non-symmetric input.
Inertia signature(QMat q);

// Failure datum attached to a false certification flag. `kind` selects
// which of the remaining fields are meaningful:
//   negative_coefficient: points = {n}
//   inhomogeneous:        points = {n1, n2} of differing total degree
//   mixed_degree_support: points = {q, r} of differing total degree
//   exchange:             points = {q, r}, indices = {i} (1-based)
//   dlc:                  points = {n}, indices = {i, j} (1-based)
//   hessian:              derivative = multi-index, n_plus, form = matrix
struct CertWitness {
  std::string kind;
  std::vector<Exponent> points;
  std::vector<int> indices;
  Exponent derivative;
  int n_plus = 0;
  QMat form;
};

// Exchange-axiom check on a set of exponent vectors. Returns the first
// failing witness in canonical scan order, or nullopt when M-convex.
// Mixed total degrees report as a mixed_degree_support witness.
std::optional<CertWitness> mconvex_violation(const std::vector<Exponent>& support);
bool is_mconvex(const std::vector<Exponent>& support);

// Discrete log-concavity: a_n >= 0 everywhere and
// a_n^2 >= a_{n+ei-ej} * a_{n-ei+ej} for all n, i, j.
std::optional<CertWitness> dlc_violation(const MultiPoly& h);
bool is_dlc(const MultiPoly& h);

// Lorentzian test: nonnegative coefficients, M-convex support, and every
// (d-2)-fold derivative has a quadratic form with at most one positive
// eigenvalue. Degrees <= 1 are decided by the first two conditions.
// Throws on inhomogeneous input; the zero polynomial passes degenerately.
std::optional<CertWitness> lorentzian_violation(const MultiPoly& h);
bool is_lorentzian(const MultiPoly& h);

// Dually Lorentzian: the normalized reversal at the componentwise maximal
// exponent (or any larger valid bound) is Lorentzian. Inhomogeneous input
// is simply not dually Lorentzian.
std::optional<CertWitness> dually_lorentzian_violation(const MultiPoly& h,
                                                       const std::optional<Exponent>& m = std::nullopt);
bool is_dually_lorentzian(const MultiPoly& h);

struct CheckSet {
  bool mconvex = false;
  bool dlc = false;
  bool lorentzian = false;
  bool dually_lorentzian = false;

  static CheckSet all() { return {true, true, true, true}; }
  static CheckSet support_only() { return {true, true, false, false}; }
};

// Aggregated verdict. Flags that were not requested stay unset. Every
// false flag has an entry in `witnesses`. The covolume-necessary verdict
// equals the dually_lorentzian flag.
struct CertReport {
  std::optional<bool> nonnegative;
  std::optional<bool> homogeneous;
  std::optional<bool> m_convex;
  std::optional<bool> dlc;
  std::optional<bool> lorentzian;
  std::optional<bool> dually_lorentzian;
  std::optional<int> degree;  // unset for the zero polynomial
  bool degenerate = false;    // zero polynomial: structural flags pass by convention
  std::map<std::string, CertWitness> witnesses;

  bool all_requested_pass() const;
};

CertReport certify_report(const MultiPoly& h, const CheckSet& checks = CheckSet::all());

}  // namespace covol
