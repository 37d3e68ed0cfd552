#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covol/intlinalg.hpp"
#include "covol/multipoly.hpp"

namespace covol {

// Graded presentation S/I of a ring over Z: positive variable weights,
// homogeneous integer generators, and the socle degree d (the top graded
// piece expected to carry the degree map).
struct PresentedRing {
  std::vector<int> var_degrees;
  std::vector<MultiPoly> generators;
  int socle_degree = 0;

  int nvars() const { return static_cast<int>(var_degrees.size()); }
};

// Throws unless weights are positive and every generator is a nonzero
// weighted-homogeneous integer polynomial in the right variables.
void validate_ring(const PresentedRing& ring);

// Weighted total degree of a monomial.
int weighted_degree(const Exponent& e, const std::vector<int>& var_degrees);

// Polynomial of the inverse ring T = Z[y_1..y_n], y_i = x_i^{-1}.
struct InversePoly {
  MultiPoly poly;
};

// Contraction x^a . y^b = y^{b-a} when b >= a componentwise, else 0,
// extended bilinearly.
InversePoly contract(const MultiPoly& g, const InversePoly& big_g);

// Monomial exponents of the given weighted degree, canonical order.
std::vector<Exponent> weighted_monomials(const std::vector<int>& var_degrees, int degree);

// Degree-nu slice data: the monomial coordinates, the ideal slice as a
// canonical HNF row lattice, the quotient rank, and the Smith invariant
// factors of the inclusion (torsion witnesses when != 1).
struct GradedSlice {
  std::vector<Exponent> monomials;
  IMat ideal_hnf;
  int quotient_rank = 0;
  std::vector<Int> invariant_factors;
};
GradedSlice graded_basis(const PresentedRing& ring, int degree);

// Z-flatness of the quotient: every slice through the socle degree is
// torsion-free, and the slices just above it vanish (full ideal slices).
bool check_flat(const PresentedRing& ring);

// The degree map rho: R_d -> Z. Values are recorded on every monomial of
// weighted degree d; the sign is pinned by rho(positive_monomial) = +1.
struct DegreeMap {
  int socle_degree = 0;
  std::vector<int> var_degrees;
  std::map<Exponent, Int, GrlexGreater> values;

  Int at(const Exponent& e) const;
  // Linear extension to weighted-homogeneous degree-d integer polynomials.
  Int apply(const MultiPoly& f) const;
};

// Requires check_flat and a rank-one torsion-free top slice; throws when
// the positive monomial maps to zero or a non-unit multiple of the
// generator of R_d.
DegreeMap derive_degree_map(const PresentedRing& ring, const Exponent& positive_monomial);

// G_R = sum over weighted degree-d monomials of rho(x^alpha) y^alpha.
InversePoly dual_generator(const PresentedRing& ring, const DegreeMap& rho);

// Minimal generators (through the given degree) of the ideal of
// polynomials contracting G to zero, selected degree by degree modulo
// products with lower-degree kernel elements.
std::vector<MultiPoly> annihilator(const InversePoly& big_g, const std::vector<int>& var_degrees,
                                   int through);

struct PairVerification {
  bool ok = true;
  int failed_degree = -1;
  std::optional<MultiPoly> separating;  // element of one slice lattice, not the other

  explicit operator bool() const { return ok; }
};

// Slice-by-slice comparison of the ring's ideal with the annihilator of
// G, through degree d+1; also insists every ring generator contracts G to
// zero.
PairVerification verify_inverse_pair(const PresentedRing& ring, const InversePoly& big_g);

struct PoincareResult {
  bool ok = true;
  int failed_degree = -1;
  std::string reason;  // "rank" or "determinant" on failure
  Int det = 0;

  explicit operator bool() const { return ok; }
};

// Perfection of the pairing R_i x R_{d-i} -> Z, r1 (x) r2 -> rho(r1 r2):
// square pairing matrices of determinant +-1 in every complementary pair
// of degrees.
PoincareResult check_poincare(const PresentedRing& ring, const DegreeMap& rho);

}  // namespace covol
