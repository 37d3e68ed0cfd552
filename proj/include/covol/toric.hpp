#pragma once

#include <map>
#include <vector>

#include "covol/macaulay.hpp"
#include "covol/multipoly.hpp"

namespace covol {

// Smooth complete fan in dimension <= 3: primitive rays and maximal cones
// given as ray index sets (0-based), each a lattice basis. Completeness is
// verified exactly in dimensions 1 and 2 (angular order) and by facet
// closure in dimension 3.
struct Fan {
  int dim = 0;
  std::vector<std::vector<int>> rays;
  std::vector<std::vector<int>> max_cones;

  int nrays() const { return static_cast<int>(rays.size()); }
};

void validate_fan(const Fan& fan);

// Torus-invariant divisor sum a_i D_i as its coefficient vector.
using ToricDivisor = std::vector<int>;

// Polytope in dimension <= 3 held by its vertex list; construction keeps
// exactly the extreme points of the hull of the input points.
struct LatticePolytope {
  int dim = 0;
  std::vector<QRow> vertices;
};

LatticePolytope make_polytope(int dim, std::vector<QRow> points);

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope scale_polytope(const LatticePolytope& p, int factor);

// Euclidean volume (unit hypercube = 1) by exact hull triangulation;
// lower-dimensional polytopes have volume zero.
Rat volume(const LatticePolytope& p);

// Cohomology presentation: one degree-one variable per ray, Stanley-
// Reisner monomials of the minimal non-faces plus the dim linear forms
// from the dual lattice; socle degree = dim.
PresentedRing jd_presentation(const Fan& fan);

// Cartier data: per maximal cone, the unique m with <m, u_i> = -a_i on
// the cone's rays (integral by smoothness).
std::map<int, std::vector<Int>> cartier_data(const Fan& fan, const ToricDivisor& divisor);

// Nef test: the Cartier data satisfies every support inequality globally.
bool is_nef(const Fan& fan, const ToricDivisor& divisor);

// Polytope of a nef divisor: the vertices are the Cartier data.
LatticePolytope divisor_polytope(const Fan& fan, const ToricDivisor& divisor);

// Mixed volumes MV_alpha for all |alpha| = d, calibrated so that MV_alpha
// equals the intersection number of the corresponding divisor powers:
// MV_alpha = alpha! * [y^alpha] Vol(y_1 P_1 + ... + y_n P_n). Exact
// interpolation from the integer grid {0..d}^n.
std::map<Exponent, Rat> mixed_volumes(const std::vector<LatticePolytope>& polytopes, int d);

// Dual generator through mixed volumes of the divisors' polytopes; every
// divisor must be nef.
InversePoly toric_dual_generator(const Fan& fan, const std::vector<ToricDivisor>& divisors);

// Dual generator through the degree map on the Jurkiewicz-Danilov
// presentation, with the point class of a maximal cone as the positive
// monomial.
InversePoly jd_dual_generator(const Fan& fan);

// Keeps terms supported on the chosen variables and renumbers them.
MultiPoly restrict_vars(const MultiPoly& f, const std::vector<int>& vars);

// d! * N(G_R); with a reduced basis, computed on the sub-presentation in
// the chosen divisor variables.
MultiPoly volume_polynomial(const Fan& fan, const std::vector<int>& reduced_basis = {});

}  // namespace covol
