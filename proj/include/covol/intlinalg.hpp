#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "covol/numeric.hpp"

namespace covol {

using IRow = std::vector<Int>;
using IMat = std::vector<IRow>;  // row-major
using QRow = std::vector<Rat>;
using QMat = std::vector<QRow>;

// Canonical row-style Hermite normal form of the lattice spanned by the
// rows: pivots positive, pivot columns strictly increasing, entries above
// each pivot reduced into [0, pivot). Zero rows are dropped, so two row
// lattices are equal iff their HNFs compare equal.
IMat hermite_normal_form(IMat rows);

// HNF together with a unimodular U such that U * rows = H (H keeps its
// zero rows at the bottom so U rows line up).
std::pair<IMat, IMat> hnf_with_transform(IMat rows);

// Basis (as rows) of the saturated lattice { x : a * x = 0 }; every row of
// a must have length ncols.
IMat kernel_basis(const IMat& a, int ncols);

// Basis (as rows) of { u : u * a = 0 } for a matrix given by its rows.
IMat left_kernel_basis(IMat a);

std::vector<Int> smith_invariant_factors(IMat a);

// U * A * V = D with U, V unimodular and D diagonal (d1 | d2 | ...).
// Only the column transform and its inverse are retained.
struct SmithColumnTransform {
  std::vector<Int> factors;  // nonzero invariant factors d1 | d2 | ...
  int rank = 0;
  IMat v;          // ncols x ncols
  IMat v_inverse;  // ncols x ncols
};
SmithColumnTransform smith_with_column_transform(IMat a, int ncols);

Int integer_det(IMat a);

// Unique solution of a square nonsingular system; throws on singular input.
QRow solve_square(QMat a, QRow b);

int lattice_rank(const IMat& rows);

// Membership of v in the row lattice with the given HNF basis.
bool in_row_lattice(const IMat& hnf, IRow v);

bool row_lattices_equal(const IMat& rows_a, const IMat& rows_b);

}  // namespace covol
