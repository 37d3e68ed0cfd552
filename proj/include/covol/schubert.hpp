#pragma once

#include <map>
#include <shared_mutex>

#include "covol/multipoly.hpp"
#include "covol/permutation.hpp"

namespace covol {

// i-th divided difference (1-based): (f - f with t_i, t_{i+1} swapped)
// divided by (t_i - t_{i+1}). The quotient is computed in closed form per
// term; it is always a polynomial because the numerator is antisymmetric
// in t_i, t_{i+1}.
MultiPoly divided_difference(const MultiPoly& f, int i);

// Memoized table of Schubert polynomials, keyed by (one-line word, double
// flag). Reads are concurrent; newly computed entries are published under
// an exclusive lock.
class SchubertCache {
 public:
  MultiPoly get(const Permutation& w, bool dbl);

 private:
  std::map<std::pair<std::vector<int>, bool>, MultiPoly> table_;
  std::shared_mutex mutex_;
};

SchubertCache& global_schubert_cache();

// Schubert polynomial of w in S_p. Single: p variables t1..tp, from the
// initial monomial prod t_i^{p-i}. Double: 2p variables t1..tp,s1..sp,
// from prod_{i+j<=p} (t_i - s_j); divided differences act on t only.
MultiPoly schubert_polynomial(const Permutation& w, bool dbl = false);

// Independent combinatorial oracle: sum over reduced pipe dreams of w of
// prod t_i (single) or prod (t_i - s_j) (double). Used for cross-checks.
MultiPoly pipe_dream_schubert(const Permutation& w, bool dbl = false, int max_p = 7);

// Double Richardson polynomial S_u(t,s) * S_{w0 w}(t,s') with s' the
// reversed s-alphabet; the single version sets s = 0. Requires u <= w in
// Bruhat order (an incomparable pair has no Richardson variety).
MultiPoly richardson_polynomial(const Permutation& w, const Permutation& u, bool dbl = false);

// Unique representative of f modulo the elementary symmetric ideal
// (e1,...,en), written in the monomial basis { t^a : a_i <= n-i },
// computed degree by degree with exact linear algebra.
MultiPoly normal_form(const MultiPoly& f, int n);

// normal_form of the single Richardson polynomial of (w, u).
MultiPoly skew_schubert(const Permutation& w, const Permutation& u);

}  // namespace covol
