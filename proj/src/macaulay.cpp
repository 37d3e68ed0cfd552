#include "covol/macaulay.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace covol {

int weighted_degree(const Exponent& e, const std::vector<int>& var_degrees) {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * var_degrees[i];
  return d;
}

namespace {

// weighted degree of a homogeneous polynomial; -1 for zero, throws on
// inhomogeneous input
int poly_weighted_degree(const MultiPoly& f, const std::vector<int>& var_degrees) {
  int d = -1;
  for (const auto& [e, c] : f.terms()) {
    int w = weighted_degree(e, var_degrees);
    if (d < 0) {
      d = w;
    } else if (w != d) {
      throw std::invalid_argument("polynomial is not weighted-homogeneous");
    }
  }
  return d;
}

}  // namespace

void validate_ring(const PresentedRing& ring) {
  for (int d : ring.var_degrees) {
    if (d <= 0) throw std::invalid_argument("variable weights must be positive");
  }
  if (ring.socle_degree <= 0) throw std::invalid_argument("socle degree must be positive");
  for (const auto& g : ring.generators) {
    if (g.nvars() != ring.nvars()) throw std::invalid_argument("generator variable count mismatch");
    if (g.is_zero()) throw std::invalid_argument("zero generator");
    if (!g.is_integral()) throw std::invalid_argument("generators must have integer coefficients");
    if (poly_weighted_degree(g, ring.var_degrees) == 0) {
      throw std::invalid_argument("constant generator gives the unit ideal");
    }
  }
}

InversePoly contract(const MultiPoly& g, const InversePoly& big_g) {
  if (g.nvars() != big_g.poly.nvars()) throw std::invalid_argument("variable count mismatch");
  const int n = g.nvars();
  MultiPoly out(n);
  Exponent diff(n);
  for (const auto& [a, ca] : g.terms()) {
    for (const auto& [b, cb] : big_g.poly.terms()) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        diff[i] = b[i] - a[i];
        ok = diff[i] >= 0;
      }
      if (ok) out.add_term(diff, ca * cb);
    }
  }
  return InversePoly{std::move(out)};
}

std::vector<Exponent> weighted_monomials(const std::vector<int>& var_degrees, int degree) {
  const int n = static_cast<int>(var_degrees.size());
  std::vector<Exponent> out;
  if (degree < 0) return out;
  Exponent e(n, 0);
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == n) {
      if (remaining == 0) out.push_back(e);
      return;
    }
    const int max_pow = remaining / var_degrees[var];
    for (int k = max_pow; k >= 0; --k) {
      e[var] = k;
      rec(var + 1, remaining - k * var_degrees[var]);
    }
    e[var] = 0;
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(), GrlexGreater{});
  return out;
}

GradedSlice graded_basis(const PresentedRing& ring, int degree) {
  validate_ring(ring);
  GradedSlice slice;
  slice.monomials = weighted_monomials(ring.var_degrees, degree);
  std::map<Exponent, int, GrlexGreater> index;
  for (int i = 0; i < static_cast<int>(slice.monomials.size()); ++i) {
    index.emplace(slice.monomials[i], i);
  }
  IMat rows;
  for (const auto& g : ring.generators) {
    const int gd = poly_weighted_degree(g, ring.var_degrees);
    if (gd > degree) continue;
    for (const auto& m : weighted_monomials(ring.var_degrees, degree - gd)) {
      IRow row(slice.monomials.size(), 0);
      for (const auto& [e, c] : g.terms()) {
        Exponent prod(e.size());
        for (std::size_t v = 0; v < e.size(); ++v) prod[v] = e[v] + m[v];
        row[index.at(prod)] += int_numerator(c);
      }
      rows.push_back(std::move(row));
    }
  }
  slice.ideal_hnf = hermite_normal_form(rows);
  slice.invariant_factors = smith_invariant_factors(slice.ideal_hnf);
  slice.quotient_rank =
      static_cast<int>(slice.monomials.size()) - static_cast<int>(slice.ideal_hnf.size());
  return slice;
}

bool check_flat(const PresentedRing& ring) {
  validate_ring(ring);
  const int d = ring.socle_degree;
  for (int nu = 0; nu <= d; ++nu) {
    for (const auto& f : graded_basis(ring, nu).invariant_factors) {
      if (f != 1) return false;
    }
  }
  int window = 1;
  for (int w : ring.var_degrees) window = std::max(window, w);
  for (const auto& g : ring.generators) {
    window = std::max(window, poly_weighted_degree(g, ring.var_degrees));
  }
  for (int nu = d + 1; nu <= d + window; ++nu) {
    if (graded_basis(ring, nu).quotient_rank != 0) return false;
  }
  return true;
}

Int DegreeMap::at(const Exponent& e) const {
  auto it = values.find(e);
  if (it == values.end()) throw std::invalid_argument("monomial is not of the socle degree");
  return it->second;
}

Int DegreeMap::apply(const MultiPoly& f) const {
  Int acc = 0;
  for (const auto& [e, c] : f.terms()) {
    if (!is_integer(c)) throw std::invalid_argument("degree map needs integer coefficients");
    acc += int_numerator(c) * at(e);
  }
  return acc;
}

DegreeMap derive_degree_map(const PresentedRing& ring, const Exponent& positive_monomial) {
  if (!check_flat(ring)) throw std::invalid_argument("ring is not flat over Z");
  const int d = ring.socle_degree;
  GradedSlice top = graded_basis(ring, d);
  if (top.quotient_rank != 1) {
    throw std::invalid_argument("top graded piece does not have rank one");
  }
  // the degree map is the primitive functional killing the ideal slice
  IMat kernel = kernel_basis(top.ideal_hnf, static_cast<int>(top.monomials.size()));
  if (kernel.size() != 1) throw std::logic_error("degree functional is not one-dimensional");
  const IRow& lambda = kernel[0];

  int pos_index = -1;
  for (int i = 0; i < static_cast<int>(top.monomials.size()); ++i) {
    if (top.monomials[i] == positive_monomial) pos_index = i;
  }
  if (pos_index < 0) throw std::invalid_argument("positive monomial is not of the socle degree");
  Int s = lambda[pos_index];
  if (s != 1 && s != -1) {
    throw std::invalid_argument("positive monomial does not generate the top graded piece");
  }
  DegreeMap rho;
  rho.socle_degree = d;
  rho.var_degrees = ring.var_degrees;
  for (int i = 0; i < static_cast<int>(top.monomials.size()); ++i) {
    rho.values.emplace(top.monomials[i], s * lambda[i]);
  }
  return rho;
}

InversePoly dual_generator(const PresentedRing& ring, const DegreeMap& rho) {
  MultiPoly g(ring.nvars());
  for (const auto& [e, value] : rho.values) {
    if (value != 0) g.add_term(e, Rat(value));
  }
  return InversePoly{std::move(g)};
}

namespace {

// slice of the contraction kernel of G in the given degree, as rows over
// the monomials of that degree
IMat contraction_kernel_slice(const InversePoly& big_g, const std::vector<int>& var_degrees,
                              int degree, const std::vector<Exponent>& monomials) {
  const int gdeg = poly_weighted_degree(big_g.poly, var_degrees);
  auto targets = weighted_monomials(var_degrees, gdeg - degree);
  std::map<Exponent, int, GrlexGreater> tindex;
  for (int i = 0; i < static_cast<int>(targets.size()); ++i) tindex.emplace(targets[i], i);
  IMat a(monomials.size(), IRow(targets.size(), 0));
  for (int r = 0; r < static_cast<int>(monomials.size()); ++r) {
    InversePoly image = contract(MultiPoly::monomial(monomials[r], Rat(1)), big_g);
    for (const auto& [e, c] : image.poly.terms()) {
      a[r][tindex.at(e)] = int_numerator(c);
    }
  }
  return left_kernel_basis(std::move(a));
}

}  // namespace

std::vector<MultiPoly> annihilator(const InversePoly& big_g, const std::vector<int>& var_degrees,
                                   int through) {
  const int n = static_cast<int>(var_degrees.size());
  if (big_g.poly.nvars() != n) throw std::invalid_argument("variable count mismatch");
  if (!big_g.poly.is_integral()) throw std::invalid_argument("inverse polynomial must be integral");
  const int d = poly_weighted_degree(big_g.poly, var_degrees);
  if (d < 0) throw std::invalid_argument("zero inverse polynomial");
  if (through < d + 1) through = d + 1;

  std::vector<MultiPoly> gens;
  for (int nu = 0; nu <= through; ++nu) {
    auto monomials = weighted_monomials(var_degrees, nu);
    if (monomials.empty()) continue;
    std::map<Exponent, int, GrlexGreater> index;
    for (int i = 0; i < static_cast<int>(monomials.size()); ++i) index.emplace(monomials[i], i);
    // slice of the ideal generated so far
    IMat sofar;
    for (const auto& g : gens) {
      const int gd = poly_weighted_degree(g, var_degrees);
      for (const auto& m : weighted_monomials(var_degrees, nu - gd)) {
        IRow row(monomials.size(), 0);
        for (const auto& [e, c] : g.terms()) {
          Exponent prod(e.size());
          for (std::size_t v = 0; v < e.size(); ++v) prod[v] = e[v] + m[v];
          row[index.at(prod)] += int_numerator(c);
        }
        sofar.push_back(std::move(row));
      }
    }
    IMat sofar_hnf = hermite_normal_form(std::move(sofar));
    for (const auto& k : contraction_kernel_slice(big_g, var_degrees, nu, monomials)) {
      if (in_row_lattice(sofar_hnf, k)) continue;
      MultiPoly g(n);
      for (int i = 0; i < static_cast<int>(monomials.size()); ++i) {
        if (k[i] != 0) g.add_term(monomials[i], Rat(k[i]));
      }
      gens.push_back(std::move(g));
      sofar_hnf.push_back(k);
      sofar_hnf = hermite_normal_form(std::move(sofar_hnf));
    }
  }
  return gens;
}

PairVerification verify_inverse_pair(const PresentedRing& ring, const InversePoly& big_g) {
  validate_ring(ring);
  if (big_g.poly.nvars() != ring.nvars()) {
    throw std::invalid_argument("variable count mismatch between ring and inverse polynomial");
  }
  PairVerification result;
  const int d = ring.socle_degree;
  for (int nu = 0; nu <= d + 1; ++nu) {
    GradedSlice slice = graded_basis(ring, nu);
    IMat kernel = contraction_kernel_slice(big_g, ring.var_degrees, nu, slice.monomials);
    if (kernel == slice.ideal_hnf) continue;
    result.ok = false;
    result.failed_degree = nu;
    // separating vector: a basis row of one lattice outside the other
    const IMat* from = nullptr;
    const IMat* against = nullptr;
    for (const auto& row : kernel) {
      if (!in_row_lattice(slice.ideal_hnf, row)) {
        from = &kernel;
        against = &slice.ideal_hnf;
        break;
      }
    }
    if (!from) {
      from = &slice.ideal_hnf;
      against = &kernel;
    }
    for (const auto& row : *from) {
      if (!in_row_lattice(*against, row)) {
        MultiPoly sep(ring.nvars());
        for (int i = 0; i < static_cast<int>(slice.monomials.size()); ++i) {
          if (row[i] != 0) sep.add_term(slice.monomials[i], Rat(row[i]));
        }
        result.separating = std::move(sep);
        break;
      }
    }
    return result;
  }
  // generators above the compared window must still contract G to zero
  for (const auto& g : ring.generators) {
    if (!contract(g, big_g).poly.is_zero()) {
      result.ok = false;
      result.failed_degree = poly_weighted_degree(g, ring.var_degrees);
      result.separating = g;
      return result;
    }
  }
  return result;
}

namespace {

// representatives of a Z-basis of the free quotient Z^M / L
std::vector<MultiPoly> quotient_basis(const GradedSlice& slice, int nvars) {
  const int m = static_cast<int>(slice.monomials.size());
  auto smith = smith_with_column_transform(slice.ideal_hnf, m);
  std::vector<MultiPoly> basis;
  for (int r = smith.rank; r < m; ++r) {
    MultiPoly b(nvars);
    for (int j = 0; j < m; ++j) {
      if (smith.v_inverse[r][j] != 0) b.add_term(slice.monomials[j], Rat(smith.v_inverse[r][j]));
    }
    basis.push_back(std::move(b));
  }
  return basis;
}

}  // namespace

PoincareResult check_poincare(const PresentedRing& ring, const DegreeMap& rho) {
  PoincareResult result;
  const int d = ring.socle_degree;
  for (int i = 0; i + i <= d; ++i) {
    GradedSlice low = graded_basis(ring, i);
    GradedSlice high = graded_basis(ring, d - i);
    auto lo_basis = quotient_basis(low, ring.nvars());
    auto hi_basis = quotient_basis(high, ring.nvars());
    if (lo_basis.size() != hi_basis.size()) {
      result.ok = false;
      result.failed_degree = i;
      result.reason = "rank";
      return result;
    }
    const int r = static_cast<int>(lo_basis.size());
    IMat pairing(r, IRow(r, 0));
    for (int a = 0; a < r; ++a) {
      for (int b = 0; b < r; ++b) pairing[a][b] = rho.apply(lo_basis[a] * hi_basis[b]);
    }
    Int det = integer_det(pairing);
    if (det != 1 && det != -1) {
      result.ok = false;
      result.failed_degree = i;
      result.reason = "determinant";
      result.det = det;
      return result;
    }
  }
  return result;
}

}  // namespace covol
