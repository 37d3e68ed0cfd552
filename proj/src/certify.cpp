#include "covol/certify.hpp"

#include <algorithm>
#include <stdexcept>

#include "covol/intlinalg.hpp"

namespace covol {

Inertia signature(QMat a) {
  const int n = static_cast<int>(a.size());
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("inertia of non-square matrix");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (a[i][j] != a[j][i]) throw std::invalid_argument("inertia of non-symmetric matrix");
    }
  }
  auto symmetric_swap = [&](int k, int l) {
    if (k == l) return;
    std::swap(a[k], a[l]);
    for (int r = 0; r < n; ++r) std::swap(a[r][k], a[r][l]);
  };
  Inertia in;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      int diag = -1;
      for (int l = k + 1; l < n && diag < 0; ++l) {
        if (a[l][l] != 0) diag = l;
      }
      if (diag >= 0) {
        symmetric_swap(k, diag);
      } else {
        int oi = -1, oj = -1;
        for (int i = k; i < n && oi < 0; ++i) {
          for (int j = i + 1; j < n; ++j) {
            if (a[i][j] != 0) {
              oi = i;
              oj = j;
              break;
            }
          }
        }
        if (oi < 0) {
          in.n_zero += n - k;
          return in;
        }
        // zero diagonal everywhere: a row+column addition makes the
        // diagonal entry 2*a[oi][oj] != 0
        for (int c = k; c < n; ++c) a[oi][c] += a[oj][c];
        for (int r = k; r < n; ++r) a[r][oi] += a[r][oj];
        symmetric_swap(k, oi);
      }
    }
    const Rat pivot = a[k][k];
    if (pivot > 0) {
      ++in.n_plus;
    } else {
      ++in.n_minus;
    }
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rat f = a[i][k] / pivot;
      for (int j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return in;
}

namespace {

// Fast membership for exponent sets: exponents pack into bytes of a
// 128-bit key whenever p <= 16 and every exponent is < 256, which covers
// everything the surveys produce. The lattice moves q +- e_i -+ e_j that
// the scans perform never underflow a byte (the moved coordinate is
// always positive), so plain key arithmetic is safe there.
struct SupportSet {
  bool packed = false;
  int p = 0;
  std::vector<unsigned __int128> keys;        // sorted, when packed
  std::vector<Exponent> sorted_exponents;     // fallback membership

  static unsigned __int128 pack(const Exponent& e) {
    unsigned __int128 k = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      k |= static_cast<unsigned __int128>(static_cast<unsigned char>(e[i])) << (8 * i);
    }
    return k;
  }
  static unsigned __int128 unit(int i) { return static_cast<unsigned __int128>(1) << (8 * i); }

  explicit SupportSet(const std::vector<Exponent>& support) {
    p = support.empty() ? 0 : static_cast<int>(support[0].size());
    packed = p <= 16;
    if (packed) {
      for (const auto& e : support) {
        for (int x : e) {
          if (x > 255) {
            packed = false;
            break;
          }
        }
        if (!packed) break;
      }
    }
    if (packed) {
      keys.reserve(support.size());
      for (const auto& e : support) keys.push_back(pack(e));
      std::sort(keys.begin(), keys.end());
    } else {
      sorted_exponents = support;
      std::sort(sorted_exponents.begin(), sorted_exponents.end());
    }
  }

  bool contains_key(unsigned __int128 k) const {
    return std::binary_search(keys.begin(), keys.end(), k);
  }
  bool contains(const Exponent& e) const {
    if (packed) return contains_key(pack(e));
    return std::binary_search(sorted_exponents.begin(), sorted_exponents.end(), e);
  }
};

}  // namespace

std::optional<CertWitness> mconvex_violation(const std::vector<Exponent>& support) {
  if (support.size() <= 1) return std::nullopt;
  const int p = static_cast<int>(support[0].size());
  const int d = total_degree(support[0]);
  for (const auto& e : support) {
    if (total_degree(e) != d) {
      CertWitness w;
      w.kind = "mixed_degree_support";
      w.points = {support[0], e};
      return w;
    }
  }
  SupportSet set(support);
  for (const auto& q : support) {
    const unsigned __int128 kq = set.packed ? SupportSet::pack(q) : 0;
    for (const auto& r : support) {
      const unsigned __int128 kr = set.packed ? SupportSet::pack(r) : 0;
      for (int i = 0; i < p; ++i) {
        if (q[i] >= r[i]) continue;
        bool found = false;
        for (int j = 0; j < p && !found; ++j) {
          if (q[j] <= r[j]) continue;
          if (set.packed) {
            found = set.contains_key(kq + SupportSet::unit(i) - SupportSet::unit(j)) &&
                    set.contains_key(kr - SupportSet::unit(i) + SupportSet::unit(j));
          } else {
            Exponent q2 = q, r2 = r;
            ++q2[i], --q2[j];
            --r2[i], ++r2[j];
            found = set.contains(q2) && set.contains(r2);
          }
        }
        if (!found) {
          CertWitness w;
          w.kind = "exchange";
          w.points = {q, r};
          w.indices = {i + 1};
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

bool is_mconvex(const std::vector<Exponent>& support) { return !mconvex_violation(support).has_value(); }

std::optional<CertWitness> dlc_violation(const MultiPoly& h) {
  for (const auto& [e, c] : h.terms()) {
    if (c < 0) {
      CertWitness w;
      w.kind = "negative_coefficient";
      w.points = {e};
      return w;
    }
  }
  const int p = h.nvars();
  // With nonnegative coefficients, a violation needs both outer
  // coefficients nonzero, so it suffices to scan support points q and
  // test the midpoint of q and q - 2e_i + 2e_j.
  for (const auto& [q, cq] : h.terms()) {
    for (int i = 0; i < p; ++i) {
      if (q[i] < 2) continue;
      for (int j = 0; j < p; ++j) {
        if (j == i) continue;
        Exponent r = q;
        r[i] -= 2;
        r[j] += 2;
        Rat cr = h.coeff(r);
        if (cr == 0) continue;
        Exponent mid = q;
        mid[i] -= 1;
        mid[j] += 1;
        Rat cm = h.coeff(mid);
        if (cm * cm < cq * cr) {
          CertWitness w;
          w.kind = "dlc";
          w.points = {mid};
          w.indices = {i + 1, j + 1};
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

bool is_dlc(const MultiPoly& h) { return !dlc_violation(h).has_value(); }

std::optional<CertWitness> lorentzian_violation(const MultiPoly& h) {
  if (h.is_zero()) return std::nullopt;
  if (!h.is_homogeneous()) throw std::invalid_argument("Lorentzian test requires homogeneous input");
  for (const auto& [e, c] : h.terms()) {
    if (c < 0) {
      CertWitness w;
      w.kind = "negative_coefficient";
      w.points = {e};
      return w;
    }
  }
  if (auto w = mconvex_violation(h.support())) return w;
  const int d = h.degree();
  if (d <= 1) return std::nullopt;
  const int p = h.nvars();
  // Hessian of every (d-2)-fold derivative, one multiset at a time:
  // H[a][b] = a_{mu + e_a + e_b} * (mu + e_a + e_b)!
  for (const auto& mu : monomials_of_degree(p, d - 2)) {
    QMat hess(p, QRow(p, Rat(0)));
    Exponent kappa(p);
    for (int a = 0; a < p; ++a) {
      for (int b = a; b < p; ++b) {
        kappa = mu;
        ++kappa[a];
        ++kappa[b];
        Rat c = h.coeff(kappa);
        if (c == 0) continue;
        Rat value = c * Rat(exponent_factorial(kappa));
        hess[a][b] = value;
        hess[b][a] = value;
      }
    }
    Inertia in = signature(hess);
    if (in.n_plus > 1) {
      CertWitness w;
      w.kind = "hessian";
      w.derivative = mu;
      w.n_plus = in.n_plus;
      w.form = std::move(hess);
      return w;
    }
  }
  return std::nullopt;
}

bool is_lorentzian(const MultiPoly& h) { return !lorentzian_violation(h).has_value(); }

std::optional<CertWitness> dually_lorentzian_violation(const MultiPoly& h,
                                                       const std::optional<Exponent>& m) {
  if (h.is_zero()) return std::nullopt;
  if (!h.is_homogeneous()) {
    CertWitness w;
    w.kind = "inhomogeneous";
    w.points = {h.terms().begin()->first, std::prev(h.terms().end())->first};
    return w;
  }
  Exponent bound = h.max_exponents();
  if (m) {
    for (int i = 0; i < h.nvars(); ++i) {
      if ((*m)[i] < bound[i]) throw std::invalid_argument("reversal bound too small");
    }
    bound = *m;
  }
  return lorentzian_violation(normalize(reverse(h, bound)));
}

bool is_dually_lorentzian(const MultiPoly& h) { return !dually_lorentzian_violation(h).has_value(); }

bool CertReport::all_requested_pass() const {
  for (const auto& flag : {nonnegative, homogeneous, m_convex, dlc, lorentzian, dually_lorentzian}) {
    if (flag.has_value() && !*flag) return false;
  }
  return true;
}

CertReport certify_report(const MultiPoly& h, const CheckSet& checks) {
  CertReport rep;
  if (h.is_zero()) {
    rep.degenerate = true;
    rep.nonnegative = true;
    rep.homogeneous = true;
    if (checks.mconvex) rep.m_convex = true;
    if (checks.dlc) rep.dlc = true;
    if (checks.lorentzian) rep.lorentzian = true;
    if (checks.dually_lorentzian) rep.dually_lorentzian = true;
    return rep;
  }
  rep.degree = h.degree();
  rep.homogeneous = h.is_homogeneous();
  rep.nonnegative = true;
  for (const auto& [e, c] : h.terms()) {
    if (c < 0) {
      rep.nonnegative = false;
      CertWitness w;
      w.kind = "negative_coefficient";
      w.points = {e};
      rep.witnesses.emplace("nonnegative", std::move(w));
      break;
    }
  }
  const bool need_support = checks.mconvex || checks.dually_lorentzian;
  if (need_support) {
    auto w = mconvex_violation(h.support());
    rep.m_convex = !w.has_value();
    if (w) rep.witnesses.emplace("m_convex", std::move(*w));
  }
  if (checks.dlc || checks.dually_lorentzian) {
    auto w = dlc_violation(h);
    rep.dlc = !w.has_value();
    if (w) rep.witnesses.emplace("dlc", std::move(*w));
  }
  if (checks.lorentzian) {
    if (!*rep.homogeneous) {
      rep.lorentzian = false;
      CertWitness w;
      w.kind = "inhomogeneous";
      w.points = {h.terms().begin()->first, std::prev(h.terms().end())->first};
      rep.witnesses.emplace("lorentzian", std::move(w));
    } else {
      auto w = lorentzian_violation(h);
      rep.lorentzian = !w.has_value();
      if (w) rep.witnesses.emplace("lorentzian", std::move(*w));
    }
  }
  if (checks.dually_lorentzian) {
    auto w = dually_lorentzian_violation(h);
    rep.dually_lorentzian = !w.has_value();
    if (w) rep.witnesses.emplace("dually_lorentzian", std::move(*w));
    if (*rep.dually_lorentzian && (!*rep.m_convex || !*rep.dlc)) {
      // dually Lorentzian polynomials have M-convex support and are
      // discretely log-concave; a breach here is a library defect
      throw std::logic_error("certification cross-check failed: dually Lorentzian without M-convex/DLC");
    }
  }
  return rep;
}

}  // namespace covol
