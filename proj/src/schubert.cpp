#include "covol/schubert.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "covol/intlinalg.hpp"

namespace covol {

MultiPoly divided_difference(const MultiPoly& f, int i) {
  if (i < 1 || i + 1 > f.nvars()) throw std::invalid_argument("divided difference index out of range");
  const int x = i - 1, y = i;
  MultiPoly r(f.nvars());
  Exponent e2;
  for (const auto& [e, c] : f.terms()) {
    const int a = e[x], b = e[y];
    if (a == b) continue;
    e2 = e;
    if (a > b) {
      // (x^a y^b - x^b y^a)/(x-y) = sum_j x^(a-1-j) y^(b+j)
      for (int j = 0; j < a - b; ++j) {
        e2[x] = a - 1 - j;
        e2[y] = b + j;
        r.add_term(e2, c);
      }
    } else {
      for (int j = 0; j < b - a; ++j) {
        e2[x] = b - 1 - j;
        e2[y] = a + j;
        r.add_term(e2, -c);
      }
    }
  }
  return r;
}

namespace {

MultiPoly initial_schubert(int p, bool dbl) {
  if (!dbl) {
    Exponent e(p, 0);
    for (int i = 0; i < p; ++i) e[i] = p - 1 - i;
    return MultiPoly::monomial(std::move(e), Rat(1));
  }
  MultiPoly f = MultiPoly::constant(2 * p, Rat(1));
  for (int i = 1; i <= p; ++i) {
    for (int j = 1; i + j <= p; ++j) {
      f = f * (MultiPoly::variable(2 * p, i - 1) - MultiPoly::variable(2 * p, p + j - 1));
    }
  }
  return f;
}

MultiPoly compute_schubert(SchubertCache& cache, const Permutation& w, bool dbl) {
  const int p = w.size();
  if (w == Permutation::longest(p)) return initial_schubert(p, dbl);
  // smallest ascent: S_w = d_i S_{w s_i} with l(w s_i) = l(w) + 1
  int i = 1;
  while (w(i) > w(i + 1)) ++i;
  return divided_difference(cache.get(w.right_multiply_transposition(i), dbl), i);
}

}  // namespace

MultiPoly SchubertCache::get(const Permutation& w, bool dbl) {
  const std::pair<std::vector<int>, bool> key{w.word(), dbl};
  {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;
  }
  MultiPoly value = compute_schubert(*this, w, dbl);
  std::unique_lock lock(mutex_);
  return table_.emplace(key, std::move(value)).first->second;
}

SchubertCache& global_schubert_cache() {
  static SchubertCache cache;
  return cache;
}

MultiPoly schubert_polynomial(const Permutation& w, bool dbl) {
  return global_schubert_cache().get(w, dbl);
}

namespace {

// cells (i, j) of the staircase i + j <= p, in reading order: rows from
// the top, right to left within a row
std::vector<std::pair<int, int>> staircase_cells(int p) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < p; ++i) {
    for (int j = p - i; j >= 1; --j) cells.emplace_back(i, j);
  }
  return cells;
}

}  // namespace

MultiPoly pipe_dream_schubert(const Permutation& w, bool dbl, int max_p) {
  const int p = w.size();
  if (p > max_p) throw std::invalid_argument("pipe dream bound exceeded");
  const int len = w.length();
  const int nvars = dbl ? 2 * p : p;
  MultiPoly total(nvars);
  auto cells = staircase_cells(p);
  const int ncells = static_cast<int>(cells.size());
  std::vector<int> chosen;
  std::vector<int> word;

  // enumerate size-len subsets in reading order
  auto emit = [&]() {
    // the word letters are i + j - 1; check it is a reduced word for w
    Permutation v = Permutation::identity(p);
    for (int idx : chosen) {
      int k = cells[idx].first + cells[idx].second - 1;
      if (k >= p || v(k) > v(k + 1)) return;  // crossing twice: not reduced
      v = v.right_multiply_transposition(k);
    }
    if (v != w) return;
    if (!dbl) {
      Exponent e(p, 0);
      for (int idx : chosen) e[cells[idx].first - 1] += 1;
      total.add_term(e, Rat(1));
    } else {
      MultiPoly weight = MultiPoly::constant(nvars, Rat(1));
      for (int idx : chosen) {
        auto [ci, cj] = cells[idx];
        weight = weight * (MultiPoly::variable(nvars, ci - 1) - MultiPoly::variable(nvars, p + cj - 1));
      }
      total = total + weight;
    }
  };

  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(chosen.size()) == len) {
      emit();
      return;
    }
    int need = len - static_cast<int>(chosen.size());
    for (int idx = start; idx + need <= ncells; ++idx) {
      chosen.push_back(idx);
      rec(idx + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return total;
}

namespace {

// move the s-block exponents through the reversal s_j -> s_{p+1-j}
MultiPoly reverse_s_alphabet(const MultiPoly& f, int p) {
  TermMap terms;
  for (const auto& [e, c] : f.terms()) {
    Exponent e2 = e;
    for (int k = 0; k < p; ++k) e2[p + k] = e[p + (p - 1 - k)];
    terms.emplace(std::move(e2), c);
  }
  return MultiPoly(f.nvars(), std::move(terms));
}

}  // namespace

MultiPoly richardson_polynomial(const Permutation& w, const Permutation& u, bool dbl) {
  if (w.size() != u.size()) throw std::invalid_argument("permutation size mismatch");
  if (!bruhat_leq(u, w)) {
    throw std::invalid_argument("incomparable pair: the Richardson variety is empty");
  }
  const int p = w.size();
  Permutation w0w = compose(Permutation::longest(p), w);
  if (!dbl) return schubert_polynomial(u, false) * schubert_polynomial(w0w, false);
  return schubert_polynomial(u, true) * reverse_s_alphabet(schubert_polynomial(w0w, true), p);
}

namespace {

MultiPoly elementary_symmetric(int n, int j) {
  MultiPoly e(n);
  std::vector<int> subset;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(subset.size()) == j) {
      Exponent exp(n, 0);
      for (int v : subset) exp[v] = 1;
      e.add_term(exp, Rat(1));
      return;
    }
    int need = j - static_cast<int>(subset.size());
    for (int v = start; v + need <= n; ++v) {
      subset.push_back(v);
      rec(v + 1);
      subset.pop_back();
    }
  };
  rec(0);
  return e;
}

// degree-k slice of f as a coordinate vector over `monomials`
QRow slice_vector(const MultiPoly& f, const std::vector<Exponent>& monomials,
                  const std::map<Exponent, int, GrlexGreater>& index, int k) {
  QRow v(monomials.size(), Rat(0));
  for (const auto& [e, c] : f.terms()) {
    if (total_degree(e) != k) continue;
    v[index.at(e)] = c;
  }
  return v;
}

}  // namespace

MultiPoly normal_form(const MultiPoly& f, int n) {
  if (f.nvars() != n) throw std::invalid_argument("variable count mismatch");
  std::vector<MultiPoly> elem;
  for (int j = 1; j <= n; ++j) elem.push_back(elementary_symmetric(n, j));

  MultiPoly result(n);
  std::vector<int> degrees;
  for (const auto& [e, c] : f.terms()) {
    int d = total_degree(e);
    if (degrees.empty() || degrees.back() != d) degrees.push_back(d);
  }
  for (int k : degrees) {
    auto monomials = monomials_of_degree(n, k);
    std::map<Exponent, int, GrlexGreater> index;
    for (int m = 0; m < static_cast<int>(monomials.size()); ++m) index.emplace(monomials[m], m);

    // span of { m * e_j : deg m = k - j } inside the degree-k slice
    IMat ideal_rows;
    for (int j = 1; j <= std::min(n, k); ++j) {
      for (const auto& me : monomials_of_degree(n, k - j)) {
        IRow row(monomials.size(), 0);
        for (const auto& [ee, cc] : elem[j - 1].terms()) {
          Exponent prod(n);
          for (int v = 0; v < n; ++v) prod[v] = me[v] + ee[v];
          row[index.at(prod)] = int_numerator(cc);
        }
        ideal_rows.push_back(std::move(row));
      }
    }
    IMat ideal_basis = hermite_normal_form(std::move(ideal_rows));

    std::vector<int> basis_cols;  // monomials with a_i <= n - i (1-based)
    for (int m = 0; m < static_cast<int>(monomials.size()); ++m) {
      bool in_basis = true;
      for (int v = 0; v < n && in_basis; ++v) in_basis = monomials[m][v] <= n - 1 - v;
      if (in_basis) basis_cols.push_back(m);
    }
    if (ideal_basis.size() + basis_cols.size() != monomials.size()) {
      throw std::logic_error("coinvariant slice dimensions are inconsistent");
    }

    // Express the slice of f over the rows [ideal basis; basis monomials]:
    // the square system is nonsingular because the slice splits as a
    // direct sum, so the basis coordinates are uniquely determined.
    const int msize = static_cast<int>(monomials.size());
    QMat qt(msize, QRow(msize, Rat(0)));  // transposed system
    for (int r = 0; r < static_cast<int>(ideal_basis.size()); ++r) {
      for (int cidx = 0; cidx < msize; ++cidx) qt[cidx][r] = Rat(ideal_basis[r][cidx]);
    }
    for (int b = 0; b < static_cast<int>(basis_cols.size()); ++b) {
      qt[basis_cols[b]][ideal_basis.size() + b] = 1;
    }
    QRow rhs = slice_vector(f, monomials, index, k);
    QRow y = solve_square(std::move(qt), std::move(rhs));
    for (int b = 0; b < static_cast<int>(basis_cols.size()); ++b) {
      const Rat& c = y[ideal_basis.size() + b];
      if (c == 0) continue;
      result.add_term(monomials[basis_cols[b]], c);
    }
  }
  return result;
}

MultiPoly skew_schubert(const Permutation& w, const Permutation& u) {
  return normal_form(richardson_polynomial(w, u, false), w.size());
}

}  // namespace covol
