#include "covol/intlinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace covol {

namespace {

// floor division, used to reduce entries above HNF pivots into [0, pivot)
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void row_submul(IRow& target, const IRow& src, const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= q * src[j];
}

// Shared HNF worker; transform rows (if present) mirror every operation.
void hnf_in_place(IMat& a, IMat* u) {
  const int nrows = static_cast<int>(a.size());
  if (nrows == 0) return;
  const int ncols = static_cast<int>(a[0].size());
  int r = 0;
  for (int col = 0; col < ncols && r < nrows; ++col) {
    // gcd elimination below row r in this column
    while (true) {
      int best = -1;
      for (int i = r; i < nrows; ++i) {
        if (a[i][col] != 0 && (best < 0 || abs(a[i][col]) < abs(a[best][col]))) best = i;
      }
      if (best < 0) break;
      std::swap(a[r], a[best]);
      if (u) std::swap((*u)[r], (*u)[best]);
      bool clean = true;
      for (int i = r + 1; i < nrows; ++i) {
        if (a[i][col] == 0) continue;
        Int q = a[i][col] / a[r][col];
        row_submul(a[i], a[r], q);
        if (u) row_submul((*u)[i], (*u)[r], q);
        if (a[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[r][col] == 0) continue;
    if (a[r][col] < 0) {
      for (auto& x : a[r]) x = -x;
      if (u) {
        for (auto& x : (*u)[r]) x = -x;
      }
    }
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(a[i][col], a[r][col]);
      row_submul(a[i], a[r], q);
      if (u) row_submul((*u)[i], (*u)[r], q);
    }
    ++r;
  }
}

bool is_zero_row(const IRow& row) {
  for (const Int& x : row) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace

IMat hermite_normal_form(IMat rows) {
  hnf_in_place(rows, nullptr);
  while (!rows.empty() && is_zero_row(rows.back())) rows.pop_back();
  return rows;
}

std::pair<IMat, IMat> hnf_with_transform(IMat rows) {
  const int n = static_cast<int>(rows.size());
  IMat u(n, IRow(n, 0));
  for (int i = 0; i < n; ++i) u[i][i] = 1;
  hnf_in_place(rows, &u);
  return {std::move(rows), std::move(u)};
}

IMat left_kernel_basis(IMat a) {
  // rows of the HNF transform facing zero rows of H span the saturated
  // left kernel lattice
  auto [h, u] = hnf_with_transform(std::move(a));
  IMat kernel;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (is_zero_row(h[i])) kernel.push_back(u[i]);
  }
  return hermite_normal_form(std::move(kernel));
}

IMat kernel_basis(const IMat& a, int ncols) {
  IMat at(ncols, IRow(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (static_cast<int>(a[i].size()) != ncols) {
      throw std::invalid_argument("kernel_basis: row length does not match ncols");
    }
    for (int j = 0; j < ncols; ++j) at[j][i] = a[i][j];
  }
  return left_kernel_basis(std::move(at));
}

namespace {

struct SmithState {
  IMat a;
  IMat v;   // column transform accumulated on the right
  int nrows;
  int ncols;

  void swap_cols(int c1, int c2) {
    if (c1 == c2) return;
    for (int i = 0; i < nrows; ++i) std::swap(a[i][c1], a[i][c2]);
    for (auto& row : v) std::swap(row[c1], row[c2]);
  }
  void negate_col(int c) {
    for (int i = 0; i < nrows; ++i) a[i][c] = -a[i][c];
    for (auto& row : v) row[c] = -row[c];
  }
  // col c1 -= q * col c2
  void submul_col(int c1, int c2, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < nrows; ++i) a[i][c1] -= q * a[i][c2];
    for (auto& row : v) row[c1] -= q * row[c2];
  }
};

void smith_in_place(SmithState& s, std::vector<Int>& factors) {
  int k = 0;
  const int n = std::min(s.nrows, s.ncols);
  while (k < n) {
    // locate the minimal nonzero entry in the trailing block
    int pi = -1, pj = -1;
    for (int i = k; i < s.nrows; ++i) {
      for (int j = k; j < s.ncols; ++j) {
        if (s.a[i][j] != 0 && (pi < 0 || abs(s.a[i][j]) < abs(s.a[pi][pj]))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    std::swap(s.a[k], s.a[pi]);
    s.swap_cols(k, pj);
    bool again = false;
    // clear column k with row ops (no transform tracked for rows)
    for (int i = k + 1; i < s.nrows; ++i) {
      if (s.a[i][k] == 0) continue;
      Int q = s.a[i][k] / s.a[k][k];
      row_submul(s.a[i], s.a[k], q);
      if (s.a[i][k] != 0) again = true;
    }
    // clear row k with column ops
    for (int j = k + 1; j < s.ncols; ++j) {
      if (s.a[k][j] == 0) continue;
      Int q = s.a[k][j] / s.a[k][k];
      s.submul_col(j, k, q);
      if (s.a[k][j] != 0) again = true;
    }
    if (again) continue;
    // enforce divisibility of the trailing block by the pivot
    bool fixed = false;
    for (int i = k + 1; i < s.nrows && !fixed; ++i) {
      for (int j = k + 1; j < s.ncols && !fixed; ++j) {
        if (s.a[i][j] % s.a[k][k] != 0) {
          for (int c = k; c < s.ncols; ++c) s.a[k][c] += s.a[i][c];
          fixed = true;
        }
      }
    }
    if (fixed) continue;
    if (s.a[k][k] < 0) s.negate_col(k);
    factors.push_back(s.a[k][k]);
    ++k;
  }
}

}  // namespace

std::vector<Int> smith_invariant_factors(IMat a) {
  if (a.empty()) return {};
  SmithState s;
  s.nrows = static_cast<int>(a.size());
  s.ncols = static_cast<int>(a[0].size());
  s.a = std::move(a);
  s.v.clear();  // transform not needed
  std::vector<Int> factors;
  smith_in_place(s, factors);
  return factors;
}

SmithColumnTransform smith_with_column_transform(IMat a, int ncols) {
  SmithState s;
  s.nrows = static_cast<int>(a.size());
  s.ncols = ncols;
  if (s.nrows == 0) {
    s.a = IMat(1, IRow(ncols, 0));
    s.nrows = 1;
  } else {
    s.a = std::move(a);
  }
  s.v.assign(ncols, IRow(ncols, 0));
  for (int i = 0; i < ncols; ++i) s.v[i][i] = 1;
  SmithColumnTransform out;
  smith_in_place(s, out.factors);
  out.rank = static_cast<int>(out.factors.size());
  out.v = s.v;
  // invert the unimodular V exactly
  QMat vq(ncols, QRow(ncols));
  for (int i = 0; i < ncols; ++i) {
    for (int j = 0; j < ncols; ++j) vq[i][j] = Rat(s.v[i][j]);
  }
  out.v_inverse.assign(ncols, IRow(ncols, 0));
  for (int col = 0; col < ncols; ++col) {
    QRow e(ncols, Rat(0));
    e[col] = 1;
    QRow x = solve_square(vq, e);  // V * x = e_col  -> column of V^{-1}
    for (int i = 0; i < ncols; ++i) {
      if (!is_integer(x[i])) throw std::logic_error("non-integer inverse of unimodular matrix");
      out.v_inverse[i][col] = int_numerator(x[i]);
    }
  }
  return out;
}

Int integer_det(IMat a) {
  const int n = static_cast<int>(a.size());
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("determinant of non-square matrix");
  }
  // fraction-free Bareiss elimination
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return n == 0 ? Int(1) : sign * a[n - 1][n - 1];
}

QRow solve_square(QMat a, QRow b) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("dimension mismatch in solve");
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i) {
      if (a[i][k] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) throw std::invalid_argument("singular system");
    std::swap(a[k], a[pivot]);
    std::swap(b[k], b[pivot]);
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rat f = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  QRow x(n, Rat(0));
  for (int k = n - 1; k >= 0; --k) {
    Rat s = b[k];
    for (int j = k + 1; j < n; ++j) s -= a[k][j] * x[j];
    x[k] = s / a[k][k];
  }
  return x;
}

int lattice_rank(const IMat& rows) {
  return static_cast<int>(hermite_normal_form(rows).size());
}

bool in_row_lattice(const IMat& hnf, IRow v) {
  for (const auto& row : hnf) {
    std::size_t pivot = 0;
    while (pivot < row.size() && row[pivot] == 0) ++pivot;
    if (pivot == row.size()) continue;
    if (v[pivot] % row[pivot] != 0) return false;
    Int q = v[pivot] / row[pivot];
    row_submul(v, row, q);
  }
  return is_zero_row(v);
}

bool row_lattices_equal(const IMat& rows_a, const IMat& rows_b) {
  return hermite_normal_form(rows_a) == hermite_normal_form(rows_b);
}

}  // namespace covol
