#include "covol/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace covol {

int total_degree(const Exponent& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("negative variable count");
}

MultiPoly::MultiPoly(int nvars, TermMap terms) : nvars_(nvars), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (static_cast<int>(it->first.size()) != nvars_) {
      throw std::invalid_argument("exponent vector length does not match variable count");
    }
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::monomial(Exponent e, const Rat& c) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int var) {
  if (var < 0 || var >= nvars) throw std::invalid_argument("variable index out of range");
  Exponent e(nvars, 0);
  e[var] = 1;
  return monomial(std::move(e), Rat(1));
}

Rat MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rat& c) {
  if (static_cast<int>(e.size()) != nvars_) {
    throw std::invalid_argument("exponent vector length does not match variable count");
  }
  for (int x : e) {
    if (x < 0) throw std::invalid_argument("negative exponent");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool MultiPoly::is_integral() const {
  for (const auto& [e, c] : terms_) {
    if (!is_integer(c)) return false;
  }
  return true;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) != d) return false;
  }
  return true;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  // Terms are kept in degree-descending order.
  return total_degree(terms_.begin()->first);
}

Exponent MultiPoly::max_exponents() const {
  Exponent m(nvars_, 0);
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < nvars_; ++i) m[i] = std::max(m[i], e[i]);
  }
  return m;
}

std::vector<Exponent> MultiPoly::support() const {
  std::vector<Exponent> s;
  s.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

void MultiPoly::check_same_vars(const MultiPoly& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("variable count mismatch");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
  check_same_vars(other);
  MultiPoly r = *this;
  for (const auto& [e, c] : other.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
  check_same_vars(other);
  MultiPoly r = *this;
  for (const auto& [e, c] : other.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  check_same_vars(other);
  MultiPoly r(nvars_);
  Exponent e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator*(const Rat& scalar) const {
  MultiPoly r(nvars_);
  if (scalar == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * scalar);
  return r;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  return nvars_ == other.nvars_ && terms_ == other.terms_;
}

std::string MultiPoly::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = total_degree(e) > 0;
    if (!has_vars || a != 1) out << rational_to_string(a);
    bool star = !has_vars || a != 1;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (star) out << "*";
      star = true;
      if (static_cast<std::size_t>(i) < var_names.size()) {
        out << var_names[i];
      } else {
        out << "t" << (i + 1);
      }
      if (e[i] > 1) out << "^" << e[i];
    }
  }
  return out.str();
}

Int exponent_factorial(const Exponent& e) {
  Int r = 1;
  for (int x : e) r *= factorial(x);
  return r;
}

MultiPoly normalize(const MultiPoly& h) {
  TermMap terms;
  for (const auto& [e, c] : h.terms()) terms.emplace(e, c / Rat(exponent_factorial(e)));
  return MultiPoly(h.nvars(), std::move(terms));
}

MultiPoly denormalize(const MultiPoly& h) {
  TermMap terms;
  for (const auto& [e, c] : h.terms()) terms.emplace(e, c * Rat(exponent_factorial(e)));
  return MultiPoly(h.nvars(), std::move(terms));
}

MultiPoly reverse(const MultiPoly& h, const Exponent& m) {
  if (static_cast<int>(m.size()) != h.nvars()) {
    throw std::invalid_argument("reversal bound length does not match variable count");
  }
  TermMap terms;
  Exponent r(h.nvars());
  for (const auto& [e, c] : h.terms()) {
    for (int i = 0; i < h.nvars(); ++i) {
      r[i] = m[i] - e[i];
      if (r[i] < 0) throw std::invalid_argument("reversal bound too small: exponent would go negative");
    }
    terms.emplace(r, c);
  }
  return MultiPoly(h.nvars(), std::move(terms));
}

MultiPoly truncate(const MultiPoly& h, const Exponent& w) {
  if (static_cast<int>(w.size()) != h.nvars()) {
    throw std::invalid_argument("truncation bound length does not match variable count");
  }
  TermMap terms;
  for (const auto& [e, c] : h.terms()) {
    bool keep = true;
    for (int i = 0; i < h.nvars() && keep; ++i) keep = e[i] <= w[i];
    if (keep) terms.emplace(e, c);
  }
  return MultiPoly(h.nvars(), std::move(terms));
}

MultiPoly flip_signs(const MultiPoly& h, const std::vector<int>& vars) {
  std::vector<char> flip(h.nvars(), 0);
  for (int v : vars) {
    if (v < 0 || v >= h.nvars()) throw std::invalid_argument("flip index out of range");
    flip[v] = 1;
  }
  TermMap terms;
  for (const auto& [e, c] : h.terms()) {
    int s = 0;
    for (int i = 0; i < h.nvars(); ++i) {
      if (flip[i]) s += e[i];
    }
    terms.emplace(e, (s % 2 == 0) ? c : -c);
  }
  return MultiPoly(h.nvars(), std::move(terms));
}

std::vector<Exponent> monomials_of_degree(int nvars, int deg) {
  std::vector<Exponent> out;
  if (nvars == 0) {
    if (deg == 0) out.push_back({});
    return out;
  }
  Exponent e(nvars, 0);
  // lexicographically descending within the fixed total degree
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      e[var] = remaining;
      out.push_back(e);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, remaining - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, deg);
  return out;
}

MultiPoly subst_one_minus(const MultiPoly& h) {
  const int n = h.nvars();
  // Binomial expansion of prod_i (1 - t_i)^{e_i}, term by term.
  MultiPoly result(n);
  for (const auto& [e, c] : h.terms()) {
    MultiPoly term = MultiPoly::constant(n, c);
    for (int i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      MultiPoly factor = MultiPoly::constant(n, Rat(1)) - MultiPoly::variable(n, i);
      for (int k = 0; k < e[i]; ++k) term = term * factor;
    }
    result = result + term;
  }
  return result;
}

}  // namespace covol
