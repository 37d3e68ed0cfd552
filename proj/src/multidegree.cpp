#include "covol/multidegree.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace covol {

bool GradingSpec::is_positive() const {
  for (const auto& d : degrees) {
    if (static_cast<int>(d.size()) != p) return false;
    bool nonzero = false;
    for (int x : d) {
      if (x < 0) return false;
      if (x > 0) nonzero = true;
    }
    if (!nonzero) return false;
  }
  return true;
}

bool GradingSpec::is_standard() const {
  if (!is_positive()) return false;
  for (const auto& d : degrees) {
    int sum = 0;
    for (int x : d) sum += x;
    if (sum != 1) return false;
  }
  return true;
}

std::optional<std::string> GradingSpec::twisted_violation(int split) const {
  if (split < 0 || split > p) return "split out of range";
  for (int i = 0; i < nvars(); ++i) {
    const auto& d = degrees[i];
    if (static_cast<int>(d.size()) != p) return "degree vector length mismatch";
    bool nonzero = false;
    for (int k = 0; k < p; ++k) {
      if (k < split && d[k] < 0) {
        return "variable " + std::to_string(i + 1) + " has negative coordinate " +
               std::to_string(k + 1) + " in the positive block";
      }
      if (k >= split && d[k] > 0) {
        return "variable " + std::to_string(i + 1) + " has positive coordinate " +
               std::to_string(k + 1) + " in the negative block";
      }
      if (d[k] != 0) nonzero = true;
    }
    if (!nonzero) return "variable " + std::to_string(i + 1) + " has zero degree";
  }
  return std::nullopt;
}

namespace {

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Exponent> generators) : nvars_(nvars) {
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != nvars) {
      throw std::invalid_argument("generator length does not match variable count");
    }
    if (total_degree(g) == 0) throw std::invalid_argument("unit ideal is not allowed");
    for (int x : g) {
      if (x < 0) throw std::invalid_argument("negative exponent in generator");
    }
  }
  std::sort(generators.begin(), generators.end(), GrlexGreater{});
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::reverse(generators.begin(), generators.end());  // low degree first for minimalization
  for (const auto& g : generators) {
    bool redundant = false;
    for (const auto& kept : gens_) {
      if (divides(kept, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(g);
  }
}

bool MonomialIdeal::contains_monomial(const Exponent& e) const {
  for (const auto& g : gens_) {
    if (divides(g, e)) return true;
  }
  return false;
}

bool MonomialIdeal::generated_by_variables() const {
  for (const auto& g : gens_) {
    if (total_degree(g) != 1) return false;
  }
  return true;
}

namespace {

std::vector<int> weighted_degree(const Exponent& e, const GradingSpec& g) {
  std::vector<int> d(g.p, 0);
  for (int i = 0; i < static_cast<int>(e.size()); ++i) {
    if (e[i] == 0) continue;
    for (int k = 0; k < g.p; ++k) d[k] += e[i] * g.degrees[i][k];
  }
  return d;
}

}  // namespace

MultiPoly k_polynomial(const MonomialIdeal& ideal, const GradingSpec& grading) {
  if (grading.nvars() != ideal.nvars()) throw std::invalid_argument("grading/ideal variable mismatch");
  if (!grading.is_positive()) {
    throw std::invalid_argument("K-polynomial requires a positive grading");
  }
  const auto& gens = ideal.generators();
  const int m = static_cast<int>(gens.size());
  if (m > 24) throw std::invalid_argument("too many generators for inclusion-exclusion");
  MultiPoly k(grading.p);
  Exponent lcm(ideal.nvars(), 0);
  // depth-first over generator subsets, maintaining the running lcm
  std::function<void(int, int, Exponent)> rec = [&](int idx, int parity, Exponent acc) {
    if (idx == m) {
      auto d = weighted_degree(acc, grading);
      Exponent e(d.begin(), d.end());
      k.add_term(e, Rat(parity));
      return;
    }
    rec(idx + 1, parity, acc);
    Exponent joined = acc;
    for (int i = 0; i < ideal.nvars(); ++i) joined[i] = std::max(joined[i], gens[idx][i]);
    rec(idx + 1, -parity, std::move(joined));
  };
  rec(0, 1, std::move(lcm));
  return k;
}

int codim(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  if (gens.empty()) return 0;
  const int n = ideal.nvars();
  std::vector<std::vector<int>> supports;
  supports.reserve(gens.size());
  for (const auto& g : gens) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (g[i] > 0) s.push_back(i);
    }
    supports.push_back(std::move(s));
  }
  // exhaustive cover search by increasing cardinality
  std::vector<int> chosen;
  std::function<bool(int, int)> covers = [&](int start, int k) -> bool {
    if (k == 0) {
      for (const auto& s : supports) {
        bool hit = false;
        for (int v : s) {
          if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) {
            hit = true;
            break;
          }
        }
        if (!hit) return false;
      }
      return true;
    }
    for (int v = start; v + k <= n; ++v) {
      chosen.push_back(v);
      if (covers(v + 1, k - 1)) {
        chosen.pop_back();
        return true;
      }
      chosen.pop_back();
    }
    return false;
  };
  for (int k = 1; k <= n; ++k) {
    if (covers(0, k)) return k;
  }
  throw std::logic_error("no variable cover found for a nonempty monomial ideal");
}

namespace {

MultiPoly degree_slice(const MultiPoly& f, int d) {
  MultiPoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    if (total_degree(e) == d) out.add_term(e, c);
  }
  return out;
}

}  // namespace

MultiPoly multidegree(const MonomialIdeal& ideal, const GradingSpec& grading) {
  MultiPoly k = k_polynomial(ideal, grading);
  MultiPoly c = subst_one_minus(k);
  const int cd = codim(ideal);
  for (const auto& [e, coef] : c.terms()) {
    if (total_degree(e) < cd) {
      throw std::logic_error("multidegree: term below codimension survived substitution");
    }
  }
  return degree_slice(c, cd);
}

MultiPoly multidegree_linear(const MonomialIdeal& ideal, const GradingSpec& grading) {
  if (!ideal.generated_by_variables()) {
    throw std::invalid_argument("linear multidegree formula requires an ideal generated by variables");
  }
  MultiPoly prod = MultiPoly::constant(grading.p, Rat(1));
  for (const auto& g : ideal.generators()) {
    int var = 0;
    while (g[var] == 0) ++var;
    MultiPoly linear(grading.p);
    for (int k = 0; k < grading.p; ++k) {
      Exponent e(grading.p, 0);
      e[k] = 1;
      linear.add_term(e, Rat(grading.degrees[var][k]));
    }
    prod = prod * linear;
  }
  return prod;
}

GradingSpec flip_grading(const GradingSpec& grading, int split) {
  if (auto why = grading.twisted_violation(split)) {
    throw std::invalid_argument("not a twisted positive grading: " + *why);
  }
  GradingSpec flipped = grading;
  flipped.q.reset();
  for (auto& d : flipped.degrees) {
    for (int k = split; k < grading.p; ++k) d[k] = -d[k];
  }
  return flipped;
}

MultiPoly multidegree_twisted(const MonomialIdeal& ideal, const GradingSpec& grading, int split) {
  MultiPoly flipped = multidegree(ideal, flip_grading(grading, split));
  std::vector<int> negative_block;
  for (int k = split; k < grading.p; ++k) negative_block.push_back(k);
  return flip_signs(flipped, negative_block);
}

Standardization standardize(const MonomialIdeal& ideal, const GradingSpec& grading) {
  if (!grading.is_positive()) throw std::invalid_argument("standardization requires a positive grading");
  const int n = ideal.nvars();
  GradingSpec std_grading;
  std_grading.p = grading.p;
  std::vector<std::string> names;
  std::vector<int> offset(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    offset[i] = static_cast<int>(std_grading.degrees.size());
    int j = 0;
    for (int k = 0; k < grading.p; ++k) {
      for (int rep = 0; rep < grading.degrees[i][k]; ++rep) {
        std::vector<int> unit(grading.p, 0);
        unit[k] = 1;
        std_grading.degrees.push_back(std::move(unit));
        names.push_back("y" + std::to_string(i + 1) + "_" + std::to_string(++j));
      }
    }
  }
  offset[n] = static_cast<int>(std_grading.degrees.size());
  std::vector<Exponent> gens;
  for (const auto& g : ideal.generators()) {
    Exponent e(offset[n], 0);
    for (int i = 0; i < n; ++i) {
      for (int v = offset[i]; v < offset[i + 1]; ++v) e[v] = g[i];
    }
    gens.push_back(std::move(e));
  }
  return Standardization{MonomialIdeal(offset[n], std::move(gens)), std::move(std_grading),
                         std::move(names)};
}

MultiPoly volume_poly_from_multidegree(const MultiPoly& c, const Exponent& m, int d) {
  if (!c.is_homogeneous()) throw std::invalid_argument("multidegree must be homogeneous");
  if (static_cast<int>(m.size()) != c.nvars()) throw std::invalid_argument("bound length mismatch");
  int total = 0;
  for (int x : m) {
    if (x < 0) throw std::invalid_argument("negative entry in exponent bound");
    total += x;
  }
  const int deg = c.is_zero() ? 0 : c.degree();
  if (d != total - deg) throw std::invalid_argument("dimension does not match |m| - deg");
  return normalize(reverse(c, m)) * Rat(factorial(d));
}

std::map<std::vector<int>, Int> hilbert_function(const MonomialIdeal& ideal,
                                                 const GradingSpec& grading,
                                                 const std::vector<int>& bound) {
  if (!grading.is_positive()) throw std::invalid_argument("Hilbert function requires a positive grading");
  if (static_cast<int>(bound.size()) != grading.p) throw std::invalid_argument("bound length mismatch");
  const int n = ideal.nvars();
  std::map<std::vector<int>, Int> counts;
  Exponent e(n, 0);
  std::vector<int> deg(grading.p, 0);
  std::function<void(int)> rec = [&](int var) {
    if (var == n) {
      if (!ideal.contains_monomial(e)) counts[deg] += 1;
      return;
    }
    // the positive grading bounds every exponent through any positive coordinate
    while (true) {
      rec(var + 1);
      bool fits = true;
      for (int k = 0; k < grading.p && fits; ++k) {
        fits = deg[k] + grading.degrees[var][k] <= bound[k];
      }
      if (!fits) break;
      ++e[var];
      for (int k = 0; k < grading.p; ++k) deg[k] += grading.degrees[var][k];
    }
    for (int k = 0; k < grading.p; ++k) deg[k] -= e[var] * grading.degrees[var][k];
    e[var] = 0;
  };
  rec(0);
  return counts;
}

}  // namespace covol
