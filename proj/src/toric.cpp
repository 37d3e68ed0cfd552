#include "covol/toric.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "covol/intlinalg.hpp"

namespace covol {

namespace {

int gcd_abs(const std::vector<int>& v) {
  int g = 0;
  for (int x : v) g = std::gcd(g, std::abs(x));
  return g;
}

bool angular_less(const std::vector<int>& a, const std::vector<int>& b) {
  auto half = [](const std::vector<int>& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  long long cross = static_cast<long long>(a[0]) * b[1] - static_cast<long long>(a[1]) * b[0];
  return cross > 0;
}

}  // namespace

void validate_fan(const Fan& fan) {
  if (fan.dim < 1 || fan.dim > 3) throw std::invalid_argument("fan dimension must be 1, 2, or 3");
  const int n = fan.nrays();
  if (n < fan.dim + 1) throw std::invalid_argument("too few rays for a complete fan");
  for (const auto& u : fan.rays) {
    if (static_cast<int>(u.size()) != fan.dim) throw std::invalid_argument("ray dimension mismatch");
    if (gcd_abs(u) != 1) throw std::invalid_argument("rays must be primitive");
  }
  std::set<std::vector<int>> seen;
  std::vector<char> used(n, 0);
  for (const auto& cone : fan.max_cones) {
    if (static_cast<int>(cone.size()) != fan.dim) {
      throw std::invalid_argument("maximal cone must have dim rays");
    }
    std::vector<int> sorted = cone;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("repeated ray in a cone");
    }
    if (!seen.insert(sorted).second) throw std::invalid_argument("repeated maximal cone");
    IMat m;
    for (int idx : cone) {
      if (idx < 0 || idx >= n) throw std::invalid_argument("ray index out of range");
      used[idx] = 1;
      m.push_back(IRow(fan.rays[idx].begin(), fan.rays[idx].end()));
    }
    Int det = integer_det(m);
    if (det != 1 && det != -1) throw std::invalid_argument("cone is not smooth (|det| != 1)");
  }
  for (int i = 0; i < n; ++i) {
    if (!used[i]) throw std::invalid_argument("ray not used by any maximal cone");
  }

  if (fan.dim == 1) {
    if (n != 2 || fan.rays[0][0] + fan.rays[1][0] != 0) {
      throw std::invalid_argument("complete one-dimensional fan needs the two opposite rays");
    }
  } else if (fan.dim == 2) {
    // angular order: consecutive rays (cyclically) must be exactly the cones
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return angular_less(fan.rays[a], fan.rays[b]); });
    std::set<std::vector<int>> expected;
    for (int k = 0; k < n; ++k) {
      std::vector<int> pair{order[k], order[(k + 1) % n]};
      std::sort(pair.begin(), pair.end());
      expected.insert(pair);
    }
    if (expected != seen) throw std::invalid_argument("two-dimensional fan is not complete");
  } else {
    // declared complete; boundary closure: every facet lies in exactly two cones
    std::map<std::vector<int>, int> facets;
    for (const auto& cone : fan.max_cones) {
      std::vector<int> sorted = cone;
      std::sort(sorted.begin(), sorted.end());
      for (int drop = 0; drop < fan.dim; ++drop) {
        std::vector<int> facet;
        for (int k = 0; k < fan.dim; ++k) {
          if (k != drop) facet.push_back(sorted[k]);
        }
        facets[facet] += 1;
      }
    }
    for (const auto& [facet, count] : facets) {
      if (count != 2) throw std::invalid_argument("three-dimensional fan fails boundary closure");
    }
  }
}

// ---------------------------------------------------------------------------
// exact convex hulls in dimension <= 3

namespace {

QRow sub(const QRow& a, const QRow& b) {
  QRow r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Rat det2(const Rat& a, const Rat& b, const Rat& c, const Rat& d) { return a * d - b * c; }

Rat det3(const QRow& a, const QRow& b, const QRow& c) {
  return a[0] * det2(b[1], b[2], c[1], c[2]) - a[1] * det2(b[0], b[2], c[0], c[2]) +
         a[2] * det2(b[0], b[1], c[0], c[1]);
}

// sign of det[b-a, c-a, d-a]
Rat orient3(const QRow& a, const QRow& b, const QRow& c, const QRow& d) {
  return det3(sub(b, a), sub(c, a), sub(d, a));
}

Rat cross2(const QRow& o, const QRow& a, const QRow& b) {
  return det2(a[0] - o[0], a[1] - o[1], b[0] - o[0], b[1] - o[1]);
}

// strict monotone chain: exactly the extreme points, counterclockwise
std::vector<QRow> hull2d(std::vector<QRow> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<QRow> h;
  for (const auto& p : pts) {
    while (h.size() >= 2 && cross2(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
    h.push_back(p);
  }
  std::size_t lower = h.size() + 1;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (h.size() >= lower && cross2(h[h.size() - 2], h.back(), *it) <= 0) h.pop_back();
    h.push_back(*it);
  }
  h.pop_back();
  // collinear input collapses to the two endpoints
  if (h.size() < 2) {
    h = {pts.front(), pts.back()};
  }
  return h;
}

Rat shoelace_area(const std::vector<QRow>& ring) {
  Rat acc(0);
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = ring[i];
    const auto& q = ring[(i + 1) % n];
    acc += p[0] * q[1] - q[0] * p[1];
  }
  return acc / 2;
}

struct Hull3 {
  std::vector<QRow> points;
  struct Tri {
    int a, b, c;
    bool alive = true;
  };
  std::vector<Tri> tris;
};

// incremental triangulated hull of a full-dimensional point set
Hull3 hull3d(const std::vector<QRow>& pts) {
  Hull3 hull;
  hull.points = pts;
  const int n = static_cast<int>(pts.size());
  // initial tetrahedron from the first affinely independent quadruple
  int i1 = -1, i2 = -1, i3 = -1;
  for (int i = 1; i < n && i1 < 0; ++i) {
    if (pts[i] != pts[0]) i1 = i;
  }
  for (int i = 1; i < n && i2 < 0; ++i) {
    if (i == i1) continue;
    QRow u = sub(pts[i1], pts[0]), v = sub(pts[i], pts[0]);
    bool collinear = det2(u[0], u[1], v[0], v[1]) == 0 && det2(u[0], u[2], v[0], v[2]) == 0 &&
                     det2(u[1], u[2], v[1], v[2]) == 0;
    if (!collinear) i2 = i;
  }
  for (int i = 1; i < n && i3 < 0; ++i) {
    if (i == i1 || i == i2) continue;
    if (orient3(pts[0], pts[i1], pts[i2], pts[i]) != 0) i3 = i;
  }
  if (i1 < 0 || i2 < 0 || i3 < 0) throw std::logic_error("hull3d needs a full-dimensional point set");
  int a = 0, b = i1, c = i2, d = i3;
  if (orient3(pts[a], pts[b], pts[c], pts[d]) > 0) std::swap(b, c);
  // outward-oriented faces: the omitted vertex sits on the negative side
  hull.tris.push_back({a, b, c});
  hull.tris.push_back({a, c, d});
  hull.tris.push_back({a, d, b});
  hull.tris.push_back({b, d, c});

  for (int p = 1; p < n; ++p) {
    if (p == i1 || p == i2 || p == i3) continue;
    std::vector<int> visible;
    for (int t = 0; t < static_cast<int>(hull.tris.size()); ++t) {
      auto& tri = hull.tris[t];
      if (!tri.alive) continue;
      if (orient3(pts[tri.a], pts[tri.b], pts[tri.c], pts[p]) > 0) visible.push_back(t);
    }
    if (visible.empty()) continue;
    // horizon: directed edges of visible faces whose reverse lives on an
    // invisible face
    std::set<std::pair<int, int>> visible_edges;
    for (int t : visible) {
      const auto& tri = hull.tris[t];
      visible_edges.emplace(tri.a, tri.b);
      visible_edges.emplace(tri.b, tri.c);
      visible_edges.emplace(tri.c, tri.a);
    }
    std::vector<std::pair<int, int>> horizon;
    for (const auto& [u, v] : visible_edges) {
      if (!visible_edges.count({v, u})) horizon.emplace_back(u, v);
    }
    for (int t : visible) hull.tris[t].alive = false;
    for (const auto& [u, v] : horizon) hull.tris.push_back({u, v, p});
  }
  return hull;
}

// primitive integer direction of a rational normal vector
std::vector<Int> primitive_direction(const QRow& v) {
  Int lcm = 1;
  for (const auto& x : v) {
    Int den = int_denominator(x);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  std::vector<Int> w;
  Int g = 0;
  for (const auto& x : v) {
    Int value = int_numerator(x) * (lcm / int_denominator(x));
    w.push_back(value);
    g = boost::multiprecision::gcd(g, abs(value));
  }
  if (g > 1) {
    for (auto& x : w) x /= g;
  }
  return w;
}

int affine_rank(const std::vector<QRow>& pts, int dim) {
  if (pts.size() <= 1) return 0;
  QMat dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back(sub(pts[i], pts[0]));
  // rational row elimination
  int rank = 0;
  for (int col = 0; col < dim && rank < static_cast<int>(dirs.size()); ++col) {
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(dirs.size()); ++i) {
      if (dirs[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(dirs[rank], dirs[pivot]);
    for (int i = rank + 1; i < static_cast<int>(dirs.size()); ++i) {
      if (dirs[i][col] == 0) continue;
      Rat f = dirs[i][col] / dirs[rank][col];
      for (int j = col; j < dim; ++j) dirs[i][j] -= f * dirs[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

LatticePolytope make_polytope(int dim, std::vector<QRow> points) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("polytope dimension must be 1, 2, or 3");
  if (points.empty()) throw std::invalid_argument("polytope needs at least one point");
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dim) throw std::invalid_argument("point dimension mismatch");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  LatticePolytope out;
  out.dim = dim;
  if (points.size() == 1) {
    out.vertices = points;
    return out;
  }
  const int rank = affine_rank(points, dim);
  if (rank == 0) {
    out.vertices = {points[0]};
    return out;
  }
  if (rank == 1) {
    // endpoints along the segment direction: the lexicographic extremes
    out.vertices = {points.front(), points.back()};
    return out;
  }
  if (dim == 2) {
    out.vertices = hull2d(std::move(points));
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
  }
  // dim == 3
  if (rank == 2) {
    // planar set: 2D hull in coordinates along two independent directions
    QRow origin = points[0];
    QRow v1, v2;
    bool have1 = false, have2 = false;
    for (std::size_t i = 1; i < points.size() && !have2; ++i) {
      QRow v = sub(points[i], origin);
      if (!have1) {
        if (v != QRow(3, Rat(0))) {
          v1 = v;
          have1 = true;
        }
      } else {
        bool collinear = det2(v1[0], v1[1], v[0], v[1]) == 0 &&
                         det2(v1[0], v1[2], v[0], v[2]) == 0 &&
                         det2(v1[1], v1[2], v[1], v[2]) == 0;
        if (!collinear) {
          v2 = v;
          have2 = true;
        }
      }
    }
    // choose two coordinate axes in which the plane projection is injective
    int c1 = -1, c2 = -1;
    for (int i = 0; i < 3 && c1 < 0; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (det2(v1[i], v1[j], v2[i], v2[j]) != 0) {
          c1 = i;
          c2 = j;
          break;
        }
      }
    }
    std::map<QRow, QRow> lift;
    std::vector<QRow> shadow;
    for (const auto& p : points) {
      QRow s{p[c1], p[c2]};
      lift[s] = p;
      shadow.push_back(std::move(s));
    }
    for (const auto& s : hull2d(std::move(shadow))) out.vertices.push_back(lift.at(s));
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
  }
  Hull3 hull = hull3d(points);
  // a mesh vertex is extreme iff the facet normals at it span 3 dimensions
  std::map<int, IMat> normals;
  for (const auto& tri : hull.tris) {
    if (!tri.alive) continue;
    QRow u = sub(hull.points[tri.b], hull.points[tri.a]);
    QRow v = sub(hull.points[tri.c], hull.points[tri.a]);
    QRow normal{det2(u[1], u[2], v[1], v[2]), -det2(u[0], u[2], v[0], v[2]),
                det2(u[0], u[1], v[0], v[1])};
    auto dir = primitive_direction(normal);
    for (int corner : {tri.a, tri.b, tri.c}) {
      normals[corner].push_back(IRow(dir.begin(), dir.end()));
    }
  }
  for (auto& [idx, mat] : normals) {
    std::sort(mat.begin(), mat.end());
    mat.erase(std::unique(mat.begin(), mat.end()), mat.end());
    if (lattice_rank(mat) == 3) out.vertices.push_back(hull.points[idx]);
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.dim != q.dim) throw std::invalid_argument("Minkowski sum dimension mismatch");
  std::vector<QRow> sums;
  sums.reserve(p.vertices.size() * q.vertices.size());
  for (const auto& a : p.vertices) {
    for (const auto& b : q.vertices) {
      QRow s(p.dim);
      for (int i = 0; i < p.dim; ++i) s[i] = a[i] + b[i];
      sums.push_back(std::move(s));
    }
  }
  return make_polytope(p.dim, std::move(sums));
}

LatticePolytope scale_polytope(const LatticePolytope& p, int factor) {
  if (factor < 0) throw std::invalid_argument("negative polytope scale");
  if (factor == 0) {
    LatticePolytope origin;
    origin.dim = p.dim;
    origin.vertices = {QRow(p.dim, Rat(0))};
    return origin;
  }
  LatticePolytope out;
  out.dim = p.dim;
  for (const auto& v : p.vertices) {
    QRow w(p.dim);
    for (int i = 0; i < p.dim; ++i) w[i] = v[i] * factor;
    out.vertices.push_back(std::move(w));
  }
  return out;
}

Rat volume(const LatticePolytope& p) {
  if (p.vertices.size() <= static_cast<std::size_t>(p.dim)) return Rat(0);
  if (affine_rank(p.vertices, p.dim) < p.dim) return Rat(0);
  if (p.dim == 1) {
    return p.vertices.back()[0] - p.vertices.front()[0];
  }
  if (p.dim == 2) {
    auto ring = hull2d(p.vertices);
    Rat area = shoelace_area(ring);
    return area < 0 ? -area : area;
  }
  Hull3 hull = hull3d(p.vertices);
  Rat six_vol(0);
  for (const auto& tri : hull.tris) {
    if (!tri.alive) continue;
    six_vol += det3(hull.points[tri.a], hull.points[tri.b], hull.points[tri.c]);
  }
  if (six_vol < 0) six_vol = -six_vol;
  return six_vol / 6;
}

// ---------------------------------------------------------------------------

PresentedRing jd_presentation(const Fan& fan) {
  validate_fan(fan);
  const int n = fan.nrays();
  PresentedRing ring;
  ring.var_degrees.assign(n, 1);
  ring.socle_degree = fan.dim;

  std::vector<std::set<int>> cones;
  for (const auto& cone : fan.max_cones) cones.emplace_back(cone.begin(), cone.end());
  auto is_face = [&](const std::vector<int>& subset) {
    for (const auto& cone : cones) {
      bool inside = true;
      for (int v : subset) {
        if (!cone.count(v)) {
          inside = false;
          break;
        }
      }
      if (inside) return true;
    }
    return false;
  };
  // minimal non-faces, by increasing subset size
  std::vector<std::vector<int>> nonfaces;
  std::vector<int> subset;
  std::function<void(int, int)> rec = [&](int start, int size) {
    if (static_cast<int>(subset.size()) == size) {
      if (is_face(subset)) return;
      for (int drop = 0; drop < size; ++drop) {
        std::vector<int> sub;
        for (int k = 0; k < size; ++k) {
          if (k != drop) sub.push_back(subset[k]);
        }
        if (!sub.empty() && !is_face(sub)) return;  // not minimal
      }
      nonfaces.push_back(subset);
      return;
    }
    for (int v = start; v < n; ++v) {
      subset.push_back(v);
      rec(v + 1, size);
      subset.pop_back();
    }
  };
  for (int size = 2; size <= n; ++size) rec(0, size);

  for (const auto& nf : nonfaces) {
    Exponent e(n, 0);
    for (int v : nf) e[v] = 1;
    ring.generators.push_back(MultiPoly::monomial(std::move(e), Rat(1)));
  }
  for (int k = 0; k < fan.dim; ++k) {
    MultiPoly linear(n);
    for (int i = 0; i < n; ++i) {
      if (fan.rays[i][k] == 0) continue;
      Exponent e(n, 0);
      e[i] = 1;
      linear.add_term(e, Rat(fan.rays[i][k]));
    }
    if (!linear.is_zero()) ring.generators.push_back(std::move(linear));
  }
  validate_ring(ring);
  return ring;
}

std::map<int, std::vector<Int>> cartier_data(const Fan& fan, const ToricDivisor& divisor) {
  validate_fan(fan);
  if (static_cast<int>(divisor.size()) != fan.nrays()) {
    throw std::invalid_argument("divisor length does not match ray count");
  }
  std::map<int, std::vector<Int>> data;
  for (int c = 0; c < static_cast<int>(fan.max_cones.size()); ++c) {
    const auto& cone = fan.max_cones[c];
    QMat a(fan.dim, QRow(fan.dim));
    QRow b(fan.dim);
    for (int r = 0; r < fan.dim; ++r) {
      for (int k = 0; k < fan.dim; ++k) a[r][k] = Rat(fan.rays[cone[r]][k]);
      b[r] = Rat(-divisor[cone[r]]);
    }
    QRow m = solve_square(std::move(a), std::move(b));
    std::vector<Int> mi;
    for (const auto& x : m) {
      if (!is_integer(x)) throw std::logic_error("Cartier data of a smooth cone must be integral");
      mi.push_back(int_numerator(x));
    }
    data.emplace(c, std::move(mi));
  }
  return data;
}

bool is_nef(const Fan& fan, const ToricDivisor& divisor) {
  auto data = cartier_data(fan, divisor);
  for (const auto& [cone, m] : data) {
    for (int i = 0; i < fan.nrays(); ++i) {
      Int pairing = 0;
      for (int k = 0; k < fan.dim; ++k) pairing += m[k] * fan.rays[i][k];
      if (pairing < -divisor[i]) return false;
    }
  }
  return true;
}

LatticePolytope divisor_polytope(const Fan& fan, const ToricDivisor& divisor) {
  if (!is_nef(fan, divisor)) throw std::invalid_argument("divisor is not nef");
  auto data = cartier_data(fan, divisor);
  std::vector<QRow> points;
  for (const auto& [cone, m] : data) {
    QRow p(fan.dim);
    for (int k = 0; k < fan.dim; ++k) p[k] = Rat(m[k]);
    points.push_back(std::move(p));
  }
  return make_polytope(fan.dim, std::move(points));
}

std::map<Exponent, Rat> mixed_volumes(const std::vector<LatticePolytope>& polytopes, int d) {
  const int n = static_cast<int>(polytopes.size());
  if (n == 0) throw std::invalid_argument("mixed volumes need at least one polytope");
  for (const auto& p : polytopes) {
    if (p.dim != polytopes[0].dim) throw std::invalid_argument("polytope dimension mismatch");
  }
  if (d != polytopes[0].dim) throw std::invalid_argument("mixed volume degree must match dimension");

  // grid of volumes of y_1 P_1 + ... + y_n P_n over {0..d}^n
  const int side = d + 1;
  long long cells_ll = 1;
  for (int i = 0; i < n; ++i) {
    cells_ll *= side;
    if (cells_ll > 1'000'000) throw std::invalid_argument("mixed-volume grid is too large");
  }
  const int cells = static_cast<int>(cells_ll);
  std::vector<Rat> values(cells);
  std::vector<int> y(n, 0);
  for (int cell = 0; cell < cells; ++cell) {
    int rest = cell;
    for (int i = 0; i < n; ++i) {
      y[i] = rest % side;
      rest /= side;
    }
    LatticePolytope acc;
    acc.dim = polytopes[0].dim;
    acc.vertices = {QRow(acc.dim, Rat(0))};
    for (int i = 0; i < n; ++i) {
      if (y[i] > 0) acc = minkowski_sum(acc, scale_polytope(polytopes[i], y[i]));
    }
    values[cell] = volume(acc);
  }

  // exact tensor interpolation: one Vandermonde solve per grid line
  QMat vandermonde(side, QRow(side));
  for (int r = 0; r < side; ++r) {
    Rat power(1);
    for (int c = 0; c < side; ++c) {
      vandermonde[r][c] = power;
      power *= r;
    }
  }
  int stride = 1;
  for (int axis = 0; axis < n; ++axis) {
    for (int base = 0; base < cells; ++base) {
      if ((base / stride) % side != 0) continue;
      QRow rhs(side);
      for (int k = 0; k < side; ++k) rhs[k] = values[base + k * stride];
      QRow coeffs = solve_square(vandermonde, std::move(rhs));
      for (int k = 0; k < side; ++k) values[base + k * stride] = coeffs[k];
    }
    stride *= side;
  }

  std::map<Exponent, Rat> mixed;
  for (int cell = 0; cell < cells; ++cell) {
    if (values[cell] == 0) continue;
    int rest = cell;
    Exponent alpha(n);
    for (int i = 0; i < n; ++i) {
      alpha[i] = rest % side;
      rest /= side;
    }
    if (total_degree(alpha) != d) {
      throw std::logic_error("Minkowski volume interpolation produced an inhomogeneous term");
    }
    mixed.emplace(std::move(alpha), values[cell] * Rat(exponent_factorial(alpha)));
  }
  return mixed;
}

InversePoly toric_dual_generator(const Fan& fan, const std::vector<ToricDivisor>& divisors) {
  validate_fan(fan);
  std::vector<LatticePolytope> polytopes;
  for (const auto& divisor : divisors) polytopes.push_back(divisor_polytope(fan, divisor));
  auto mixed = mixed_volumes(polytopes, fan.dim);
  MultiPoly g(static_cast<int>(divisors.size()));
  for (const auto& [alpha, mv] : mixed) g.add_term(alpha, mv);
  return InversePoly{std::move(g)};
}

InversePoly jd_dual_generator(const Fan& fan) {
  PresentedRing ring = jd_presentation(fan);
  Exponent point_class(fan.nrays(), 0);
  for (int idx : fan.max_cones[0]) point_class[idx] = 1;
  return dual_generator(ring, derive_degree_map(ring, point_class));
}

MultiPoly restrict_vars(const MultiPoly& f, const std::vector<int>& vars) {
  MultiPoly out(static_cast<int>(vars.size()));
  std::vector<char> keep(f.nvars(), 0);
  for (int v : vars) {
    if (v < 0 || v >= f.nvars()) throw std::invalid_argument("variable index out of range");
    keep[v] = 1;
  }
  for (const auto& [e, c] : f.terms()) {
    bool supported = true;
    for (int i = 0; i < f.nvars() && supported; ++i) supported = keep[i] || e[i] == 0;
    if (!supported) continue;
    Exponent r(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) r[i] = e[vars[i]];
    out.add_term(r, c);
  }
  return out;
}

MultiPoly volume_polynomial(const Fan& fan, const std::vector<int>& reduced_basis) {
  InversePoly g = jd_dual_generator(fan);
  MultiPoly base = reduced_basis.empty() ? g.poly : restrict_vars(g.poly, reduced_basis);
  return normalize(base) * Rat(factorial(fan.dim));
}

}  // namespace covol
