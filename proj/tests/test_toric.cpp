#include "covol/toric.hpp"

#include "covol/certify.hpp"
#include "doctest.h"
#include "fans.hpp"
#include "rings.hpp"
#include "test_util.hpp"

using namespace covol;
using covol::testing::make_poly;

namespace {

using covol::testing::fan_hirzebruch;
using covol::testing::fan_p1;
using covol::testing::fan_p2;

Fan fan_p3() {
  return Fan{3,
             {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
             {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
}

QRow pt(std::vector<int> coords) {
  QRow p;
  for (int c : coords) p.emplace_back(c);
  return p;
}

LatticePolytope box3() {
  std::vector<QRow> corners;
  for (int x = 0; x <= 1; ++x) {
    for (int y = 0; y <= 1; ++y) {
      for (int z = 0; z <= 1; ++z) corners.push_back(pt({x, y, z}));
    }
  }
  return make_polytope(3, corners);
}

// polarization: MV_alpha = sum over nonempty subsets of the alpha-multiset
// of (-1)^(d-|S|) Vol(sum of the polytopes in S)
Rat mixed_volume_oracle(const std::vector<LatticePolytope>& ps, const Exponent& alpha, int d) {
  std::vector<int> multiset;
  for (int i = 0; i < static_cast<int>(alpha.size()); ++i) {
    for (int k = 0; k < alpha[i]; ++k) multiset.push_back(i);
  }
  REQUIRE(static_cast<int>(multiset.size()) == d);
  Rat acc(0);
  for (int mask = 1; mask < (1 << d); ++mask) {
    LatticePolytope sum;
    sum.dim = ps[0].dim;
    sum.vertices = {QRow(sum.dim, Rat(0))};
    int size = 0;
    for (int b = 0; b < d; ++b) {
      if (mask & (1 << b)) {
        sum = minkowski_sum(sum, ps[multiset[b]]);
        ++size;
      }
    }
    Rat v = volume(sum);
    acc += ((d - size) % 2 == 0) ? v : -v;
  }
  return acc;
}

}  // namespace

TEST_CASE("fan validation") {
  CHECK_NOTHROW(validate_fan(fan_p1()));
  CHECK_NOTHROW(validate_fan(fan_p2()));
  for (int r = 0; r <= 3; ++r) CHECK_NOTHROW(validate_fan(fan_hirzebruch(r)));
  CHECK_NOTHROW(validate_fan(fan_p3()));

  Fan missing_cone{2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}}};
  CHECK_THROWS_AS(validate_fan(missing_cone), std::invalid_argument);
  Fan imprimitive{1, {{2}, {-2}}, {{0}, {1}}};
  CHECK_THROWS_AS(validate_fan(imprimitive), std::invalid_argument);
  Fan singular{2, {{1, 0}, {1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}};
  CHECK_THROWS_AS(validate_fan(singular), std::invalid_argument);
}

TEST_CASE("jurkiewicz-danilov presentations") {
  auto p1 = jd_presentation(fan_p1());
  CHECK(p1.generators.size() == 2);
  CHECK(p1.generators[0] == make_poly(2, {{"1", {1, 1}}}));
  CHECK(p1.generators[1] == make_poly(2, {{"1", {1, 0}}, {"-1", {0, 1}}}));

  auto p2 = jd_presentation(fan_p2());
  REQUIRE(p2.generators.size() == 3);
  CHECK(p2.generators[0] == make_poly(3, {{"1", {1, 1, 1}}}));
  CHECK(p2.generators[1] == make_poly(3, {{"1", {1, 0, 0}}, {"-1", {0, 0, 1}}}));
  CHECK(p2.generators[2] == make_poly(3, {{"1", {0, 1, 0}}, {"-1", {0, 0, 1}}}));

  auto h2 = jd_presentation(fan_hirzebruch(2));
  REQUIRE(h2.generators.size() == 4);
  CHECK(h2.generators[0] == make_poly(4, {{"1", {1, 0, 1, 0}}}));
  CHECK(h2.generators[1] == make_poly(4, {{"1", {0, 1, 0, 1}}}));
  CHECK(h2.generators[2] == make_poly(4, {{"-1", {1, 0, 0, 0}}, {"1", {0, 0, 1, 0}}}));
  CHECK(h2.generators[3] ==
        make_poly(4, {{"2", {1, 0, 0, 0}}, {"1", {0, 1, 0, 0}}, {"-1", {0, 0, 0, 1}}}));
  CHECK(check_flat(h2));
}

TEST_CASE("nef divisors and cartier data") {
  auto h = fan_hirzebruch(2);
  CHECK(is_nef(h, {0, 0, 1, 0}));
  CHECK(is_nef(h, {0, 0, 0, 1}));
  // the negative section is not nef
  CHECK_FALSE(is_nef(h, {0, 1, 0, 0}));
  // fibers are: D1 and D3 share a class
  CHECK(is_nef(h, {1, 0, 0, 0}));

  auto data = cartier_data(h, {0, 0, 1, 0});
  CHECK(data.size() == 4);
  CHECK(data[1] == std::vector<Int>{-1, 0});  // cone {rho2, rho3}
}

TEST_CASE("divisor polytopes") {
  auto h = fan_hirzebruch(2);
  auto p3 = divisor_polytope(h, {0, 0, 1, 0});
  CHECK(p3.vertices == std::vector<QRow>{pt({-1, 0}), pt({0, 0})});
  auto p4 = divisor_polytope(h, {0, 0, 0, 1});
  CHECK(p4.vertices == std::vector<QRow>{pt({0, 0}), pt({0, 1}), pt({2, 1})});

  auto p1 = divisor_polytope(fan_p1(), {1, 0});
  CHECK(volume(p1) == 1);

  CHECK_THROWS_AS(divisor_polytope(h, {0, 1, 0, 0}), std::invalid_argument);
}

TEST_CASE("polytope volumes") {
  // unit square
  auto square = make_polytope(2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})});
  CHECK(volume(square) == 1);
  // interior and boundary points do not become vertices
  auto cluttered = make_polytope(
      2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1}), pt({0, 0}), QRow{Rat(1, 2), Rat(1, 2)},
          QRow{Rat(1, 2), Rat(0)}});
  CHECK(cluttered.vertices.size() == 4);
  // triangle with base r and height 1
  for (int r = 1; r <= 3; ++r) {
    auto tri = divisor_polytope(fan_hirzebruch(r), {0, 0, 0, 1});
    CHECK(volume(tri) == Rat(r, 2));
  }
  // a segment in the plane has zero area
  CHECK(volume(make_polytope(2, {pt({0, 0}), pt({3, 3})})) == 0);

  CHECK(volume(box3()) == 1);
  auto tetra = make_polytope(3, {pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
  CHECK(volume(tetra) == Rat(1, 6));
  // flat 3D set
  CHECK(volume(make_polytope(3, {pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0})})) == 0);
}

TEST_CASE("3d hulls keep only extreme points") {
  auto clutter = box3();
  std::vector<QRow> pts = clutter.vertices;
  pts.push_back(QRow{Rat(1, 2), Rat(1, 2), Rat(1, 2)});  // interior
  pts.push_back(QRow{Rat(1, 2), Rat(1, 2), Rat(0)});     // facet interior
  pts.push_back(QRow{Rat(1, 2), Rat(0), Rat(0)});        // edge midpoint
  auto hull = make_polytope(3, pts);
  CHECK(hull.vertices.size() == 8);
  CHECK(volume(hull) == 1);
}

TEST_CASE("minkowski sums") {
  auto seg_x = make_polytope(2, {pt({0, 0}), pt({1, 0})});
  auto seg_y = make_polytope(2, {pt({0, 0}), pt({0, 1})});
  auto sum = minkowski_sum(seg_x, seg_y);
  CHECK(sum.vertices.size() == 4);
  CHECK(volume(sum) == 1);
  CHECK_THROWS_AS(minkowski_sum(seg_x, make_polytope(1, {pt({0}), pt({1})})),
                  std::invalid_argument);
}

TEST_CASE("mixed volumes") {
  auto seg = make_polytope(1, {pt({0}), pt({1})});
  auto mv1 = mixed_volumes({seg}, 1);
  CHECK(mv1.at({1}) == 1);

  auto h = fan_hirzebruch(2);
  auto p3 = divisor_polytope(h, {0, 0, 1, 0});
  auto p4 = divisor_polytope(h, {0, 0, 0, 1});
  auto mv = mixed_volumes({p3, p4}, 2);
  CHECK(mv.count({2, 0}) == 0);  // zero mixed volume is absent
  CHECK(mv.at({1, 1}) == 1);
  CHECK(mv.at({0, 2}) == 2);

  // uniform slots give d! Vol(P)
  auto mv_uniform = mixed_volumes({p4, p4}, 2);
  CHECK(mv_uniform.at({2, 0}) == Rat(2) * volume(p4));
  CHECK(mv_uniform.at({0, 2}) == Rat(2) * volume(p4));
}

TEST_CASE("mixed volumes match the polarization oracle") {
  auto h = fan_hirzebruch(3);
  auto p3 = divisor_polytope(h, {0, 0, 1, 0});
  auto p4 = divisor_polytope(h, {0, 0, 0, 1});
  std::vector<LatticePolytope> ps{p3, p4};
  auto mv = mixed_volumes(ps, 2);
  for (const auto& alpha : monomials_of_degree(2, 2)) {
    Rat got = mv.count(alpha) ? mv.at(alpha) : Rat(0);
    CHECK(got == mixed_volume_oracle(ps, alpha, 2));
  }

  // 3D: cube and two axis segments
  auto cube = box3();
  auto sx = make_polytope(3, {pt({0, 0, 0}), pt({1, 0, 0})});
  auto sy = make_polytope(3, {pt({0, 0, 0}), pt({0, 1, 0})});
  std::vector<LatticePolytope> three{cube, sx, sy};
  auto mv3 = mixed_volumes(three, 3);
  CHECK(mv3.at({3, 0, 0}) == 6);
  CHECK(mv3.at({2, 1, 0}) == 2);
  CHECK(mv3.at({2, 0, 1}) == 2);
  CHECK(mv3.at({1, 1, 1}) == 1);
  CHECK(mv3.count({0, 2, 1}) == 0);
  for (const auto& alpha : monomials_of_degree(3, 3)) {
    Rat got = mv3.count(alpha) ? mv3.at(alpha) : Rat(0);
    CHECK(got == mixed_volume_oracle(three, alpha, 3));
  }
}

TEST_CASE("mixed volumes are symmetric and Minkowski-multilinear") {
  auto h = fan_hirzebruch(2);
  auto p3 = divisor_polytope(h, {0, 0, 1, 0});
  auto p4 = divisor_polytope(h, {0, 0, 0, 1});
  // symmetry: swapping the slots transposes the exponent
  auto ab = mixed_volumes({p3, p4}, 2);
  auto ba = mixed_volumes({p4, p3}, 2);
  for (const auto& [alpha, mv] : ab) {
    Exponent swapped{alpha[1], alpha[0]};
    CHECK(ba.at(swapped) == mv);
  }
  // additive in a multiplicity-one slot under Minkowski addition
  auto sum = minkowski_sum(p3, p4);
  auto lhs = mixed_volumes({sum, p4}, 2);
  auto a = mixed_volumes({p3, p4}, 2);
  auto b = mixed_volumes({p4, p4}, 2);
  Exponent cross{1, 1};
  CHECK(lhs.at(cross) == a.at(cross) + b.at(cross));
}

TEST_CASE("toric dual generators") {
  // mixed-volume route on the Picard basis of a Hirzebruch surface
  for (int r = 0; r <= 3; ++r) {
    auto h = fan_hirzebruch(r);
    auto g = toric_dual_generator(h, {{0, 0, 1, 0}, {0, 0, 0, 1}});
    MultiPoly expected(2);
    expected.add_term({1, 1}, 1);
    expected.add_term({0, 2}, r);
    CHECK(g.poly == expected);
  }

  auto gp1 = toric_dual_generator(fan_p1(), {{1, 0}});
  CHECK(gp1.poly == make_poly(1, {{"1", {1}}}));

  auto gp2 = toric_dual_generator(fan_p2(), {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  MultiPoly all_ones(3);
  for (const auto& alpha : monomials_of_degree(3, 2)) all_ones.add_term(alpha, 1);
  CHECK(gp2.poly == all_ones);

  CHECK_THROWS_AS(toric_dual_generator(fan_hirzebruch(1), {{0, 1, 0, 0}}), std::invalid_argument);
}

TEST_CASE("degree-map route through the jd presentation") {
  auto h2 = jd_dual_generator(fan_hirzebruch(2));
  auto expected = make_poly(4, {{"-2", {0, 2, 0, 0}},
                                {"2", {0, 0, 0, 2}},
                                {"1", {1, 1, 0, 0}},
                                {"1", {0, 1, 1, 0}},
                                {"1", {0, 0, 1, 1}},
                                {"1", {1, 0, 0, 1}}});
  CHECK(h2.poly == expected);

  // all point classes evaluate to one
  auto ring = jd_presentation(fan_hirzebruch(2));
  Exponent pos(4, 0);
  pos[0] = pos[1] = 1;
  auto rho = derive_degree_map(ring, pos);
  for (const auto& cone : fan_hirzebruch(2).max_cones) {
    Exponent pc(4, 0);
    for (int idx : cone) pc[idx] = 1;
    CHECK(rho.at(pc) == 1);
  }

  // route equality against mixed volumes on the nef rays
  auto reduced = restrict_vars(h2.poly, {2, 3});
  auto mv_route = toric_dual_generator(fan_hirzebruch(2), {{0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(reduced == mv_route.poly);

  auto p1_full = jd_dual_generator(fan_p1());
  CHECK(p1_full.poly == make_poly(2, {{"1", {1, 0}}, {"1", {0, 1}}}));
  CHECK(restrict_vars(p1_full.poly, {0}) == toric_dual_generator(fan_p1(), {{1, 0}}).poly);

  auto p2_full = jd_dual_generator(fan_p2());
  CHECK(restrict_vars(p2_full.poly, {0, 1, 2}) ==
        toric_dual_generator(fan_p2(), {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).poly);

  // dimension three: projective space, all coefficients one
  auto p3_full = jd_dual_generator(fan_p3());
  MultiPoly all_ones(4);
  for (const auto& alpha : monomials_of_degree(4, 3)) all_ones.add_term(alpha, 1);
  CHECK(p3_full.poly == all_ones);
}

TEST_CASE("volume polynomials") {
  for (int r = 0; r <= 3; ++r) {
    auto fan = fan_hirzebruch(r);
    auto full = volume_polynomial(fan);
    MultiPoly expected(4);
    expected.add_term({0, 2, 0, 0}, -r);
    expected.add_term({0, 0, 0, 2}, r);
    expected.add_term({1, 1, 0, 0}, 2);
    expected.add_term({0, 1, 1, 0}, 2);
    expected.add_term({0, 0, 1, 1}, 2);
    expected.add_term({1, 0, 0, 1}, 2);
    CHECK(full == expected);

    auto reduced = volume_polynomial(fan, {2, 3});
    MultiPoly expected_reduced(2);
    expected_reduced.add_term({0, 2}, r);
    expected_reduced.add_term({1, 1}, 2);
    CHECK(reduced == expected_reduced);
    CHECK(is_lorentzian(normalize(restrict_vars(jd_dual_generator(fan).poly, {2, 3}))));
  }
}

TEST_CASE("jd ring matches the hand-written reduced presentation") {
  // the reduced Hirzebruch ring is the annihilator of the restricted dual
  // generator
  for (int r = 0; r <= 3; ++r) {
    auto g = restrict_vars(jd_dual_generator(fan_hirzebruch(r)).poly, {2, 3});
    auto ann = annihilator(InversePoly{g}, {1, 1}, 3);
    auto ring = covol::testing::ring_hirzebruch_reduced(r);
    PresentedRing from_ann{{1, 1}, ann, 2};
    for (int nu = 0; nu <= 3; ++nu) {
      CHECK(graded_basis(from_ann, nu).ideal_hnf == graded_basis(ring, nu).ideal_hnf);
    }
  }
}
