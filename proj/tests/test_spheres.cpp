#include <doctest.h>

#include "diagmaps/spheres.hpp"

using namespace diagmaps;

namespace {
std::string canon(const FgAbGroup& g) { return g.canonical_form().to_string(); }
}  // namespace

TEST_CASE("sphere table loads and self-checks") {
  const SphereTable& t = SphereTable::builtin();
  CHECK(t.min_n() == 2);
  CHECK(t.max_n() == 7);
  CHECK_NOTHROW(t.self_check());
  CHECK(canon(t.entry(2).pi_n1) == "Z");
  CHECK(canon(t.entry(3).pi_n1) == "Z/2");
  CHECK(canon(t.entry(2).pi_2n) == "Z/2");
  CHECK(canon(t.entry(3).pi_2n) == "Z/12");
  CHECK(canon(t.entry(4).pi_2n) == "Z/2 x Z/2");
  CHECK(canon(t.entry(7).pi_2n) == "Z/120");
  CHECK(t.entry(2).eta_bracket.is_zero());
  CHECK(t.entry(3).eta_bracket.is_zero());
  CHECK_FALSE(t.entry(4).eta_bracket.is_zero());
  CHECK_FALSE(t.entry(5).eta_bracket.is_zero());
  CHECK(t.entry(6).ii_order == WhiteheadSquareOrder::infinite);
  CHECK(t.entry(7).ii_order == WhiteheadSquareOrder::trivial);
  CHECK_THROWS_AS(t.entry(1), UnsupportedDimensionError);
  CHECK_THROWS_AS(t.entry(99), UnsupportedDimensionError);
}

TEST_CASE("V_n values") {
  CHECK(canon(v_group(2)) == "Z/2");   // quotient by 0
  CHECK(canon(v_group(3)) == "Z/12");  // quotient by 0
  CHECK(canon(v_group(4)) == "Z/2");   // (Z/2)^2 by one order-2 element
  CHECK(v_group(5).is_trivial());      // Z/2 by its generator
  CHECK_THROWS_AS(v_group(1), UnsupportedDimensionError);
}

TEST_CASE("built-in sphere targets") {
  TargetData s2 = target_sphere(2);
  CHECK(canon(s2.pi_n) == "Z");
  CHECK(canon(s2.pi_n1) == "Z");
  CHECK(canon(s2.pi_2n) == "Z/2");
  CHECK(s2.p1n[0][0].is_zero());  // [eta_3, i_2] = 0
  CHECK(s2.tau_sign == -1);
  CHECK_NOTHROW(s2.validate());

  TargetData s5 = target_sphere(5);
  CHECK(s5.tau_sign == 1);
  CHECK_FALSE(s5.p1n[0][0].is_zero());

  TargetData s6 = target_sphere(6);
  CHECK(canon(s6.pi_2n1) == "Z");  // [i,i] of infinite order

  CHECK_THROWS_AS(target_sphere(8), UnsupportedDimensionError);
}

TEST_CASE("built-in product targets") {
  TargetData p4 = target_sphere_product(4);
  CHECK(canon(p4.pi_n) == "Z^2");
  CHECK(canon(p4.pi_2n) == "Z/2 x Z/2 x Z/2 x Z/2");
  CHECK(p4.tau_sign == -1);
  // Mixed Whitehead components vanish.
  Element g1 = p4.pi_n.generator(0);
  Element g2 = p4.pi_n.generator(1);
  CHECK(p4.whitehead_pnn(g1, g2).is_zero());
  CHECK_FALSE(p4.whitehead_pnn(g1, g1).is_zero());
  CHECK_NOTHROW(p4.validate());

  TargetData p2 = target_sphere_product(2);
  CHECK(p2.whitehead_pnn(p2.pi_n.generator(0), p2.pi_n.generator(1)).is_zero());
}

TEST_CASE("target validation rejects broken pairing tables") {
  TargetData t = target_sphere(4);
  // A value of order 4 cannot be [i,i]-compatible with graded symmetry... but
  // the cheap breakage is a pairing value that ignores the group relations:
  // send the order-2 generator of pi_n1 to a non-2-torsion element.
  TargetData bad = t;
  bad.pi_2n = FgAbGroup::cyclic(4);
  bad.p1n = {{bad.pi_2n.element({Int(1)})}};  // 2*(1) != 0 in Z/4
  CHECK_THROWS_AS(bad.validate(), DomainError);

  TargetData asym = target_sphere_product(2);
  asym.pnn[0][1] = asym.pnn[0][0];  // breaks symmetry against [1][0] = 0
  CHECK_THROWS_AS(asym.validate(), DomainError);
}
