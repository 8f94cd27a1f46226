#include <doctest.h>

#include "diagmaps/monoids.hpp"
#include "diagmaps/rng.hpp"
#include "diagmaps/spheres.hpp"

using namespace diagmaps;

TEST_CASE("the four canonical matrices and their table") {
  NMatrix i = NMatrix::identity();
  NMatrix t = NMatrix::interchange();
  NMatrix p1 = NMatrix::project_first();
  NMatrix p2 = NMatrix::project_second();

  CHECK(p1 * t == p2);
  CHECK(t * t == i);
  CHECK(p1 * p2 == p2);
  CHECK(p2 * p1 == p1);
  CHECK(p2 * t == p1);

  // The full table, row ∘ column.
  const char* expected[4][4] = {{"I", "T", "P'", "P''"},
                                {"T", "I", "P'", "P''"},
                                {"P'", "P''", "P'", "P''"},
                                {"P''", "P'", "P'", "P''"}};
  auto table = m_multiplication_table();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(table[r][c].display_name() == expected[r][c]);
}

TEST_CASE("general N arithmetic") {
  NMatrix a(2, -1, 0, 1);
  NMatrix b(0, 1, 1, 0);
  CHECK(a * b == NMatrix(-1, 2, 1, 0));
  CHECK_THROWS_AS(NMatrix(1, 1, 0, 1), DomainError);
  // Closure: random products keep row sums 1 (checked by the constructor).
  Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    Int a1 = rng.uniform(-50, 50), b1 = rng.uniform(-50, 50);
    Int c1 = rng.uniform(-50, 50), d1 = rng.uniform(-50, 50);
    NMatrix m1(a1, Int(1) - a1, b1, Int(1) - b1);
    NMatrix m2(c1, Int(1) - c1, d1, Int(1) - d1);
    CHECK_NOTHROW((void)(m1 * m2));
  }
}

TEST_CASE("left and right actions") {
  FgAbGroup v = v_group(3);  // Z/12
  Element x = v.element({Int(5)});
  Element y = v.element({Int(7)});
  BimodulePair p(x, y);

  CHECK(left_action(NMatrix::identity(), p) == p);
  CHECK(left_action(NMatrix::interchange(), p) == BimodulePair(y, x));
  CHECK(left_action(NMatrix::project_first(), p) == BimodulePair(x, x));

  CHECK(right_action(p, NMatrix::identity(), 3) == p);
  // n odd: scalar of T is 0 + (-1)(1)(1) = -1.
  CHECK(right_action(p, NMatrix::interchange(), 3) == BimodulePair(-x, -y));
  CHECK(right_action(p, NMatrix::project_first(), 3) == BimodulePair(x.times(0), y.times(0)));
}

TEST_CASE("right-action scalar is det for odd n and permanent for even n") {
  Rng rng(17);
  for (int k = 0; k < 100; ++k) {
    Int a1 = rng.uniform(-50, 50), b1 = rng.uniform(-50, 50);
    NMatrix m(a1, Int(1) - a1, b1, Int(1) - b1);
    Int det = m.a1() * m.b2() - m.b1() * m.a2();
    Int perm = m.a1() * m.b2() + m.b1() * m.a2();
    CHECK(right_action_scalar(m, 3) == det);
    CHECK(right_action_scalar(m, 5) == det);
    CHECK(right_action_scalar(m, 2) == perm);
    CHECK(right_action_scalar(m, 4) == perm);
  }
}

TEST_CASE("composition in the split extension") {
  FgAbGroup v2 = v_group(2);
  auto elt = [&](const NMatrix& m, long long x, long long y) {
    return ExtElement{2, m, BimodulePair(v2.element({Int(x)}), v2.element({Int(y)}))};
  };

  SUBCASE("identity law") {
    ExtElement e = elt(NMatrix::interchange(), 1, 0);
    CHECK(mn_compose(mn_identity(2), e).pair == e.pair);
    CHECK(mn_compose(e, mn_identity(2)).pair == e.pair);
  }
  SUBCASE("(T,(x,y)) o (T,(x',y')) = (I,(y'+x, x'+y)) for n = 2") {
    ExtElement a = elt(NMatrix::interchange(), 1, 0);
    ExtElement b = elt(NMatrix::interchange(), 0, 1);
    ExtElement c = mn_compose(a, b);
    CHECK(c.m == NMatrix::identity());
    CHECK(c.pair == BimodulePair(v2.element({Int(1) + Int(1)}), v2.element({Int(0)})));
  }
  SUBCASE("(P',0) o (P'',0) = (P'',0)") {
    ExtElement c = mn_compose(elt(NMatrix::project_first(), 0, 0), elt(NMatrix::project_second(), 0, 0));
    CHECK(c.m == NMatrix::project_second());
    CHECK(c.pair == BimodulePair(v2.zero(), v2.zero()));
  }
  SUBCASE("errors") {
    ExtElement a = elt(NMatrix::identity(), 0, 0);
    FgAbGroup v3 = v_group(3);
    ExtElement b{3, NMatrix::identity(), BimodulePair(v3.zero(), v3.zero())};
    CHECK_THROWS_AS(mn_compose(a, b), MixedDimensionError);
    ExtElement outside{2, NMatrix(2, -1, 0, 1), BimodulePair(v2.zero(), v2.zero())};
    CHECK_THROWS_AS(mn_compose(a, outside), NotInMError);
    CHECK_THROWS_AS(mn_compose(b, b), DomainError);  // odd n without assume_split
    CHECK_NOTHROW(mn_compose(b, b, true));
  }
}

TEST_CASE("split-candidate composition is associative for odd n") {
  Rng rng(29);
  FgAbGroup v = v_group(3);
  std::vector<Element> elems = v.enumerate_elements();
  for (int k = 0; k < 60; ++k) {
    auto rand_ext = [&] {
      Int a1 = rng.uniform(-9, 9), b1 = rng.uniform(-9, 9);
      return ExtElement{3, NMatrix(a1, Int(1) - a1, b1, Int(1) - b1),
                        BimodulePair(elems[rng.index(elems.size())], elems[rng.index(elems.size())])};
    };
    ExtElement a = rand_ext(), b = rand_ext(), c = rand_ext();
    ExtElement lhs = mn_compose(mn_compose(a, b, true), c, true);
    ExtElement rhs = mn_compose(a, mn_compose(b, c, true), true);
    CHECK(lhs.m == rhs.m);
    CHECK(lhs.pair == rhs.pair);
  }
}

TEST_CASE("bimodule axioms") {
  SUBCASE("M scope passes exhaustively for n = 2..5") {
    for (int n = 2; n <= 5; ++n) {
      BimoduleReport r = check_bimodule_axioms(n, BimoduleScope::m_only);
      CAPTURE(n);
      CHECK(r.passed);
    }
  }
  SUBCASE("N scope passes for odd n on 1000 seeded samples") {
    CHECK(check_bimodule_axioms(3, BimoduleScope::all_of_n, 1000, kDefaultSeed).passed);
    CHECK(check_bimodule_axioms(5, BimoduleScope::all_of_n, 1000, kDefaultSeed).passed);
  }
  SUBCASE("N scope finds a scalar counterexample for even n") {
    BimoduleReport r = check_bimodule_axioms(2, BimoduleScope::all_of_n, 1000, kDefaultSeed);
    CHECK_FALSE(r.passed);
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->lhs_scalar.has_value());
    // Deterministic given the seed.
    BimoduleReport r2 = check_bimodule_axioms(2, BimoduleScope::all_of_n, 1000, kDefaultSeed);
    CHECK(r.counterexample->m1 == r2.counterexample->m1);
    CHECK(r.counterexample->m2 == r2.counterexample->m2);
  }
  SUBCASE("the explicit permanent counterexample") {
    NMatrix m1(1, 0, 2, -1);
    NMatrix m2(-1, 2, 2, -1);
    CHECK(m1 * m2 == NMatrix(-1, 2, -4, 5));
    CHECK(right_action_scalar(m1 * m2, 2) == -13);
    CHECK(right_action_scalar(m1, 2) * right_action_scalar(m2, 2) == -5);
  }
}
