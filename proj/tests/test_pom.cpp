#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "pomkit/enumerate.hpp"
#include "pomkit/pom.hpp"

using namespace pomkit;

namespace {

using PairSet = std::set<std::pair<int, int>>;

PairSet pairs_of(const Preorder& r) {
  auto v = r.nonreflexive_pairs();
  return PairSet(v.begin(), v.end());
}

PreorderedMonoid pm22() { return {fixtures::ex22(), fixtures::ex22_order()}; }
PreorderedMonoid pm23() { return {fixtures::ex23(), fixtures::ex23_order()}; }
PreorderedMonoid pm24() { return {fixtures::ex22(), fixtures::ex24_order()}; }
PreorderedMonoid pmc3() { return {fixtures::comm3(), fixtures::comm3_order()}; }

}  // namespace

TEST_CASE("preordered monoid construction checks compatibility") {
  CHECK_NOTHROW(pm22());
  CHECK_NOTHROW(pm23());
  Preorder induced23 = Preorder::closure_from_edges(
      5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 1}, {3, 2}, {3, 4}});
  CHECK_THROWS_AS(PreorderedMonoid(fixtures::ex23(), induced23), Error);
  CHECK_THROWS_AS(PreorderedMonoid(fixtures::ex22(), Preorder::discrete(4)), Error);
}

TEST_CASE("positive cones") {
  CHECK(pm22().cone().members() == std::vector<int>{0, 1, 2, 3, 4});
  PreorderedMonoid discrete(fixtures::ex22(), Preorder::discrete(5));
  CHECK(discrete.cone().members() == std::vector<int>{0});
  CHECK(pm24().cone().members() == std::vector<int>{0, 1});
}

TEST_CASE("induced orders") {
  FiniteMonoid m = fixtures::ex22();
  Submonoid full(m, {0, 1, 2, 3, 4});

  PairSet right_expected{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                         {1, 3}, {1, 4}, {2, 4}, {3, 4}};
  CHECK(pairs_of(induced_right(m, full)) == right_expected);

  CHECK(induced_right(m, Submonoid(m, {0})) == Preorder::discrete(5));

  FiniteMonoid m23 = fixtures::ex23();
  Submonoid full23(m23, {0, 1, 2, 3, 4});
  PairSet right23{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 1}, {3, 2}, {3, 4}};
  CHECK(pairs_of(induced_right(m23, full23)) == right23);

  PairSet left23{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4},
                 {2, 1}, {2, 4}, {3, 1}, {3, 2}, {3, 4}};
  CHECK(pairs_of(induced_left(m23, full23)) == left23);

  CHECK(induced_left(m23, Submonoid(m23, {0})) == Preorder::discrete(5));
}

TEST_CASE("commutative monoids induce the same order on both sides") {
  FiniteMonoid m = fixtures::comm3();
  for (const Submonoid& s : collect_submonoids(m, SubmonoidFilter::none)) {
    CHECK(induced_right(m, s) == induced_left(m, s));
    CHECK(is_compatible(m, induced_right(m, s)).compatible);
  }
}

TEST_CASE("normality") {
  FiniteMonoid m22 = fixtures::ex22();
  Submonoid full22(m22, {0, 1, 2, 3, 4});
  CHECK(is_right_normal(m22, full22).holds);

  FiniteMonoid m23 = fixtures::ex23();
  Submonoid full23(m23, {0, 1, 2, 3, 4});
  auto rn = is_right_normal(m23, full23);
  CHECK(!rn.holds);
  CHECK(rn.witness_a == 1);
  CHECK(rn.witness_elem == 2);  // 1+A = {1,2,4} but A+1 = {1,4}
  CHECK(is_left_normal(m23, full23).holds);

  auto report = is_normal(m22, Submonoid(m22, {0}));
  CHECK(report.normal);
}

TEST_CASE("green preorders relate to the induced orders by opposition") {
  FiniteMonoid m22 = fixtures::ex22();
  CHECK(greens_l_preorder(m22, Submonoid(m22, {0})) == Preorder::discrete(5));

  for (const FiniteMonoid& m : collect_monoids(3))
    for (const Submonoid& s : collect_submonoids(m, SubmonoidFilter::none)) {
      CHECK(induced_right(m, s) == greens_l_preorder(m, s).opposite());
      CHECK(induced_left(m, s) == greens_r_preorder(m, s).opposite());
    }

  for (const Submonoid& s : collect_submonoids(fixtures::comm3(), SubmonoidFilter::none))
    CHECK(greens_l_preorder(fixtures::comm3(), s) ==
          greens_r_preorder(fixtures::comm3(), s));
}

TEST_CASE("coset tables match the worked examples") {
  FiniteMonoid m22 = fixtures::ex22();
  Submonoid full22(m22, {0, 1, 2, 3, 4});
  auto rows = coset_table(m22, full22);
  CHECK(rows[0].left == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(rows[0].right == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(rows[1].left == std::vector<int>{1, 4});
  CHECK(rows[1].right == std::vector<int>{1, 2, 3, 4});
  CHECK(rows[2].left == std::vector<int>{2, 4});
  CHECK(rows[2].right == std::vector<int>{2, 4});
  CHECK(rows[3].left == std::vector<int>{3, 4});
  CHECK(rows[3].right == std::vector<int>{3, 4});
  CHECK(rows[4].left == std::vector<int>{4});
  CHECK(rows[4].right == std::vector<int>{4});

  Submonoid sub(m22, {0, 1});
  CHECK(coset_table(m22, sub)[0].left == std::vector<int>{0, 1});

  FiniteMonoid m23 = fixtures::ex23();
  auto rows23 = coset_table(m23, Submonoid(m23, {0, 1, 2, 3, 4}));
  CHECK(rows23[2].left == std::vector<int>{1, 2, 4});
  CHECK(rows23[2].right == std::vector<int>{2, 4});
  CHECK(rows23[1].left == std::vector<int>{1, 2, 4});
  CHECK(rows23[1].right == std::vector<int>{1, 4});
  CHECK(rows23[3].left == std::vector<int>{1, 2, 3, 4});
  CHECK(rows23[3].right == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("classification of the worked examples") {
  auto r22 = classify(pm22());
  CHECK(r22.compatible);
  CHECK(r22.cone == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(!r22.in_ordmon_star);
  CHECK(r22.star_witness == std::pair{2, 3});
  CHECK(r22.cone_right_normal);
  CHECK(r22.induced_right_compatible);
  CHECK(!r22.commutative);
  PairSet expected22{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}};
  CHECK(pairs_of(r22.induced_right_order) == expected22);

  auto r23 = classify(pm23());
  CHECK(!r23.cone_right_normal);
  CHECK(r23.right_normal_witness_a == 1);
  CHECK(r23.cone_left_normal);
  CHECK(!r23.induced_right_compatible);
  auto w = *r23.induced_compat_witness;
  // the failing conclusion is the membership 1 <= 2, i.e. 2 outside A+1
  FiniteMonoid m23 = fixtures::ex23();
  CHECK(m23.add(w[0], w[2]) == 1);
  CHECK(m23.add(w[1], w[3]) == 2);
  CHECK(!r23.induced_right_order.leq(1, 2));

  auto r24 = classify(pm24());
  CHECK(r24.in_ordmon_star);
  CHECK(r24.cone == std::vector<int>{0, 1});
  PairSet expected24{{0, 1}, {2, 4}, {3, 4}};
  CHECK(pairs_of(r24.induced_right_order) == expected24);

  auto rc3 = classify(pmc3());
  CHECK(rc3.commutative);
  CHECK(!rc3.in_ordmon_star);
  CHECK(rc3.star_witness == std::pair{1, 2});
  PairSet expectedc3{{0, 1}, {0, 2}, {2, 1}};
  CHECK(pairs_of(rc3.induced_right_order) == expectedc3);
  CHECK(rc3.induced_right_compatible);
}

TEST_CASE("prop 2.1 and prop 2.5 over all small preordered monoids") {
  for (int n = 1; n <= 3; ++n)
    for (const FiniteMonoid& m : collect_monoids(n))
      for (const Preorder& order : collect_compatible_preorders(m)) {
        PreorderedMonoid pm(m, order);
        Preorder induced = induced_right(m, pm.cone());
        CHECK(is_contained(induced, order).contained);
        CHECK(is_compatible(m, induced).compatible == is_right_normal(m, pm.cone()).holds);
      }
}

TEST_CASE("coreflection") {
  auto core = coreflect(pm22());
  PairSet expected{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}};
  CHECK(pairs_of(core.object.order()) == expected);
  CHECK(core.object.cone().members() == pm22().cone().members());
  CHECK(core.arrow == identity_hom(fixtures::ex22()));

  // idempotent
  auto twice = coreflect(core.object);
  CHECK(twice.object == core.object);

  // objects already induced are fixed
  CHECK(coreflect(pm24()).object == pm24());

  try {
    coreflect(pm23());
    FAIL("expected ConeNotRightNormal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConeNotRightNormal);
    CHECK(e.args()[0] == 1);
  }
}

TEST_CASE("coreflection is universal for maps out of star objects") {
  PreorderedMonoid target = pm22();
  auto core = coreflect(target);

  CHECK(check_coreflection_universal(target, core.object, identity_hom(fixtures::ex22()))
            .factors);

  PreorderedMonoid trivial(fixtures::trivial(), Preorder::discrete(1));
  MonoidHom from_trivial(fixtures::trivial(), fixtures::ex22(), {0});
  CHECK(check_coreflection_universal(target, trivial, from_trivial).factors);

  // every monotone hom out of the induced-order example factors
  PreorderedMonoid source = pm24();
  int monotone_count = 0;
  for (const MonoidHom& h : collect_homs(fixtures::ex22(), fixtures::ex22())) {
    bool monotone = true;
    for (int a = 0; a < 5 && monotone; ++a)
      for (int b = 0; b < 5 && monotone; ++b)
        if (source.order().leq(a, b) && !target.order().leq(h(a), h(b))) monotone = false;
    if (!monotone) continue;
    ++monotone_count;
    CHECK(check_coreflection_universal(target, source, h).factors);
  }
  CHECK(monotone_count > 0);

  // a non-monotone candidate is rejected up front
  CHECK_THROWS_AS(check_coreflection_universal(
                      PreorderedMonoid(fixtures::ex22(), Preorder::discrete(5)), pm24(),
                      identity_hom(fixtures::ex22())),
                  Error);
}
