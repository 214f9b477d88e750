#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "pomkit/monoid.hpp"

using namespace pomkit;

namespace {

// independent congruence oracle: naive fixpoint on the full relation matrix
std::vector<int> congruence_oracle(const FiniteMonoid& m,
                                   const std::vector<std::pair<int, int>>& pairs) {
  int n = m.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) rel[i][i] = true;
  for (auto [a, b] : pairs) rel[a][b] = rel[b][a] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!rel[a][b]) continue;
        for (int c = 0; c < n; ++c) {
          for (auto [u, v] : {std::pair{m.add(c, a), m.add(c, b)},
                              std::pair{m.add(a, c), m.add(b, c)}})
            if (!rel[u][v]) rel[u][v] = rel[v][u] = true, changed = true;
          if (rel[b][c] && !rel[a][c]) rel[a][c] = rel[c][a] = true, changed = true;
        }
      }
  }
  std::vector<int> cls(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    for (int j = 0; j < n; ++j)
      if (rel[i][j]) cls[j] = next;
    ++next;
  }
  return cls;
}

}  // namespace

TEST_CASE("monoid validation accepts the worked examples") {
  CHECK(fixtures::ex22().size() == 5);
  CHECK(fixtures::ex23().identity() == 0);
  CHECK(fixtures::trivial().size() == 1);
  CHECK(fixtures::comm3().add(2, 2) == 1);
}

TEST_CASE("monoid validation reports the first violation") {
  CHECK_THROWS_WITH_AS(validate_monoid({{0, 5}, {1, 1}}, 0), doctest::Contains("out of range"),
                       Error);
  try {
    validate_monoid({{0, 1}, {0, 1}}, 0);
    FAIL("expected identity violation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IdentityLawViolation);
    CHECK(e.args() == std::vector<long long>{1});
  }

  // lexicographically least violating triple; (2,2,2) also violates
  std::vector<std::vector<int>> t{{0, 1, 2}, {1, 1, 2}, {2, 1, 1}};
  try {
    validate_monoid(t, 0);
    FAIL("expected associativity violation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AssociativityViolation);
    CHECK(e.args() == std::vector<long long>{2, 1, 2});
  }
  CHECK(t[t[2][2]][2] != t[2][t[2][2]]);
}

TEST_CASE("identity index need not be zero") {
  FiniteMonoid m = validate_monoid({{1, 0}, {0, 1}}, 1);  // Z2 with identity at 1
  CHECK(m.identity() == 1);
  CHECK(m.add(0, 0) == 1);
}

TEST_CASE("commutativity") {
  CHECK(!is_commutative(fixtures::ex22()));
  CHECK(commutativity_witness(fixtures::ex22()) == std::pair{1, 2});
  CHECK(fixtures::ex22().add(1, 2) == 4);
  CHECK(fixtures::ex22().add(2, 1) == 2);
  CHECK(is_commutative(fixtures::trivial()));
  CHECK(is_commutative(fixtures::comm3()));
}

TEST_CASE("submonoid closure") {
  FiniteMonoid m = fixtures::ex22();
  CHECK(submonoid_closure(m, {1}).members() == std::vector<int>{0, 1});
  CHECK(submonoid_closure(m, {}).members() == std::vector<int>{0});
  CHECK(submonoid_closure(m, {2}).members() == std::vector<int>{0, 2, 4});
}

TEST_CASE("submonoid construction rejects junk") {
  FiniteMonoid m = fixtures::ex22();
  CHECK_THROWS_AS(Submonoid(m, {1, 2}), Error);   // no identity
  CHECK_THROWS_AS(Submonoid(m, {0, 2}), Error);   // 2+2=4 escapes
  CHECK_NOTHROW(Submonoid(m, {0, 2, 4}));
}

TEST_CASE("kernel") {
  FiniteMonoid m = fixtures::ex22();
  CHECK(kernel(identity_hom(m)).members() == std::vector<int>{0});

  MonoidHom to_trivial(m, fixtures::trivial(), std::vector<int>(5, 0));
  CHECK(kernel(to_trivial).members() == std::vector<int>{0, 1, 2, 3, 4});

  // second projection of a direct product picks out X x {e}
  FiniteMonoid x = fixtures::z2(), b = fixtures::sl2();
  FiniteMonoid prod = fixtures::direct_product(x, b);
  std::vector<int> pmap(prod.size());
  for (int i = 0; i < prod.size(); ++i) pmap[i] = i % b.size();
  CHECK(kernel(MonoidHom(prod, b, pmap)).members() == std::vector<int>{0, 2});
}

TEST_CASE("hom validation") {
  FiniteMonoid m = fixtures::ex22();
  CHECK_NOTHROW(identity_hom(m));
  CHECK_NOTHROW(MonoidHom(m, m, {0, 0, 0, 0, 0}));
  CHECK_NOTHROW(MonoidHom(m, m, {0, 1, 1, 1, 1}));  // pair scan says this one is a hom
  try {
    MonoidHom(m, m, {0, 1, 2, 3, 0});
    FAIL("expected NotAHom");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAHom);
    CHECK(e.args() == std::vector<long long>{1, 2});
  }
}

TEST_CASE("hom composition") {
  FiniteMonoid m = fixtures::ex22();
  MonoidHom c(m, m, {0, 1, 1, 1, 1});
  CHECK(compose_hom(identity_hom(m), c) == c);
  CHECK(compose_hom(c, identity_hom(m)) == c);
  MonoidHom to_trivial(m, fixtures::trivial(), std::vector<int>(5, 0));
  CHECK_THROWS_AS(compose_hom(to_trivial, c), Error);
}

TEST_CASE("congruence closure matches the naive fixpoint oracle") {
  FiniteMonoid m = fixtures::ex22();

  Congruence discrete = congruence_closure(m, {});
  CHECK(discrete.num_classes() == 5);

  Congruence merged = congruence_closure(fixtures::z2(), {{0, 1}});
  CHECK(merged.num_classes() == 1);

  Congruence c = congruence_closure(m, {{2, 3}});
  CHECK(c.classes() == congruence_oracle(m, {{2, 3}}));
  CHECK(c.classes() == std::vector<int>{0, 1, 2, 2, 3});

  // closure under translation, several seeds, against the oracle
  for (auto pairs : std::vector<std::vector<std::pair<int, int>>>{
           {{1, 2}}, {{1, 4}}, {{0, 4}}, {{2, 3}, {1, 2}}})
    CHECK(congruence_closure(m, pairs).classes() == congruence_oracle(m, pairs));
}

TEST_CASE("quotient") {
  FiniteMonoid m = fixtures::ex22();

  auto iso = quotient(m, congruence_closure(m, {}));
  CHECK(iso.monoid.size() == 5);
  CHECK(iso.projection.map() == std::vector<int>{0, 1, 2, 3, 4});

  auto collapsed = quotient(m, Congruence(m, {0, 0, 0, 0, 0}));
  CHECK(collapsed.monoid.size() == 1);

  auto z2q = quotient(fixtures::z2(), congruence_closure(fixtures::z2(), {{0, 1}}));
  CHECK(z2q.monoid.size() == 1);
  CHECK(z2q.projection.map() == std::vector<int>{0, 0});

  // merging classes must respect the operation
  CHECK_THROWS_AS(quotient(fixtures::comm3(), Congruence(fixtures::comm3(), {0, 0, 1})),
                  Error);

  // q(a) = q(b) exactly when a and b share a class
  Congruence c = congruence_closure(m, {{2, 3}});
  auto q = quotient(m, c);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      CHECK((q.projection(a) == q.projection(b)) == (c.class_of(a) == c.class_of(b)));
}

TEST_CASE("monoid coequalizer") {
  FiniteMonoid z2 = fixtures::z2();

  auto same = coequalizer_mon(identity_hom(z2), identity_hom(z2));
  CHECK(same.monoid.size() == 2);

  MonoidHom from_trivial(fixtures::trivial(), z2, {0});
  auto untouched = coequalizer_mon(from_trivial, from_trivial);
  CHECK(untouched.monoid.size() == 2);

  MonoidHom constant(z2, z2, {0, 0});
  auto squashed = coequalizer_mon(identity_hom(z2), constant);
  CHECK(squashed.monoid.size() == 1);

  // couniversality, checked exhaustively against small targets
  for (const FiniteMonoid& target : {fixtures::z2(), fixtures::sl2(), fixtures::comm3()}) {
    // candidate homs z2 -> target merging id and constant
    for (int image = 0; image < target.size(); ++image) {
      std::vector<int> map{target.identity(), image};
      bool hom = map[z2.add(1, 1)] == target.add(image, image) &&
                 map[0] == target.identity();
      if (!hom) continue;
      bool merges = map[0] == map[1];
      int factorizations = 0;
      for (int t1 = 0; t1 < target.size(); ++t1) {
        // t : 1-element quotient -> target with t(q(a)) = map(a)
        std::vector<int> t{t1};
        if (t[0] != target.identity()) continue;  // must be a hom
        bool commutes = true;
        for (int a = 0; a < 2; ++a)
          if (t[squashed.projection(a)] != map[a]) commutes = false;
        if (commutes) ++factorizations;
      }
      CHECK(factorizations == (merges ? 1 : 0));
    }
  }
}

TEST_CASE("endomorphism monoids") {
  auto end_trivial = endomorphism_monoid(fixtures::trivial());
  CHECK(end_trivial.monoid.size() == 1);

  auto end_z2 = endomorphism_monoid(fixtures::z2());
  CHECK(end_z2.monoid.size() == 2);
  CHECK(end_z2.maps == std::vector<std::vector<int>>{{0, 0}, {0, 1}});
  CHECK(end_z2.monoid.identity() == 1);  // the identity map sorts after the constant

  auto end_sl2 = endomorphism_monoid(fixtures::sl2());
  CHECK(end_sl2.monoid.size() == 2);

  // composition convention: (f + g)(x) = f(g(x))
  auto end_c3 = endomorphism_monoid(fixtures::chain3());
  for (int i = 0; i < end_c3.monoid.size(); ++i)
    for (int j = 0; j < end_c3.monoid.size(); ++j) {
      int k = end_c3.monoid.add(i, j);
      for (int x = 0; x < 3; ++x)
        CHECK(end_c3.maps[k][x] == end_c3.maps[i][end_c3.maps[j][x]]);
    }

  FiniteMonoid big = validate_monoid(
      {{0, 1, 2, 3, 4, 5, 6},
       {1, 1, 2, 3, 4, 5, 6},
       {2, 2, 2, 3, 4, 5, 6},
       {3, 3, 3, 3, 4, 5, 6},
       {4, 4, 4, 4, 4, 5, 6},
       {5, 5, 5, 5, 5, 5, 6},
       {6, 6, 6, 6, 6, 6, 6}},
      0);
  CHECK_THROWS_AS(endomorphism_monoid(big), Error);
}
