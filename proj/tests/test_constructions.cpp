#include <doctest.h>

#include "fixtures.hpp"
#include "pomkit/constructions.hpp"
#include "pomkit/enumerate.hpp"

using namespace pomkit;

namespace {

PreorderedSet chain2() {
  return {2, Preorder::closure_from_edges(2, {{0, 1}})};
}

PreorderedMonoid pm22() { return {fixtures::ex22(), fixtures::ex22_order()}; }

}  // namespace

TEST_CASE("free fragment over a singleton") {
  PreorderedSet x{1, Preorder::discrete(1)};
  FreeFragment f = free_fragment(x, 2);
  CHECK(f.words() == std::vector<Word>{{}, {0}, {0, 0}});
  CHECK(!f.leq({}, {0}));
  CHECK(!f.leq({0}, {0, 0}));
  CHECK(f.leq({0}, {0}));
}

TEST_CASE("free fragment over a two-chain") {
  FreeFragment f = free_fragment(chain2(), 2);
  CHECK(f.words().size() == 7);
  CHECK(f.leq({0, 0}, {0, 1}));
  CHECK(f.leq({0, 1}, {1, 1}));
  CHECK(f.leq({0, 0}, {1, 1}));
  CHECK(!f.leq({0}, {0, 0}));
  CHECK(!f.leq({1}, {0}));

  FreeFragment g = free_fragment(chain2(), 1);
  CHECK(g.words() == std::vector<Word>{{}, {0}, {1}});
  CHECK(g.leq({0}, {1}));
}

TEST_CASE("free fragment guard") {
  PreorderedSet big{10, Preorder::discrete(10)};
  CHECK_THROWS_AS(free_fragment(big, 6), Error);
}

TEST_CASE("word order is compatible with concatenation") {
  for (const PreorderedSet& base :
       {chain2(), PreorderedSet{2, Preorder::discrete(2)},
        PreorderedSet{3, Preorder::closure_from_edges(3, {{0, 1}, {1, 2}})}}) {
    FreeFragment f = free_fragment(base, 3);
    const auto& words = f.words();
    for (const Word& u : words)
      for (const Word& u2 : words) {
        if (!f.leq(u, u2)) continue;
        for (const Word& v : words) {
          if (u.size() + v.size() > 3) continue;
          for (const Word& v2 : words) {
            if (!f.leq(v, v2)) continue;
            Word uv = u, u2v2 = u2;
            uv.insert(uv.end(), v.begin(), v.end());
            u2v2.insert(u2v2.end(), v2.begin(), v2.end());
            CHECK(f.leq(uv, u2v2));
          }
        }
      }
  }
}

TEST_CASE("universal extension folds over the word") {
  PreorderedMonoid target = pm22();
  PreorderedSet x = chain2();

  CHECK(universal_extend(x, target, {1, 2}, {}) == 0);
  CHECK(universal_extend(x, target, {1, 2}, {0, 1}) == 4);  // 1+2
  CHECK(universal_extend(x, target, {1, 2}, {0}) == 1);
  CHECK(universal_extend(x, target, {1, 2}, {1}) == 2);

  // 2 <= 1 fails in the target, so x0 <= x1 cannot map to (2, 1)
  CHECK_THROWS_AS(universal_extend(x, target, {2, 1}, {0}), Error);
}

TEST_CASE("universal extension is the unique monotone multiplicative extension") {
  std::vector<PreorderedMonoid> targets{
      {fixtures::comm3(), fixtures::comm3_order()},
      {fixtures::ex22(), fixtures::ex24_order()},
  };
  for (const auto& target : targets) {
    int nt = target.monoid().size();
    for (const PreorderedSet& base : {chain2(), PreorderedSet{2, Preorder::discrete(2)}}) {
      FreeFragment fragment = free_fragment(base, 2);
      const auto& words = fragment.words();
      // all maps base -> target
      for (int m0 = 0; m0 < nt; ++m0)
        for (int m1 = 0; m1 < nt; ++m1) {
          std::vector<int> f{m0, m1};
          bool monotone = true;
          for (int a = 0; a < 2 && monotone; ++a)
            for (int b = 0; b < 2 && monotone; ++b)
              if (base.order.leq(a, b) && !target.order().leq(f[a], f[b]))
                monotone = false;
          if (!monotone) continue;

          // the fold is monotone on the fragment
          for (const Word& u : words)
            for (const Word& v : words)
              if (fragment.leq(u, v))
                CHECK(target.order().leq(universal_extend(base, target, f, u),
                                         universal_extend(base, target, f, v)));

          // among all multiplicative extensions restricting to f on
          // singletons and monotone on the fragment, only the fold survives
          int survivors = 0;
          for (int g0 = 0; g0 < nt; ++g0)
            for (int g1 = 0; g1 < nt; ++g1) {
              std::vector<int> g{g0, g1};
              auto extend = [&](const Word& w) {
                int acc = target.monoid().identity();
                for (int letter : w) acc = target.monoid().add(acc, g[letter]);
                return acc;
              };
              if (extend({0}) != f[0] || extend({1}) != f[1]) continue;
              bool monotone_ext = true;
              for (const Word& u : words)
                for (const Word& v : words)
                  if (fragment.leq(u, v) && !target.order().leq(extend(u), extend(v)))
                    monotone_ext = false;
              if (!monotone_ext) continue;
              ++survivors;
              for (const Word& w : words)
                CHECK(extend(w) == universal_extend(base, target, f, w));
            }
          CHECK(survivors == 1);
        }
    }
  }
}

TEST_CASE("discrete and total lifts") {
  PreorderedMonoid d = lift_discrete(fixtures::ex22());
  CHECK(d.cone().members() == std::vector<int>{0});

  PreorderedMonoid t = lift_total(fixtures::ex22());
  CHECK(t.cone().members() == std::vector<int>{0, 1, 2, 3, 4});

  CHECK(lift_discrete(fixtures::trivial()) == lift_total(fixtures::trivial()));
}

TEST_CASE("preordered coequalizer") {
  PreorderedMonoid z2 = lift_total(fixtures::z2());

  auto same = coequalizer_ordmon(z2, z2, identity_hom(fixtures::z2()),
                                 identity_hom(fixtures::z2()));
  CHECK(same.object.monoid().size() == 2);
  CHECK(same.object.order() == Preorder::total(2));

  PreorderedMonoid trivial = lift_discrete(fixtures::trivial());
  MonoidHom inc(fixtures::trivial(), fixtures::z2(), {0});
  auto untouched = coequalizer_ordmon(trivial, z2, inc, inc);
  CHECK(untouched.object.monoid().size() == 2);
  CHECK(untouched.object == z2);

  MonoidHom constant(fixtures::z2(), fixtures::z2(), {0, 0});
  auto squashed =
      coequalizer_ordmon(z2, z2, identity_hom(fixtures::z2()), constant);
  CHECK(squashed.object.monoid().size() == 1);

  // q coequalizes and is monotone
  for (int a = 0; a < 2; ++a) {
    CHECK(squashed.projection(a) == squashed.projection(fixtures::z2().add(a, 0)));
    for (int b = 0; b < 2; ++b)
      if (z2.order().leq(a, b))
        CHECK(squashed.object.order().leq(squashed.projection(a), squashed.projection(b)));
  }

  // rejects non-monotone inputs: identity from the total order down to discrete
  PreorderedMonoid z2_disc = lift_discrete(fixtures::z2());
  CHECK_THROWS_AS(coequalizer_ordmon(z2, z2_disc, identity_hom(fixtures::z2()),
                                     identity_hom(fixtures::z2())),
                  Error);
}
