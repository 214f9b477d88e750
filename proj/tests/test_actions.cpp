#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "pomkit/actions.hpp"
#include "pomkit/enumerate.hpp"

using namespace pomkit;

namespace {

ActionTable trivial_action(const FiniteMonoid& x, const FiniteMonoid& b) {
  std::vector<std::vector<int>> rows(b.size());
  for (auto& row : rows) {
    row.resize(x.size());
    for (int i = 0; i < x.size(); ++i) row[i] = i;
  }
  return {x, b, std::move(rows)};
}

// canonical xi determined by a fixed-point set
std::vector<std::vector<int>> xi_from_set(const FiniteMonoid& x, const Submonoid& pb,
                                          const std::set<std::pair<int, int>>& fixed) {
  std::vector<std::vector<int>> xi(x.size(), std::vector<int>(pb.count()));
  for (int xv = 0; xv < x.size(); ++xv)
    for (int col = 0; col < pb.count(); ++col)
      xi[xv][col] =
          fixed.count({xv, pb.members()[col]}) ? xv : x.identity();
  return xi;
}

PreorderedAction full_trivial_action(const FiniteMonoid& m) {
  Submonoid full(m, [&] {
    std::vector<int> all(m.size());
    for (int i = 0; i < m.size(); ++i) all[i] = i;
    return all;
  }());
  std::set<std::pair<int, int>> fixed;
  for (int xv = 0; xv < m.size(); ++xv)
    for (int bv = 0; bv < m.size(); ++bv) fixed.insert({xv, bv});
  return {m, m, full, full, trivial_action(m, m), xi_from_set(m, full, fixed)};
}

}  // namespace

TEST_CASE("the everything-fixed trivial action on a commutative monoid is valid") {
  PreorderedAction act = full_trivial_action(fixtures::sl2());
  auto report = validate_action(act);
  CHECK(report.a1.holds);
  CHECK(report.a2.holds);
  CHECK(report.a3.holds);
  CHECK(report.a4.holds);
  CHECK(fixed_point_set(act).pairs.size() == 4);
}

TEST_CASE("axiom shapes: cones must be right normal") {
  FiniteMonoid m23 = fixtures::ex23();
  Submonoid bad(m23, {0, 1, 2, 3, 4});
  Submonoid tiny(m23, {0});
  PreorderedAction act{m23,  m23,  tiny, bad, trivial_action(m23, m23),
                       std::vector<std::vector<int>>(
                           5, std::vector<int>(5, 0))};
  CHECK_THROWS_AS(validate_action(act), Error);
}

TEST_CASE("a removed closure pair fails A3 with that witness") {
  FiniteMonoid z2 = fixtures::z2();
  Submonoid px(z2, {0});
  Submonoid pb(z2, {0, 1});
  // (1,1) fixed but its product with (0,1) leads outside the set
  std::set<std::pair<int, int>> fixed{{0, 0}, {0, 1}, {1, 1}};
  PreorderedAction act{z2, z2, px, pb, trivial_action(z2, z2), xi_from_set(z2, pb, fixed)};
  auto report = validate_action(act);
  CHECK(report.a1.holds);
  CHECK(report.a2.holds);
  CHECK(!report.a3.holds);
  CHECK(report.a3.witness == std::vector<int>{0, 1, 1, 1});
}

TEST_CASE("A4 is exactly right normality of the fixed-point cone") {
  FiniteMonoid z2 = fixtures::z2(), sl2 = fixtures::sl2();
  for (const FiniteMonoid& x : {z2, sl2})
    for (const FiniteMonoid& b : {z2, sl2})
      for (const Submonoid& px : collect_submonoids(x, SubmonoidFilter::right_normal))
        for (const Submonoid& pb : collect_submonoids(b, SubmonoidFilter::right_normal)) {
          EndomorphismMonoid end = endomorphism_monoid(x);
          for (const MonoidHom& hom : collect_homs(b, end.monoid)) {
            std::vector<std::vector<int>> rows(b.size());
            for (int bv = 0; bv < b.size(); ++bv) rows[bv] = end.maps[hom(bv)];
            ActionTable phi{x, b, rows};
            SplitExtension sd = semidirect(x, b, phi);

            // every fixed-point set containing the forced pairs
            std::vector<std::pair<int, int>> cells;
            for (int xv = 0; xv < x.size(); ++xv)
              for (int bv : pb.members()) cells.emplace_back(xv, bv);
            for (int bits = 0; bits < (1 << cells.size()); ++bits) {
              std::set<std::pair<int, int>> fixed;
              for (size_t i = 0; i < cells.size(); ++i)
                if ((bits >> i) & 1) fixed.insert(cells[i]);
              for (int bv : pb.members()) fixed.insert({x.identity(), bv});
              for (int xv : px.members()) fixed.insert({xv, b.identity()});

              PreorderedAction act{x, b, px, pb, phi, xi_from_set(x, pb, fixed)};
              auto report = validate_action(act);
              if (!report.a3.holds) continue;  // not a submonoid, skip

              std::vector<int> members;
              for (auto [u, v] : fixed) members.push_back(pair_index(u, v, b.size()));
              Submonoid cone(sd.a, members);
              CHECK(report.a4.holds == is_right_normal(sd.a, cone).holds);
            }
          }
        }
}

TEST_CASE("fixed point sets and canonical form") {
  PreorderedAction act = full_trivial_action(fixtures::sl2());
  FixedPointSet fixed = fixed_point_set(act);
  CHECK(fixed.contains(1, 1));

  PreorderedAction canonical = canonicalize_xi(act);
  CHECK(canonical.xi == act.xi);  // already canonical
  CHECK(fixed_point_set(canonical) == fixed);
  CHECK(validate_action(canonical).a1.holds);
}

TEST_CASE("extension to action on a direct product") {
  FiniteMonoid x = fixtures::z2(), b = fixtures::sl2();
  SplitExtension ext = semidirect(x, b, trivial_action(x, b));
  Submonoid px(x, {0});
  Submonoid pb(b, {0, 1});
  // P_A = P_X x P_B under the pair encoding
  std::vector<int> pa_members;
  for (int xv : px.members())
    for (int bv : pb.members()) pa_members.push_back(pair_index(xv, bv, b.size()));
  ConedSplitExtension cext{ext, px, Submonoid(ext.a, pa_members), pb};

  PreorderedAction act = g_extract(cext);
  for (int bv = 0; bv < b.size(); ++bv)
    for (int xv = 0; xv < x.size(); ++xv) CHECK(act.phi.of(bv, xv) == xv);
  FixedPointSet fixed = fixed_point_set(act);
  CHECK(fixed.pairs == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}});
}

TEST_CASE("action to extension and the round trips") {
  FiniteMonoid sl2 = fixtures::sl2();
  PreorderedAction act = full_trivial_action(sl2);
  ConedSplitExtension cext = h_build(act);
  CHECK(cext.pa.members().size() == 4);  // P_X x P_B

  auto hg = roundtrip_hg(cext);
  CHECK(hg.beta_bijective.holds);
  CHECK(hg.beta_hom.holds);
  CHECK(hg.squares.holds);
  CHECK(hg.cone_bijection.holds);

  auto gh = roundtrip_gh(act);
  CHECK(gh.carriers_equal);
  CHECK(gh.cones_equal);
  CHECK(gh.phi_equal);
  CHECK(gh.fixed_points_equal);
  CHECK(gh.xi_canonical_equal);
}

TEST_CASE("round trips over every enumerated small action") {
  FiniteMonoid z2 = fixtures::z2(), sl2 = fixtures::sl2();
  int seen = 0;
  for (const FiniteMonoid& x : {z2, sl2})
    for (const FiniteMonoid& b : {z2, sl2})
      for (const Submonoid& px : collect_submonoids(x, SubmonoidFilter::right_normal))
        for (const Submonoid& pb : collect_submonoids(b, SubmonoidFilter::right_normal))
          for (const PreorderedAction& act : collect_actions(x, b, px, pb)) {
            ++seen;
            CHECK(roundtrip_gh(act).ok());
            CHECK(roundtrip_hg(h_build(act)).ok());
          }
  CHECK(seen > 0);
}

TEST_CASE("a non-canonical xi round-trips to its canonical form") {
  FiniteMonoid sl2 = fixtures::sl2();
  Submonoid cone(sl2, {0, 1});
  // xi(1, 0) = 0 rather than 1: still the same fixed-point set as trivial
  std::vector<std::vector<int>> xi{{0, 0}, {0, 1}};
  PreorderedAction act{sl2, sl2, cone, cone, trivial_action(sl2, sl2), xi};
  REQUIRE(validate_action(act).ok());
  auto gh = roundtrip_gh(act);
  CHECK(gh.fixed_points_equal);
  CHECK(gh.xi_canonical_equal);
}

TEST_CASE("extension morphisms") {
  FiniteMonoid sl2 = fixtures::sl2();
  PreorderedAction act = full_trivial_action(sl2);
  ConedSplitExtension cext = h_build(act);

  auto ok = check_ext_morphism(identity_hom(sl2), identity_hom(cext.ext.a),
                               identity_hom(sl2), cext, cext);
  CHECK(ok.ok);

  // the comparison iso from the rebuilt extension is a morphism
  ConedSplitExtension rebuilt = h_build(g_extract(cext));
  std::vector<int> beta_map(rebuilt.ext.a.size());
  for (int i = 0; i < rebuilt.ext.a.size(); ++i) {
    auto [xv, bv] = pair_unindex(i, cext.ext.b.size());
    beta_map[i] = cext.ext.a.add(cext.ext.k(xv), cext.ext.s(bv));
  }
  MonoidHom beta(rebuilt.ext.a, cext.ext.a, beta_map);
  auto via_beta =
      check_ext_morphism(identity_hom(sl2), beta, identity_hom(sl2), rebuilt, cext);
  CHECK(via_beta.ok);

  // breaking one square is reported by name
  FiniteMonoid z2 = fixtures::z2();
  PreorderedAction pact{
      z2, z2, Submonoid(z2, {0}), Submonoid(z2, {0}), trivial_action(z2, z2),
      xi_from_set(z2, Submonoid(z2, {0}), {{0, 0}})};
  ConedSplitExtension pext = h_build(pact);
  MonoidHom collapse(z2, z2, {0, 0});
  auto broken = check_ext_morphism(collapse, identity_hom(pext.ext.a), identity_hom(z2),
                                   pext, pext);
  CHECK(!broken.ok);
  CHECK(broken.failing == "k-square");
}

TEST_CASE("action morphisms") {
  FiniteMonoid sl2 = fixtures::sl2();
  PreorderedAction act = full_trivial_action(sl2);

  auto identity_result =
      check_action_morphism(identity_hom(sl2), identity_hom(sl2), act, act);
  CHECK(identity_result.ok);
  CHECK(identity_result.fixed_point_map.size() == 4);
  for (const auto& [from, to] : identity_result.fixed_point_map) CHECK(from == to);

  FiniteMonoid one = fixtures::trivial();
  PreorderedAction point = full_trivial_action(one);
  MonoidHom squash(sl2, one, {0, 0});
  CHECK(check_action_morphism(squash, squash, act, point).ok);

  // an equivariance break is caught pointwise
  std::vector<std::vector<int>> rows{{0, 1}, {0, 0}};  // b = 1 acts by collapse
  REQUIRE(validate_action_map(sl2, sl2, rows).valid);
  Submonoid tiny(sl2, {0});
  PreorderedAction twisted{sl2, sl2, tiny, tiny, ActionTable{sl2, sl2, rows},
                           xi_from_set(sl2, tiny, {{0, 0}})};
  REQUIRE(validate_action(twisted).ok());
  PreorderedAction straight{sl2, sl2, tiny, tiny, trivial_action(sl2, sl2),
                            xi_from_set(sl2, tiny, {{0, 0}})};
  auto broken = check_action_morphism(identity_hom(sl2), identity_hom(sl2), twisted,
                                      straight);
  CHECK(!broken.ok);
  CHECK(broken.failing == "equivariance");
}

TEST_CASE("integer window demo") {
  ZzDemoReport report = zz_demo(10);
  CHECK(report.ok());
  CHECK(report.fixed_set_positive.checked == 121);
  CHECK(report.fixed_set_negative.checked == 110);

  REQUIRE(report.samples.size() == 3);
  CHECK(report.samples[0].u == 3);
  CHECK(report.samples[0].xi == 3);
  CHECK(report.samples[0].in_fixed_set);
  CHECK(report.samples[1].u == -2);
  CHECK(report.samples[1].xi == 0);
  CHECK(!report.samples[1].in_fixed_set);
  CHECK(report.samples[2].u == 0);
  CHECK(report.samples[2].xi == 0);
  CHECK(report.samples[2].in_fixed_set);

  CHECK_THROWS_AS(zz_demo(0), Error);
}
