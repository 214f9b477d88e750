#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pomkit/pom.hpp"
#include "pomkit/schreier.hpp"

namespace pomkit {

/// A Schreier split extension together with right-normal cones on X, A, B
/// such that k, s, p restrict to the cones.
struct ConedSplitExtension {
  SplitExtension ext;
  Submonoid px;
  Submonoid pa;
  Submonoid pb;
};

/// The action data (X, B, P_X, P_B, phi, xi). xi has one row per element of
/// X and one column per element of P_B, in ascending element order.
struct PreorderedAction {
  FiniteMonoid x;
  FiniteMonoid b;
  Submonoid px;
  Submonoid pb;
  ActionTable phi;
  std::vector<std::vector<int>> xi;

  int xi_of(int xv, int cone_col) const { return xi[xv][cone_col]; }
  /// Column of cone element v in the xi table, -1 when v is not in the cone.
  int cone_col(int v) const;
};

struct FixedPointSet {
  // (u, v) with v a cone element of B and xi(u, v) = u, lexicographic
  std::vector<std::pair<int, int>> pairs;
  bool contains(int u, int v) const;
  bool operator==(const FixedPointSet&) const = default;
};

struct AxiomCheck {
  bool holds = false;
  std::vector<int> witness;
};

struct ActionAxiomReport {
  AxiomCheck a1;  // xi(0, b) = 0
  AxiomCheck a2;  // x in P_X implies xi(x, 0) = x
  AxiomCheck a3;  // fixed pairs are closed under the semidirect operation
  AxiomCheck a4;  // fixed pairs translate: joint existential over (u', v')
  bool ok() const { return a1.holds && a2.holds && a3.holds && a4.holds; }
};

struct IsoCheck {
  bool holds = false;
  std::string detail;
};

struct RoundTripHGReport {
  IsoCheck beta_bijective;
  IsoCheck beta_hom;
  IsoCheck squares;       // beta commutes with k, p, s
  IsoCheck cone_bijection;  // beta maps P_xi onto P_A
  bool ok() const {
    return beta_bijective.holds && beta_hom.holds && squares.holds &&
           cone_bijection.holds;
  }
};

struct RoundTripGHReport {
  bool carriers_equal = false;
  bool cones_equal = false;
  bool phi_equal = false;
  bool fixed_points_equal = false;
  bool xi_canonical_equal = false;
  bool ok() const {
    return carriers_equal && cones_equal && phi_equal && fixed_points_equal &&
           xi_canonical_equal;
  }
};

struct ExtMorphismReport {
  bool ok = false;
  std::string failing;  // name of the first square or restriction that fails
  std::vector<int> witness;
};

struct ActionMorphismReport {
  bool ok = false;
  std::string failing;
  std::vector<int> witness;
  // the induced map on fixed points, entries ((u,v) -> (u',v'))
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> fixed_point_map;
};

struct WindowCheck {
  long long checked = 0;
  bool holds = false;
};

struct ZzSample {
  long long u = 0, v = 0, xi = 0;
  bool in_fixed_set = false;
};

/// Windowed verification of the integer example: the action
/// (Z, Z, {0}, N, trivial phi, xi(u,v) = u when 0 <= u <= v else 0)
/// and its two Schreier presentations of Z x Z over Z.
struct ZzDemoReport {
  long long window = 0;
  WindowCheck a1, a2, a3, a4;
  WindowCheck fixed_set_positive;  // (u,v) in [0,N]^2: membership iff u <= v
  WindowCheck fixed_set_negative;  // u < 0: never a member
  WindowCheck s1_sum, s2_sum;      // presentation k = (1,-1), p = +, s = (0,1)
  WindowCheck s1_product, s2_product;  // presentation k = (1,0), p = pi2, s = (0,1)
  WindowCheck xi_agreement;  // xi(u,v) = u  iff  k(u)+s(v) lands in N x N
  std::vector<ZzSample> samples;
  bool ok() const {
    return a1.holds && a2.holds && a3.holds && a4.holds && fixed_set_positive.holds &&
           fixed_set_negative.holds && s1_sum.holds && s2_sum.holds &&
           s1_product.holds && s2_product.holds && xi_agreement.holds;
  }
};

/// Checks the coned-extension invariants (Schreier lower row, right-normal
/// cones, restrictions); throws ValidationError / ConeNotRightNormal.
ConedSplitExtension validate_coned_extension(ConedSplitExtension cext);

/// A1-A4. Requires right-normal cones (throws ConeNotRightNormal) and a
/// valid phi (throws InvalidAction).
ActionAxiomReport validate_action(const PreorderedAction& act);

FixedPointSet fixed_point_set(const PreorderedAction& act);

/// Rewrites xi to u on the fixed-point set and to the identity elsewhere.
PreorderedAction canonicalize_xi(const PreorderedAction& act);

/// Extension -> action: phi(b)(x) = q(s(b)+k(x)); xi(u,v) = u exactly when
/// k(u)+s(v) lies in P_A.
PreorderedAction g_extract(const ConedSplitExtension& cext);

/// Action -> extension: semidirect carrier with P_A the fixed-point set
/// under the pair encoding. Throws InvalidAction naming the failing axiom.
ConedSplitExtension h_build(const PreorderedAction& act);

RoundTripHGReport roundtrip_hg(const ConedSplitExtension& cext);

RoundTripGHReport roundtrip_gh(const PreorderedAction& act);

ExtMorphismReport check_ext_morphism(const MonoidHom& f0, const MonoidHom& f1,
                                     const MonoidHom& f2, const ConedSplitExtension& src,
                                     const ConedSplitExtension& dst);

ActionMorphismReport check_action_morphism(const MonoidHom& f0, const MonoidHom& f2,
                                           const PreorderedAction& src,
                                           const PreorderedAction& dst);

ZzDemoReport zz_demo(long long window);

}  // namespace pomkit
