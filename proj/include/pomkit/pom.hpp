#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pomkit/monoid.hpp"
#include "pomkit/preorder.hpp"

namespace pomkit {

/// A monoid with a compatible preorder. Construction validates compatibility
/// and caches the positive cone {a : e <= a}.
class PreorderedMonoid {
 public:
  PreorderedMonoid(FiniteMonoid monoid, Preorder order);

  const FiniteMonoid& monoid() const noexcept { return monoid_; }
  const Preorder& order() const noexcept { return order_; }
  const Submonoid& cone() const noexcept { return cone_; }

  bool operator==(const PreorderedMonoid&) const = default;

 private:
  FiniteMonoid monoid_;
  Preorder order_;
  Submonoid cone_;
};

struct NormalityResult {
  bool holds = false;
  // least a with a+S not contained in S+a, and the least offending element
  std::optional<int> witness_a;
  std::optional<int> witness_elem;
};

struct NormalityReport {
  NormalityResult right;
  NormalityResult left;
  bool normal = false;
};

struct CosetRow {
  int a = 0;
  std::vector<int> left;   // a + S
  std::vector<int> right;  // S + a
};

struct ClassificationReport {
  bool compatible = false;
  std::optional<std::array<int, 4>> compatible_witness;
  std::vector<int> cone;
  Preorder induced_right_order;
  Preorder induced_left_order;
  bool in_ordmon_star = false;
  std::optional<std::pair<int, int>> star_witness;  // pair in <= missing from <=_P
  bool cone_right_normal = false;
  std::optional<int> right_normal_witness_a;
  std::optional<int> right_normal_witness_elem;
  bool cone_left_normal = false;
  std::optional<int> left_normal_witness_a;
  std::optional<int> left_normal_witness_elem;
  bool induced_right_compatible = false;
  std::optional<std::array<int, 4>> induced_compat_witness;
  bool commutative = false;
  std::optional<std::pair<int, int>> commutative_witness;
};

struct CoreflectionResult {
  PreorderedMonoid object;  // same carrier, order replaced by <=_P
  MonoidHom arrow;          // identity map, viewed (A, <=_P) -> (A, <=)
};

struct CoreflectionUniversalResult {
  bool factors = false;
  // when false: the pair of source elements whose order the factored map breaks
  std::optional<std::pair<int, int>> witness;
};

Submonoid positive_cone(const PreorderedMonoid& pm);

/// a <= b  iff  b is in S + a
Preorder induced_right(const FiniteMonoid& m, const Submonoid& s);
/// a <= b  iff  b is in a + S
Preorder induced_left(const FiniteMonoid& m, const Submonoid& s);

NormalityResult is_right_normal(const FiniteMonoid& m, const Submonoid& s);
NormalityResult is_left_normal(const FiniteMonoid& m, const Submonoid& s);
NormalityReport is_normal(const FiniteMonoid& m, const Submonoid& s);

/// a <= b  iff  S + a is contained in S + b
Preorder greens_l_preorder(const FiniteMonoid& m, const Submonoid& s);
/// a <= b  iff  a + S is contained in b + S
Preorder greens_r_preorder(const FiniteMonoid& m, const Submonoid& s);

std::vector<CosetRow> coset_table(const FiniteMonoid& m, const Submonoid& s);

ClassificationReport classify(const PreorderedMonoid& pm);

/// Throws ConeNotRightNormal when the cone fails right normality.
CoreflectionResult coreflect(const PreorderedMonoid& pm);

/// Checks that a monotone hom f : source -> pm, with source whose order is
/// induced by its own cone, factors (as the same map) monotonically through
/// coreflect(pm).
CoreflectionUniversalResult check_coreflection_universal(const PreorderedMonoid& pm,
                                                         const PreorderedMonoid& source,
                                                         const MonoidHom& f);

}  // namespace pomkit
