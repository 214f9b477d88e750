#include "pomkit/pom.hpp"

#include <algorithm>

namespace pomkit {

namespace {

Submonoid cone_of(const FiniteMonoid& m, const Preorder& order) {
  std::vector<int> members;
  for (int a = 0; a < m.size(); ++a)
    if (order.leq(m.identity(), a)) members.push_back(a);
  // closedness is a theorem for compatible orders; Submonoid re-checks it
  return Submonoid(m, std::move(members));
}

std::vector<int> left_coset(const FiniteMonoid& m, const Submonoid& s, int a) {
  std::uint64_t mask = 0;
  for (int x : s.members()) mask |= 1ull << m.add(a, x);
  std::vector<int> out;
  for (int v = 0; v < m.size(); ++v)
    if ((mask >> v) & 1u) out.push_back(v);
  return out;
}

std::vector<int> right_coset(const FiniteMonoid& m, const Submonoid& s, int a) {
  std::uint64_t mask = 0;
  for (int x : s.members()) mask |= 1ull << m.add(x, a);
  std::vector<int> out;
  for (int v = 0; v < m.size(); ++v)
    if ((mask >> v) & 1u) out.push_back(v);
  return out;
}

std::uint64_t coset_mask(const FiniteMonoid& m, const Submonoid& s, int a, bool left) {
  std::uint64_t mask = 0;
  for (int x : s.members()) mask |= 1ull << (left ? m.add(a, x) : m.add(x, a));
  return mask;
}

void require_same_parent(const FiniteMonoid& m, const Submonoid& s) {
  if (s.parent() != m)
    throw Error(ErrorKind::TypeMismatch, "submonoid belongs to a different monoid");
}

}  // namespace

PreorderedMonoid::PreorderedMonoid(FiniteMonoid monoid, Preorder order)
    : monoid_(std::move(monoid)),
      order_(std::move(order)),
      cone_(cone_of(monoid_, order_)) {
  if (monoid_.size() != order_.size())
    throw Error(ErrorKind::SizeMismatch, "monoid and order differ in size",
                {monoid_.size(), order_.size()});
  auto compat = is_compatible(monoid_, order_);
  if (!compat.compatible) {
    auto [a, b, c, d] = *compat.witness;
    throw Error(ErrorKind::IncompatibleOrder,
                "order not compatible with the operation at quadruple", {a, b, c, d});
  }
}

Submonoid positive_cone(const PreorderedMonoid& pm) { return pm.cone(); }

Preorder induced_right(const FiniteMonoid& m, const Submonoid& s) {
  require_same_parent(m, s);
  std::vector<std::vector<int>> matrix(m.size(), std::vector<int>(m.size(), 0));
  for (int a = 0; a < m.size(); ++a) {
    std::uint64_t sa = coset_mask(m, s, a, /*left=*/false);  // S + a
    for (int b = 0; b < m.size(); ++b)
      if ((sa >> b) & 1u) matrix[a][b] = 1;
  }
  // reflexive because e is in S, transitive because S is closed;
  // from_matrix re-checks both
  return Preorder::from_matrix(matrix);
}

Preorder induced_left(const FiniteMonoid& m, const Submonoid& s) {
  require_same_parent(m, s);
  std::vector<std::vector<int>> matrix(m.size(), std::vector<int>(m.size(), 0));
  for (int a = 0; a < m.size(); ++a) {
    std::uint64_t as = coset_mask(m, s, a, /*left=*/true);  // a + S
    for (int b = 0; b < m.size(); ++b)
      if ((as >> b) & 1u) matrix[a][b] = 1;
  }
  return Preorder::from_matrix(matrix);
}

NormalityResult is_right_normal(const FiniteMonoid& m, const Submonoid& s) {
  require_same_parent(m, s);
  for (int a = 0; a < m.size(); ++a) {
    std::uint64_t as = coset_mask(m, s, a, true);
    std::uint64_t sa = coset_mask(m, s, a, false);
    std::uint64_t extra = as & ~sa;
    if (extra) {
      int elem = 0;
      while (!((extra >> elem) & 1u)) ++elem;
      return {false, a, elem};
    }
  }
  return {true, std::nullopt, std::nullopt};
}

NormalityResult is_left_normal(const FiniteMonoid& m, const Submonoid& s) {
  require_same_parent(m, s);
  for (int a = 0; a < m.size(); ++a) {
    std::uint64_t as = coset_mask(m, s, a, true);
    std::uint64_t sa = coset_mask(m, s, a, false);
    std::uint64_t extra = sa & ~as;
    if (extra) {
      int elem = 0;
      while (!((extra >> elem) & 1u)) ++elem;
      return {false, a, elem};
    }
  }
  return {true, std::nullopt, std::nullopt};
}

NormalityReport is_normal(const FiniteMonoid& m, const Submonoid& s) {
  NormalityReport report;
  report.right = is_right_normal(m, s);
  report.left = is_left_normal(m, s);
  report.normal = report.right.holds && report.left.holds;
  return report;
}

Preorder greens_l_preorder(const FiniteMonoid& m, const Submonoid& s) {
  require_same_parent(m, s);
  std::vector<std::uint64_t> sa(m.size());
  for (int a = 0; a < m.size(); ++a) sa[a] = coset_mask(m, s, a, false);
  std::vector<std::vector<int>> matrix(m.size(), std::vector<int>(m.size(), 0));
  for (int a = 0; a < m.size(); ++a)
    for (int b = 0; b < m.size(); ++b)
      if ((sa[a] & ~sa[b]) == 0) matrix[a][b] = 1;
  return Preorder::from_matrix(matrix);
}

Preorder greens_r_preorder(const FiniteMonoid& m, const Submonoid& s) {
  require_same_parent(m, s);
  std::vector<std::uint64_t> as(m.size());
  for (int a = 0; a < m.size(); ++a) as[a] = coset_mask(m, s, a, true);
  std::vector<std::vector<int>> matrix(m.size(), std::vector<int>(m.size(), 0));
  for (int a = 0; a < m.size(); ++a)
    for (int b = 0; b < m.size(); ++b)
      if ((as[a] & ~as[b]) == 0) matrix[a][b] = 1;
  return Preorder::from_matrix(matrix);
}

std::vector<CosetRow> coset_table(const FiniteMonoid& m, const Submonoid& s) {
  require_same_parent(m, s);
  std::vector<CosetRow> rows;
  rows.reserve(m.size());
  for (int a = 0; a < m.size(); ++a)
    rows.push_back({a, left_coset(m, s, a), right_coset(m, s, a)});
  return rows;
}

ClassificationReport classify(const PreorderedMonoid& pm) {
  const FiniteMonoid& m = pm.monoid();
  const Submonoid& cone = pm.cone();

  ClassificationReport report{
      .compatible = false,
      .compatible_witness = {},
      .cone = cone.members(),
      .induced_right_order = induced_right(m, cone),
      .induced_left_order = induced_left(m, cone),
  };

  auto compat = is_compatible(m, pm.order());
  report.compatible = compat.compatible;
  report.compatible_witness = compat.witness;

  if (pm.order() == report.induced_right_order) {
    report.in_ordmon_star = true;
  } else {
    report.in_ordmon_star = false;
    // by containment (<=_P is inside <=), the difference is one-sided
    auto diff = is_contained(pm.order(), report.induced_right_order);
    report.star_witness = diff.witness;
  }

  auto rn = is_right_normal(m, cone);
  report.cone_right_normal = rn.holds;
  report.right_normal_witness_a = rn.witness_a;
  report.right_normal_witness_elem = rn.witness_elem;

  auto ln = is_left_normal(m, cone);
  report.cone_left_normal = ln.holds;
  report.left_normal_witness_a = ln.witness_a;
  report.left_normal_witness_elem = ln.witness_elem;

  auto induced_compat = is_compatible(m, report.induced_right_order);
  report.induced_right_compatible = induced_compat.compatible;
  report.induced_compat_witness = induced_compat.witness;

  auto cw = commutativity_witness(m);
  report.commutative = !cw.has_value();
  report.commutative_witness = cw;

  return report;
}

CoreflectionResult coreflect(const PreorderedMonoid& pm) {
  auto rn = is_right_normal(pm.monoid(), pm.cone());
  if (!rn.holds)
    throw Error(ErrorKind::ConeNotRightNormal,
                "positive cone is not right normal, witness element",
                {*rn.witness_a, *rn.witness_elem});
  PreorderedMonoid object(pm.monoid(), induced_right(pm.monoid(), pm.cone()));
  return {std::move(object), identity_hom(pm.monoid())};
}

CoreflectionUniversalResult check_coreflection_universal(const PreorderedMonoid& pm,
                                                         const PreorderedMonoid& source,
                                                         const MonoidHom& f) {
  if (f.dom() != source.monoid() || f.cod() != pm.monoid())
    throw Error(ErrorKind::TypeMismatch, "hom endpoints do not match the given objects");
  if (source.order() != induced_right(source.monoid(), source.cone()))
    throw Error(ErrorKind::TypeMismatch, "source order is not induced by its cone");
  for (int a = 0; a < source.monoid().size(); ++a)
    for (int b = 0; b < source.monoid().size(); ++b)
      if (source.order().leq(a, b) && !pm.order().leq(f(a), f(b)))
        throw Error(ErrorKind::NotMonotone, "hom is not monotone at pair", {a, b});

  CoreflectionResult core = coreflect(pm);
  for (int a = 0; a < source.monoid().size(); ++a)
    for (int b = 0; b < source.monoid().size(); ++b)
      if (source.order().leq(a, b) && !core.object.order().leq(f(a), f(b)))
        return {false, std::make_pair(a, b)};
  return {true, std::nullopt};
}

}  // namespace pomkit
