#pragma once

#include <functional>

#include "pomkit/actions.hpp"
#include "pomkit/monoid.hpp"
#include "pomkit/preorder.hpp"

namespace pomkit {

enum class SubmonoidFilter { none, right_normal, left_normal, normal };

/// All Cayley tables with identity at index 0, lexicographic on tables,
/// no isomorphism reduction. Backtracking with early associativity pruning.
/// Emitter returns false to stop. Guard: n <= 4.
void enumerate_monoids(int n, const std::function<bool(const FiniteMonoid&)>& emit);

/// All preorders compatible with m, ascending in row-major matrix order.
/// Guard: m.size() <= 5.
void enumerate_compatible_preorders(const FiniteMonoid& m,
                                    const std::function<bool(const Preorder&)>& emit);

/// All submonoids passing the filter, ascending in member-mask order.
/// Guard: m.size() <= 6.
void enumerate_submonoids(const FiniteMonoid& m, SubmonoidFilter filter,
                          const std::function<bool(const Submonoid&)>& emit);

/// All monoid homs dom -> cod, lexicographic on the map. Guard:
/// |cod|^|dom| <= 10^7 candidate maps.
void enumerate_homs(const FiniteMonoid& dom, const FiniteMonoid& cod,
                    const std::function<bool(const MonoidHom&)>& emit);

/// All preordered actions (phi, canonical xi) for the given carriers and
/// cones: phi ranges over homs B -> End(X), xi over fixed-point subsets that
/// pass all four axioms. Guard: |X|, |B| <= 3.
void enumerate_actions(const FiniteMonoid& x, const FiniteMonoid& b, const Submonoid& px,
                       const Submonoid& pb,
                       const std::function<bool(const PreorderedAction&)>& emit);

// collect_* convenience wrappers
std::vector<FiniteMonoid> collect_monoids(int n);
std::vector<Preorder> collect_compatible_preorders(const FiniteMonoid& m);
std::vector<Submonoid> collect_submonoids(const FiniteMonoid& m, SubmonoidFilter filter);
std::vector<MonoidHom> collect_homs(const FiniteMonoid& dom, const FiniteMonoid& cod);
std::vector<PreorderedAction> collect_actions(const FiniteMonoid& x, const FiniteMonoid& b,
                                              const Submonoid& px, const Submonoid& pb);

}  // namespace pomkit
