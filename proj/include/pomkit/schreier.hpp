#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pomkit/monoid.hpp"

namespace pomkit {

/// A split extension of monoids: p*s = 1_B, k the kernel of p. The
/// retraction q (if present) is a plain map A -> X, not a hom.
struct SplitExtension {
  FiniteMonoid x;
  FiniteMonoid a;
  FiniteMonoid b;
  MonoidHom k;  // X -> A
  MonoidHom p;  // A -> B
  MonoidHom s;  // B -> A
  std::optional<std::vector<int>> q;

  int qa(int av) const { return (*q)[av]; }
};

/// The table of a monoid action of B on X: row b is the endomorphism x -> b.x
/// with act(b+b', x) = act(b, act(b', x)).
struct ActionTable {
  FiniteMonoid x;
  FiniteMonoid b;
  std::vector<std::vector<int>> act;  // |B| rows by |X| columns

  int of(int bv, int xv) const { return act[bv][xv]; }
  bool operator==(const ActionTable& other) const { return act == other.act; }
};

struct ActionMapCheck {
  bool valid = false;
  std::string axiom;          // "endomorphism" | "identity_row" | "multiplicative"
  std::vector<int> witness;
};

struct S1S2Report {
  bool s1 = false;
  std::optional<int> s1_witness;  // least a with k(q(a)) + s(p(a)) != a
  bool s2 = false;
  std::optional<std::pair<int, int>> s2_witness;  // least (x, b) with q(k(x)+s(b)) != x
  bool ok() const { return s1 && s2; }
};

struct ConsequenceReport {
  bool holds = false;
  std::vector<int> witness;
};

struct ConsequencesReport {
  ConsequenceReport c1;  // k(b.x) + s(b) = s(b) + k(x)
  ConsequenceReport c2;  // q(a1+a2) = q(a1) + p(a1).q(a2)
  ConsequenceReport c3;  // A isomorphic to the semidirect product
  ConsequenceReport c4;  // p is the cokernel of k
  bool ok() const { return c1.holds && c2.holds && c3.holds && c4.holds; }
};

/// Checks p*s = 1_B, k injective, image(k) = kernel(p); throws ValidationError
/// with a witness when any fails. Leaves q untouched.
SplitExtension validate_split_extension(SplitExtension ext);

/// Unique-decomposition scan: every a must factor as k(x) + s(p(a)) for
/// exactly one x. Returns the retraction; throws NotSchreier(witness, count).
std::vector<int> find_retraction(const SplitExtension& ext);

S1S2Report check_s1_s2(const SplitExtension& ext);

ActionTable action_from_ext(const SplitExtension& ext);

ActionMapCheck validate_action_map(const FiniteMonoid& x, const FiniteMonoid& b,
                                   const std::vector<std::vector<int>>& act);

/// Builds X x B with (x,b)+(x',b') = (x + b.x', b+b'), identity (e,e), and
/// the canonical k, p, s, q. Pair (x,b) has index x*|B| + b.
/// Throws InvalidAction if phi fails the action axioms.
SplitExtension semidirect(const FiniteMonoid& x, const FiniteMonoid& b,
                          const ActionTable& phi);

ConsequencesReport check_consequences(const SplitExtension& ext);

inline int pair_index(int xv, int bv, int b_size) { return xv * b_size + bv; }
inline std::pair<int, int> pair_unindex(int idx, int b_size) {
  return {idx / b_size, idx % b_size};
}

}  // namespace pomkit
