#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "pomkit/errors.hpp"

namespace pomkit {

// Everything in this library runs on dense element indices 0..n-1.
// Bitset-based relation code caps the carrier at one machine word.
inline constexpr int kMaxElements = 64;

/// A finite monoid given by its Cayley table. Construction validates the
/// range, identity and associativity invariants and throws Error otherwise.
class FiniteMonoid {
 public:
  FiniteMonoid(int size, int identity, std::vector<int> table);

  int size() const noexcept { return size_; }
  int identity() const noexcept { return identity_; }

  // table entry (a, b) = a + b
  int add(int a, int b) const { return table_[static_cast<size_t>(a) * size_ + b]; }

  const std::vector<int>& table() const noexcept { return table_; }

  bool operator==(const FiniteMonoid&) const = default;

 private:
  int size_ = 0;
  int identity_ = 0;
  std::vector<int> table_;  // row-major, size*size
};

/// A submonoid of a fixed parent, stored as a sorted member list + bitmask.
class Submonoid {
 public:
  Submonoid(FiniteMonoid parent, std::vector<int> members);

  const FiniteMonoid& parent() const noexcept { return parent_; }
  const std::vector<int>& members() const noexcept { return members_; }
  std::uint64_t mask() const noexcept { return mask_; }
  bool contains(int a) const { return (mask_ >> a) & 1u; }
  int count() const noexcept { return static_cast<int>(members_.size()); }

  bool operator==(const Submonoid&) const = default;

 private:
  FiniteMonoid parent_;
  std::vector<int> members_;
  std::uint64_t mask_ = 0;
};

/// A monoid homomorphism dom -> cod; construction checks the hom laws and
/// throws NotAHom with the least witness pair.
class MonoidHom {
 public:
  MonoidHom(FiniteMonoid dom, FiniteMonoid cod, std::vector<int> map);

  const FiniteMonoid& dom() const noexcept { return dom_; }
  const FiniteMonoid& cod() const noexcept { return cod_; }
  const std::vector<int>& map() const noexcept { return map_; }
  int operator()(int a) const { return map_[a]; }

  bool operator==(const MonoidHom&) const = default;

 private:
  FiniteMonoid dom_;
  FiniteMonoid cod_;
  std::vector<int> map_;
};

/// A partition of a monoid's carrier, classes numbered densely by first
/// appearance. Whether it actually is a congruence is checked by quotient().
class Congruence {
 public:
  Congruence(const FiniteMonoid& parent, std::vector<int> class_of);

  int size() const noexcept { return static_cast<int>(class_of_.size()); }
  int class_of(int a) const { return class_of_[a]; }
  const std::vector<int>& classes() const noexcept { return class_of_; }
  int num_classes() const noexcept { return num_classes_; }

  bool operator==(const Congruence&) const = default;

 private:
  std::vector<int> class_of_;
  int num_classes_ = 0;
};

struct QuotientResult {
  FiniteMonoid monoid;
  MonoidHom projection;
};

struct EndomorphismMonoid {
  FiniteMonoid monoid;                 // composition: (f + g)(x) = f(g(x))
  std::vector<std::vector<int>> maps;  // element index -> underlying map
  int index_of(const std::vector<int>& map) const;
};

FiniteMonoid validate_monoid(const std::vector<std::vector<int>>& rows, int identity);

bool is_commutative(const FiniteMonoid& m);
std::optional<std::pair<int, int>> commutativity_witness(const FiniteMonoid& m);

Submonoid submonoid_closure(const FiniteMonoid& m, const std::vector<int>& seed);

Submonoid kernel(const MonoidHom& p);

MonoidHom identity_hom(const FiniteMonoid& m);
MonoidHom compose_hom(const MonoidHom& f, const MonoidHom& g);  // apply f, then g

Congruence congruence_closure(const FiniteMonoid& m,
                              const std::vector<std::pair<int, int>>& pairs);

QuotientResult quotient(const FiniteMonoid& m, const Congruence& c);

QuotientResult coequalizer_mon(const MonoidHom& f, const MonoidHom& g);

EndomorphismMonoid endomorphism_monoid(const FiniteMonoid& x);

}  // namespace pomkit
