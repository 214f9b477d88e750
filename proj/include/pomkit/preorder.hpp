#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pomkit/monoid.hpp"

namespace pomkit {

/// A reflexive-transitive relation on {0..n-1}, one bit row per element.
class Preorder {
 public:
  static Preorder discrete(int n);
  static Preorder total(int n);
  static Preorder closure_from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  // Accepts an explicit matrix; throws ValidationError unless it is already
  // reflexive and transitively closed.
  static Preorder from_matrix(const std::vector<std::vector<int>>& rows);

  int size() const noexcept { return size_; }
  bool leq(int a, int b) const { return (rows_[a] >> b) & 1u; }
  std::uint64_t row(int a) const { return rows_[a]; }

  Preorder opposite() const;

  /// All related pairs with a != b, in lexicographic order.
  std::vector<std::pair<int, int>> nonreflexive_pairs() const;

  bool operator==(const Preorder&) const = default;

 private:
  Preorder(int n, std::vector<std::uint64_t> rows) : size_(n), rows_(std::move(rows)) {}
  int size_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct ContainmentResult {
  bool contained = false;
  std::optional<std::pair<int, int>> witness;  // pair in R1 but not in R2
};

struct CompatibilityResult {
  bool compatible = false;
  // least (a,b,c,d) with a<=b, c<=d but a+c <= b+d failing
  std::optional<std::array<int, 4>> witness;
};

ContainmentResult is_contained(const Preorder& r1, const Preorder& r2);

CompatibilityResult is_compatible(const FiniteMonoid& m, const Preorder& r);

Preorder initial_lift(const FiniteMonoid& x,
                      const std::vector<std::pair<MonoidHom, Preorder>>& family);

Preorder image_preorder_closure(const Preorder& r, const std::vector<int>& q_map,
                                int target_size);

}  // namespace pomkit
