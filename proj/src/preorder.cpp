#include "pomkit/preorder.hpp"

#include <sstream>

namespace pomkit {

namespace {

void check_size(int n) {
  if (n < 1 || n > kMaxElements)
    throw Error(ErrorKind::SizeGuardExceeded, "relation size must be in 1..64", {n});
}

// Floyd-Warshall on bit rows.
void transitive_close(std::vector<std::uint64_t>& rows) {
  int n = static_cast<int>(rows.size());
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if ((rows[i] >> k) & 1u) rows[i] |= rows[k];
}

}  // namespace

Preorder Preorder::discrete(int n) {
  check_size(n);
  std::vector<std::uint64_t> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = 1ull << i;
  return Preorder(n, std::move(rows));
}

Preorder Preorder::total(int n) {
  check_size(n);
  std::uint64_t all = (n == 64) ? ~0ull : ((1ull << n) - 1);
  return Preorder(n, std::vector<std::uint64_t>(n, all));
}

Preorder Preorder::closure_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  check_size(n);
  std::vector<std::uint64_t> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = 1ull << i;
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error(ErrorKind::OutOfRangeEntry, "edge endpoint out of range", {a, b});
    rows[a] |= 1ull << b;
  }
  transitive_close(rows);
  return Preorder(n, std::move(rows));
}

Preorder Preorder::from_matrix(const std::vector<std::vector<int>>& matrix) {
  int n = static_cast<int>(matrix.size());
  check_size(n);
  std::vector<std::uint64_t> rows(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix[i].size()) != n)
      throw Error(ErrorKind::SizeMismatch, "ragged relation row",
                  {static_cast<long long>(matrix[i].size()), n});
    for (int j = 0; j < n; ++j)
      if (matrix[i][j]) rows[i] |= 1ull << j;
  }
  for (int i = 0; i < n; ++i)
    if (!((rows[i] >> i) & 1u))
      throw Error(ErrorKind::ValidationError, "relation not reflexive at", {i});
  auto closed = rows;
  transitive_close(closed);
  for (int i = 0; i < n; ++i)
    if (closed[i] != rows[i])
      throw Error(ErrorKind::ValidationError, "relation not transitively closed at row", {i});
  return Preorder(n, std::move(rows));
}

Preorder Preorder::opposite() const {
  std::vector<std::uint64_t> rows(size_);
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j)
      if (leq(j, i)) rows[i] |= 1ull << j;
  return Preorder(size_, std::move(rows));
}

std::vector<std::pair<int, int>> Preorder::nonreflexive_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b)
      if (a != b && leq(a, b)) out.emplace_back(a, b);
  return out;
}

ContainmentResult is_contained(const Preorder& r1, const Preorder& r2) {
  if (r1.size() != r2.size())
    throw Error(ErrorKind::SizeMismatch, "relations differ in size",
                {r1.size(), r2.size()});
  for (int a = 0; a < r1.size(); ++a)
    for (int b = 0; b < r1.size(); ++b)
      if (r1.leq(a, b) && !r2.leq(a, b))
        return {false, std::make_pair(a, b)};
  return {true, std::nullopt};
}

CompatibilityResult is_compatible(const FiniteMonoid& m, const Preorder& r) {
  if (m.size() != r.size())
    throw Error(ErrorKind::SizeMismatch, "monoid and relation differ in size",
                {m.size(), r.size()});
  int n = m.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!r.leq(a, b)) continue;
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if (r.leq(c, d) && !r.leq(m.add(a, c), m.add(b, d)))
            return {false, std::array<int, 4>{a, b, c, d}};
    }
  return {true, std::nullopt};
}

Preorder initial_lift(const FiniteMonoid& x,
                      const std::vector<std::pair<MonoidHom, Preorder>>& family) {
  int n = x.size();
  std::vector<std::vector<int>> matrix(n, std::vector<int>(n, 1));
  for (const auto& [hom, order] : family) {
    if (hom.dom() != x)
      throw Error(ErrorKind::TypeMismatch, "initial_lift: hom domain mismatch");
    if (hom.cod().size() != order.size())
      throw Error(ErrorKind::SizeMismatch, "initial_lift: cod/order size mismatch",
                  {hom.cod().size(), order.size()});
    auto compat = is_compatible(hom.cod(), order);
    if (!compat.compatible)
      throw Error(ErrorKind::IncompatibleOrder,
                  "initial_lift: family member order not compatible");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (!order.leq(hom(a), hom(b))) matrix[a][b] = 0;
  }
  Preorder lifted = Preorder::from_matrix(matrix);
  // compatibility is automatic for an initial lift; treat failure as a bug
  auto compat = is_compatible(x, lifted);
  if (!compat.compatible)
    throw Error(ErrorKind::IncompatibleOrder, "initial_lift produced incompatible order");
  return lifted;
}

Preorder image_preorder_closure(const Preorder& r, const std::vector<int>& q_map,
                                int target_size) {
  if (static_cast<int>(q_map.size()) != r.size())
    throw Error(ErrorKind::SizeMismatch, "image closure: map length mismatch",
                {static_cast<long long>(q_map.size()), r.size()});
  std::vector<bool> hit(target_size, false);
  for (int b : q_map) {
    if (b < 0 || b >= target_size)
      throw Error(ErrorKind::OutOfRangeEntry, "image closure: map value out of range", {b});
    hit[b] = true;
  }
  for (int c = 0; c < target_size; ++c)
    if (!hit[c])
      throw Error(ErrorKind::NotSurjective, "image closure: map misses element", {c});
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < r.size(); ++a)
    for (int b = 0; b < r.size(); ++b)
      if (r.leq(a, b)) edges.emplace_back(q_map[a], q_map[b]);
  return Preorder::closure_from_edges(target_size, edges);
}

}  // namespace pomkit
