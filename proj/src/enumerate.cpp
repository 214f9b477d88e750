#include "pomkit/enumerate.hpp"

#include <algorithm>
#include <cmath>

namespace pomkit {

namespace {

// Partial-table associativity check touching only triples whose three lookups
// are all defined; cells hold -1 while unassigned.
bool partial_assoc_ok(const std::vector<int>& t, int n) {
  auto at = [&](int i, int j) { return t[static_cast<size_t>(i) * n + j]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = at(a, b);
      if (ab < 0) continue;
      for (int c = 0; c < n; ++c) {
        int bc = at(b, c);
        if (bc < 0) continue;
        int lhs = at(ab, c), rhs = at(a, bc);
        if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
      }
    }
  return true;
}

}  // namespace

void enumerate_monoids(int n, const std::function<bool(const FiniteMonoid&)>& emit) {
  if (n < 1 || n > 4)
    throw Error(ErrorKind::SizeGuardExceeded, "enumerate_monoids guard: n <= 4", {n});
  std::vector<int> table(static_cast<size_t>(n) * n, -1);
  for (int j = 0; j < n; ++j) table[j] = j;
  for (int i = 0; i < n; ++i) table[static_cast<size_t>(i) * n] = i;
  std::vector<std::pair<int, int>> free_cells;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) free_cells.emplace_back(i, j);

  bool stop = false;
  std::function<void(size_t)> fill = [&](size_t cell) {
    if (stop) return;
    if (cell == free_cells.size()) {
      stop = !emit(FiniteMonoid(n, 0, table));
      return;
    }
    auto [i, j] = free_cells[cell];
    for (int v = 0; v < n && !stop; ++v) {
      table[static_cast<size_t>(i) * n + j] = v;
      if (partial_assoc_ok(table, n)) fill(cell + 1);
      table[static_cast<size_t>(i) * n + j] = -1;
    }
  };
  fill(0);
}

void enumerate_compatible_preorders(const FiniteMonoid& m,
                                    const std::function<bool(const Preorder&)>& emit) {
  int n = m.size();
  if (n > 5)
    throw Error(ErrorKind::SizeGuardExceeded,
                "enumerate_compatible_preorders guard: size <= 5", {n});
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) cells.emplace_back(i, j);
  int k = static_cast<int>(cells.size());
  // first off-diagonal cell most significant: ascending counter order is
  // row-major lexicographic order on matrices
  for (std::uint64_t counter = 0; counter < (1ull << k); ++counter) {
    std::vector<std::vector<int>> matrix(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) matrix[i][i] = 1;
    for (int bit = 0; bit < k; ++bit)
      if ((counter >> (k - 1 - bit)) & 1u) matrix[cells[bit].first][cells[bit].second] = 1;
    // transitivity check on the raw matrix
    bool closed = true;
    for (int a = 0; a < n && closed; ++a)
      for (int b = 0; b < n && closed; ++b) {
        if (!matrix[a][b]) continue;
        for (int c = 0; c < n; ++c)
          if (matrix[b][c] && !matrix[a][c]) {
            closed = false;
            break;
          }
      }
    if (!closed) continue;
    Preorder order = Preorder::from_matrix(matrix);
    if (!is_compatible(m, order).compatible) continue;
    if (!emit(order)) return;
  }
}

void enumerate_submonoids(const FiniteMonoid& m, SubmonoidFilter filter,
                          const std::function<bool(const Submonoid&)>& emit) {
  int n = m.size();
  if (n > 6)
    throw Error(ErrorKind::SizeGuardExceeded, "enumerate_submonoids guard: size <= 6", {n});
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    if (!((mask >> m.identity()) & 1u)) continue;
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      if (!((mask >> a) & 1u)) continue;
      for (int b = 0; b < n; ++b)
        if (((mask >> b) & 1u) && !((mask >> m.add(a, b)) & 1u)) {
          closed = false;
          break;
        }
    }
    if (!closed) continue;
    std::vector<int> members;
    for (int a = 0; a < n; ++a)
      if ((mask >> a) & 1u) members.push_back(a);
    Submonoid s(m, std::move(members));
    bool pass = true;
    switch (filter) {
      case SubmonoidFilter::none: break;
      case SubmonoidFilter::right_normal: pass = is_right_normal(m, s).holds; break;
      case SubmonoidFilter::left_normal: pass = is_left_normal(m, s).holds; break;
      case SubmonoidFilter::normal: pass = is_normal(m, s).normal; break;
    }
    if (pass && !emit(s)) return;
  }
}

void enumerate_homs(const FiniteMonoid& dom, const FiniteMonoid& cod,
                    const std::function<bool(const MonoidHom&)>& emit) {
  double candidates = std::pow(static_cast<double>(cod.size()), dom.size());
  if (candidates > 1e7)
    throw Error(ErrorKind::SizeGuardExceeded,
                "enumerate_homs guard: |cod|^|dom| <= 10^7",
                {cod.size(), dom.size()});
  int nd = dom.size(), nc = cod.size();
  std::vector<int> map(nd, 0);
  while (true) {
    if (map[dom.identity()] == cod.identity()) {
      bool hom = true;
      for (int a = 0; a < nd && hom; ++a)
        for (int b = 0; b < nd && hom; ++b)
          if (map[dom.add(a, b)] != cod.add(map[a], map[b])) hom = false;
      if (hom && !emit(MonoidHom(dom, cod, map))) return;
    }
    int i = nd - 1;
    while (i >= 0 && map[i] == nc - 1) map[i--] = 0;
    if (i < 0) break;
    ++map[i];
  }
}

void enumerate_actions(const FiniteMonoid& x, const FiniteMonoid& b, const Submonoid& px,
                       const Submonoid& pb,
                       const std::function<bool(const PreorderedAction&)>& emit) {
  if (x.size() > 3 || b.size() > 3)
    throw Error(ErrorKind::SizeGuardExceeded, "enumerate_actions guard: |X|, |B| <= 3",
                {x.size(), b.size()});
  if (px.parent() != x || pb.parent() != b)
    throw Error(ErrorKind::TypeMismatch, "cones belong to different monoids");
  auto rn_x = is_right_normal(x, px);
  auto rn_b = is_right_normal(b, pb);
  if (!rn_x.holds || !rn_b.holds)
    throw Error(ErrorKind::ConeNotRightNormal, "cones must be right normal");

  EndomorphismMonoid end = endomorphism_monoid(x);
  const auto& cone = pb.members();
  int ncone = pb.count();

  // pairs (x element, cone column); forced pairs realize A1 and A2
  std::vector<std::pair<int, int>> free_pairs;
  std::vector<std::vector<bool>> forced(x.size(), std::vector<bool>(ncone, false));
  int id_col = static_cast<int>(
      std::lower_bound(cone.begin(), cone.end(), b.identity()) - cone.begin());
  for (int col = 0; col < ncone; ++col) forced[x.identity()][col] = true;
  for (int xv : px.members()) forced[xv][id_col] = true;
  for (int xv = 0; xv < x.size(); ++xv)
    for (int col = 0; col < ncone; ++col)
      if (!forced[xv][col]) free_pairs.emplace_back(xv, col);

  bool stop = false;
  enumerate_homs(b, end.monoid, [&](const MonoidHom& phi_hom) {
    std::vector<std::vector<int>> act_rows(b.size(), std::vector<int>(x.size()));
    for (int bv = 0; bv < b.size(); ++bv) act_rows[bv] = end.maps[phi_hom(bv)];
    ActionTable phi{x, b, std::move(act_rows)};

    for (std::uint64_t bits = 0; bits < (1ull << free_pairs.size()); ++bits) {
      std::vector<std::vector<int>> xi(x.size(), std::vector<int>(ncone));
      for (int xv = 0; xv < x.size(); ++xv)
        for (int col = 0; col < ncone; ++col)
          xi[xv][col] = forced[xv][col] ? xv : x.identity();
      for (size_t i = 0; i < free_pairs.size(); ++i)
        if ((bits >> i) & 1u) {
          auto [xv, col] = free_pairs[i];
          xi[xv][col] = xv;
        }
      PreorderedAction act{x, b, px, pb, phi, std::move(xi)};
      if (!validate_action(act).ok()) continue;
      if (!emit(act)) {
        stop = true;
        return false;
      }
    }
    return true;
  });
  (void)stop;
}

std::vector<FiniteMonoid> collect_monoids(int n) {
  std::vector<FiniteMonoid> out;
  enumerate_monoids(n, [&](const FiniteMonoid& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::vector<Preorder> collect_compatible_preorders(const FiniteMonoid& m) {
  std::vector<Preorder> out;
  enumerate_compatible_preorders(m, [&](const Preorder& r) {
    out.push_back(r);
    return true;
  });
  return out;
}

std::vector<Submonoid> collect_submonoids(const FiniteMonoid& m, SubmonoidFilter filter) {
  std::vector<Submonoid> out;
  enumerate_submonoids(m, filter, [&](const Submonoid& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::vector<MonoidHom> collect_homs(const FiniteMonoid& dom, const FiniteMonoid& cod) {
  std::vector<MonoidHom> out;
  enumerate_homs(dom, cod, [&](const MonoidHom& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

std::vector<PreorderedAction> collect_actions(const FiniteMonoid& x, const FiniteMonoid& b,
                                              const Submonoid& px, const Submonoid& pb) {
  std::vector<PreorderedAction> out;
  enumerate_actions(x, b, px, pb, [&](const PreorderedAction& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

}  // namespace pomkit
