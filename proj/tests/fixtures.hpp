#pragma once

#include <vector>

#include "pomkit/monoid.hpp"
#include "pomkit/pom.hpp"

namespace fixtures {

using pomkit::FiniteMonoid;
using pomkit::validate_monoid;

// 5-element positively preordered monoid: the square-diagram example
inline FiniteMonoid ex22() {
  return validate_monoid({{0, 1, 2, 3, 4},
                          {1, 1, 4, 4, 4},
                          {2, 2, 4, 4, 4},
                          {3, 3, 4, 4, 4},
                          {4, 4, 4, 4, 4}},
                         0);
}

// 5-element monoid whose full cone is left normal but not right normal
inline FiniteMonoid ex23() {
  return validate_monoid({{0, 1, 2, 3, 4},
                          {1, 1, 2, 2, 4},
                          {2, 1, 2, 1, 4},
                          {3, 1, 2, 1, 4},
                          {4, 4, 4, 4, 4}},
                         0);
}

// 3-element commutative monoid whose cone does not determine the order
inline FiniteMonoid comm3() {
  return validate_monoid({{0, 1, 2}, {1, 1, 1}, {2, 1, 1}}, 0);
}

inline FiniteMonoid trivial() { return validate_monoid({{0}}, 0); }

inline FiniteMonoid z2() { return validate_monoid({{0, 1}, {1, 0}}, 0); }

// two-element max semilattice
inline FiniteMonoid sl2() { return validate_monoid({{0, 1}, {1, 1}}, 0); }

// three-element max chain
inline FiniteMonoid chain3() {
  return validate_monoid({{0, 1, 2}, {1, 1, 2}, {2, 2, 2}}, 0);
}

// direct product with index (x, b) -> x*|B| + b
inline FiniteMonoid direct_product(const FiniteMonoid& x, const FiniteMonoid& b) {
  int nx = x.size(), nb = b.size(), n = nx * nb;
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int x1 = 0; x1 < nx; ++x1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int x2 = 0; x2 < nx; ++x2)
        for (int b2 = 0; b2 < nb; ++b2)
          table[static_cast<size_t>(x1 * nb + b1) * n + (x2 * nb + b2)] =
              x.add(x1, x2) * nb + b.add(b1, b2);
  return FiniteMonoid(n, x.identity() * nb + b.identity(), std::move(table));
}

inline pomkit::Preorder ex22_order() {
  return pomkit::Preorder::closure_from_edges(5, {{0, 1},
                                                  {0, 2},
                                                  {0, 3},
                                                  {0, 4},
                                                  {1, 2},
                                                  {1, 3},
                                                  {1, 4},
                                                  {2, 3},
                                                  {2, 4},
                                                  {3, 4}});
}

inline pomkit::Preorder ex23_order() {
  return pomkit::Preorder::closure_from_edges(5, {{0, 1},
                                                  {0, 2},
                                                  {0, 3},
                                                  {0, 4},
                                                  {1, 2},
                                                  {1, 4},
                                                  {2, 4},
                                                  {3, 1},
                                                  {3, 2},
                                                  {3, 4}});
}

inline pomkit::Preorder ex24_order() {
  return pomkit::Preorder::closure_from_edges(5, {{0, 1}, {2, 4}, {3, 4}});
}

inline pomkit::Preorder comm3_order() {
  return pomkit::Preorder::closure_from_edges(3, {{0, 1}, {0, 2}, {1, 2}, {2, 1}});
}

}  // namespace fixtures
