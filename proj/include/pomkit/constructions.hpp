#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pomkit/pom.hpp"

namespace pomkit {

struct PreorderedSet {
  int size = 0;
  Preorder order;
};

using Word = std::vector<int>;

/// All words of length <= depth over a preordered alphabet, ordered by
/// "equal length and componentwise". Concatenation is partial (it stays
/// inside the fragment only when the combined length fits).
class FreeFragment {
 public:
  FreeFragment(PreorderedSet base, int depth, std::vector<Word> words);

  const PreorderedSet& base() const noexcept { return base_; }
  int depth() const noexcept { return depth_; }
  const std::vector<Word>& words() const noexcept { return words_; }
  int index_of(const Word& w) const;

  bool leq(const Word& u, const Word& v) const;

  /// Related index pairs with u != v, lexicographic by word index.
  std::vector<std::pair<int, int>> nonreflexive_pairs() const;

 private:
  PreorderedSet base_;
  int depth_ = 0;
  std::vector<Word> words_;  // by length, then lexicographically
  std::map<Word, int> index_;
};

FreeFragment free_fragment(const PreorderedSet& x, int depth);

/// Folds a monotone map f : X -> target over the letters of w.
/// Throws NotMonotone with the least offending pair of X.
int universal_extend(const PreorderedSet& x, const PreorderedMonoid& target,
                     const std::vector<int>& f, const Word& w);

PreorderedMonoid lift_discrete(const FiniteMonoid& m);
PreorderedMonoid lift_total(const FiniteMonoid& m);

struct OrdCoequalizerResult {
  PreorderedMonoid object;
  MonoidHom projection;
};

/// Coequalizer of monotone parallel homs f, g : a -> b. The carrier is the
/// monoid coequalizer; the order is the closed image of b's order.
OrdCoequalizerResult coequalizer_ordmon(const PreorderedMonoid& a,
                                        const PreorderedMonoid& b,
                                        const MonoidHom& f, const MonoidHom& g);

}  // namespace pomkit
