#include "pomkit/constructions.hpp"

#include <algorithm>

namespace pomkit {

namespace {

constexpr long long kWordGuard = 100000;

void check_monotone(const PreorderedSet& x, const PreorderedMonoid& target,
                    const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != x.size)
    throw Error(ErrorKind::SizeMismatch, "map length must equal alphabet size",
                {static_cast<long long>(f.size()), x.size});
  for (int v : f)
    if (v < 0 || v >= target.monoid().size())
      throw Error(ErrorKind::OutOfRangeEntry, "map value out of range", {v});
  for (int a = 0; a < x.size; ++a)
    for (int b = 0; b < x.size; ++b)
      if (x.order.leq(a, b) && !target.order().leq(f[a], f[b]))
        throw Error(ErrorKind::NotMonotone, "map not monotone at pair", {a, b});
}

}  // namespace

FreeFragment::FreeFragment(PreorderedSet base, int depth, std::vector<Word> words)
    : base_(std::move(base)), depth_(depth), words_(std::move(words)) {
  for (int i = 0; i < static_cast<int>(words_.size()); ++i) index_[words_[i]] = i;
}

int FreeFragment::index_of(const Word& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

bool FreeFragment::leq(const Word& u, const Word& v) const {
  if (u.size() != v.size()) return false;
  for (size_t i = 0; i < u.size(); ++i)
    if (!base_.order.leq(u[i], v[i])) return false;
  return true;
}

std::vector<std::pair<int, int>> FreeFragment::nonreflexive_pairs() const {
  std::vector<std::pair<int, int>> out;
  int n = static_cast<int>(words_.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq(words_[i], words_[j])) out.emplace_back(i, j);
  return out;
}

FreeFragment free_fragment(const PreorderedSet& x, int depth) {
  if (x.size != x.order.size())
    throw Error(ErrorKind::SizeMismatch, "alphabet size and order size differ",
                {x.size, x.order.size()});
  if (depth < 0)
    throw Error(ErrorKind::OutOfRangeEntry, "depth must be nonnegative", {depth});
  long long count = 1, layer = 1;
  for (int d = 1; d <= depth; ++d) {
    layer *= x.size;
    count += layer;
    if (count > kWordGuard)
      throw Error(ErrorKind::SizeGuardExceeded, "free fragment guard: at most 100000 words",
                  {count});
  }
  std::vector<Word> words;
  words.reserve(static_cast<size_t>(count));
  words.push_back({});
  size_t layer_begin = 0;
  for (int d = 1; d <= depth; ++d) {
    size_t layer_end = words.size();
    for (size_t i = layer_begin; i < layer_end; ++i)
      for (int letter = 0; letter < x.size; ++letter) {
        Word w = words[i];
        w.push_back(letter);
        words.push_back(std::move(w));
      }
    layer_begin = layer_end;
  }
  return FreeFragment(x, depth, std::move(words));
}

int universal_extend(const PreorderedSet& x, const PreorderedMonoid& target,
                     const std::vector<int>& f, const Word& w) {
  check_monotone(x, target, f);
  int acc = target.monoid().identity();
  for (int letter : w) {
    if (letter < 0 || letter >= x.size)
      throw Error(ErrorKind::OutOfRangeEntry, "word letter out of range", {letter});
    acc = target.monoid().add(acc, f[letter]);
  }
  return acc;
}

PreorderedMonoid lift_discrete(const FiniteMonoid& m) {
  return PreorderedMonoid(m, Preorder::discrete(m.size()));
}

PreorderedMonoid lift_total(const FiniteMonoid& m) {
  return PreorderedMonoid(m, Preorder::total(m.size()));
}

OrdCoequalizerResult coequalizer_ordmon(const PreorderedMonoid& a,
                                        const PreorderedMonoid& b,
                                        const MonoidHom& f, const MonoidHom& g) {
  if (f.dom() != a.monoid() || g.dom() != a.monoid() || f.cod() != b.monoid() ||
      g.cod() != b.monoid())
    throw Error(ErrorKind::TypeMismatch, "coequalizer_ordmon: homs must be parallel a -> b");
  for (const MonoidHom* h : {&f, &g})
    for (int u = 0; u < a.monoid().size(); ++u)
      for (int v = 0; v < a.monoid().size(); ++v)
        if (a.order().leq(u, v) && !b.order().leq((*h)(u), (*h)(v)))
          throw Error(ErrorKind::NotMonotone, "hom not monotone at pair", {u, v});

  QuotientResult carrier = coequalizer_mon(f, g);
  Preorder order = image_preorder_closure(b.order(), carrier.projection.map(),
                                          carrier.monoid.size());
  // compatibility of the closed image order is automatic here
  PreorderedMonoid object(carrier.monoid, std::move(order));
  return {std::move(object), std::move(carrier.projection)};
}

}  // namespace pomkit
