#include "pomkit/monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace pomkit {

namespace {

std::string fmt(const char* text, const std::vector<long long>& args) {
  std::ostringstream out;
  out << text;
  const char* sep = " (";
  for (long long a : args) {
    out << sep << a;
    sep = ", ";
  }
  if (!args.empty()) out << ")";
  return out.str();
}

[[noreturn]] void fail(ErrorKind kind, const char* text, std::vector<long long> args = {}) {
  throw Error(kind, fmt(text, args), std::move(args));
}

}  // namespace

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfRangeEntry: return "OutOfRangeEntry";
    case ErrorKind::IdentityLawViolation: return "IdentityLawViolation";
    case ErrorKind::AssociativityViolation: return "AssociativityViolation";
    case ErrorKind::NotAHom: return "NotAHom";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorKind::IllFormedCongruence: return "IllFormedCongruence";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::IncompatibleOrder: return "IncompatibleOrder";
    case ErrorKind::ConeNotRightNormal: return "ConeNotRightNormal";
    case ErrorKind::NotSchreier: return "NotSchreier";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownReference: return "UnknownReference";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Error";
}

FiniteMonoid::FiniteMonoid(int size, int identity, std::vector<int> table)
    : size_(size), identity_(identity), table_(std::move(table)) {
  if (size_ < 1 || size_ > kMaxElements)
    fail(ErrorKind::SizeGuardExceeded, "monoid size must be in 1..64", {size_});
  if (identity_ < 0 || identity_ >= size_)
    fail(ErrorKind::OutOfRangeEntry, "identity index out of range", {identity_});
  if (table_.size() != static_cast<size_t>(size_) * size_)
    fail(ErrorKind::SizeMismatch, "table must have size*size entries",
         {static_cast<long long>(table_.size()), size_});
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) {
      int v = add(i, j);
      if (v < 0 || v >= size_)
        fail(ErrorKind::OutOfRangeEntry, "table entry out of range", {i, j});
    }
  for (int a = 0; a < size_; ++a)
    if (add(identity_, a) != a || add(a, identity_) != a)
      fail(ErrorKind::IdentityLawViolation, "identity law fails at element", {a});
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b)
      for (int c = 0; c < size_; ++c)
        if (add(add(a, b), c) != add(a, add(b, c)))
          fail(ErrorKind::AssociativityViolation, "associativity fails at triple", {a, b, c});
}

FiniteMonoid validate_monoid(const std::vector<std::vector<int>>& rows, int identity) {
  int n = static_cast<int>(rows.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      fail(ErrorKind::SizeMismatch, "ragged table row",
           {static_cast<long long>(row.size()), n});
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return FiniteMonoid(n, identity, std::move(flat));
}

Submonoid::Submonoid(FiniteMonoid parent, std::vector<int> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (int a : members_) {
    if (a < 0 || a >= parent_.size())
      fail(ErrorKind::OutOfRangeEntry, "submonoid member out of range", {a});
    mask_ |= 1ull << a;
  }
  if (!contains(parent_.identity()))
    fail(ErrorKind::ValidationError, "submonoid must contain the identity",
         {parent_.identity()});
  for (int a : members_)
    for (int b : members_)
      if (!contains(parent_.add(a, b)))
        fail(ErrorKind::ValidationError, "submonoid not closed at pair", {a, b});
}

MonoidHom::MonoidHom(FiniteMonoid dom, FiniteMonoid cod, std::vector<int> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  if (map_.size() != static_cast<size_t>(dom_.size()))
    fail(ErrorKind::SizeMismatch, "hom map length must equal dom size",
         {static_cast<long long>(map_.size()), dom_.size()});
  for (int a = 0; a < dom_.size(); ++a)
    if (map_[a] < 0 || map_[a] >= cod_.size())
      fail(ErrorKind::OutOfRangeEntry, "hom value out of range", {a, map_[a]});
  if (map_[dom_.identity()] != cod_.identity())
    fail(ErrorKind::NotAHom, "identity not preserved", {dom_.identity()});
  for (int a = 0; a < dom_.size(); ++a)
    for (int b = 0; b < dom_.size(); ++b)
      if (map_[dom_.add(a, b)] != cod_.add(map_[a], map_[b]))
        fail(ErrorKind::NotAHom, "operation not preserved at pair", {a, b});
}

MonoidHom identity_hom(const FiniteMonoid& m) {
  std::vector<int> id(m.size());
  std::iota(id.begin(), id.end(), 0);
  return MonoidHom(m, m, std::move(id));
}

MonoidHom compose_hom(const MonoidHom& f, const MonoidHom& g) {
  if (f.cod() != g.dom())
    fail(ErrorKind::TypeMismatch, "compose_hom: cod(f) != dom(g)");
  std::vector<int> map(f.dom().size());
  for (int a = 0; a < f.dom().size(); ++a) map[a] = g(f(a));
  return MonoidHom(f.dom(), g.cod(), std::move(map));
}

bool is_commutative(const FiniteMonoid& m) { return !commutativity_witness(m); }

std::optional<std::pair<int, int>> commutativity_witness(const FiniteMonoid& m) {
  for (int a = 0; a < m.size(); ++a)
    for (int b = 0; b < m.size(); ++b)
      if (m.add(a, b) != m.add(b, a)) return std::make_pair(a, b);
  return std::nullopt;
}

Submonoid submonoid_closure(const FiniteMonoid& m, const std::vector<int>& seed) {
  std::uint64_t mask = 1ull << m.identity();
  for (int a : seed) {
    if (a < 0 || a >= m.size())
      fail(ErrorKind::OutOfRangeEntry, "seed element out of range", {a});
    mask |= 1ull << a;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < m.size(); ++a) {
      if (!((mask >> a) & 1u)) continue;
      for (int b = 0; b < m.size(); ++b) {
        if (!((mask >> b) & 1u)) continue;
        int c = m.add(a, b);
        if (!((mask >> c) & 1u)) {
          mask |= 1ull << c;
          grew = true;
        }
      }
    }
  }
  std::vector<int> members;
  for (int a = 0; a < m.size(); ++a)
    if ((mask >> a) & 1u) members.push_back(a);
  return Submonoid(m, std::move(members));
}

Submonoid kernel(const MonoidHom& p) {
  std::vector<int> members;
  for (int a = 0; a < p.dom().size(); ++a)
    if (p(a) == p.cod().identity()) members.push_back(a);
  return Submonoid(p.dom(), std::move(members));
}

Congruence::Congruence(const FiniteMonoid& parent, std::vector<int> class_of)
    : class_of_(std::move(class_of)) {
  if (class_of_.size() != static_cast<size_t>(parent.size()))
    fail(ErrorKind::SizeMismatch, "partition length must equal monoid size",
         {static_cast<long long>(class_of_.size()), parent.size()});
  // renumber densely by first appearance
  std::map<int, int> renumber;
  for (int& c : class_of_) {
    auto [it, inserted] = renumber.emplace(c, static_cast<int>(renumber.size()));
    c = it->second;
  }
  num_classes_ = static_cast<int>(renumber.size());
}

namespace {

// Plain union-find on element indices.
struct Dsu {
  std::vector<int> up;
  explicit Dsu(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int a) {
    while (up[a] != a) a = up[a] = up[up[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    up[b] = a;
    return true;
  }
};

}  // namespace

Congruence congruence_closure(const FiniteMonoid& m,
                              const std::vector<std::pair<int, int>>& pairs) {
  Dsu dsu(m.size());
  std::vector<std::pair<int, int>> worklist;
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= m.size() || b < 0 || b >= m.size())
      fail(ErrorKind::OutOfRangeEntry, "congruence pair out of range", {a, b});
    if (dsu.unite(a, b)) worklist.emplace_back(a, b);
  }
  // close under one-sided translations; two-sided closure follows by
  // composing left and right translations
  while (!worklist.empty()) {
    auto [a, b] = worklist.back();
    worklist.pop_back();
    for (int c = 0; c < m.size(); ++c) {
      if (dsu.unite(m.add(c, a), m.add(c, b)))
        worklist.emplace_back(m.add(c, a), m.add(c, b));
      if (dsu.unite(m.add(a, c), m.add(b, c)))
        worklist.emplace_back(m.add(a, c), m.add(b, c));
    }
  }
  std::vector<int> class_of(m.size());
  for (int a = 0; a < m.size(); ++a) class_of[a] = dsu.find(a);
  return Congruence(m, std::move(class_of));
}

QuotientResult quotient(const FiniteMonoid& m, const Congruence& c) {
  if (c.size() != m.size())
    fail(ErrorKind::SizeMismatch, "congruence size must match monoid",
         {c.size(), m.size()});
  int k = c.num_classes();
  std::vector<int> rep(k, -1);
  for (int a = 0; a < m.size(); ++a)
    if (rep[c.class_of(a)] < 0) rep[c.class_of(a)] = a;
  std::vector<int> table(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      table[static_cast<size_t>(i) * k + j] = c.class_of(m.add(rep[i], rep[j]));
  // well-definedness across all members, not just representatives
  for (int a = 0; a < m.size(); ++a)
    for (int b = 0; b < m.size(); ++b)
      if (c.class_of(m.add(a, b)) !=
          table[static_cast<size_t>(c.class_of(a)) * k + c.class_of(b)])
        fail(ErrorKind::IllFormedCongruence, "partition is not a congruence at pair",
             {a, b});
  FiniteMonoid q(k, c.class_of(m.identity()), std::move(table));
  MonoidHom proj(m, q, c.classes());
  return {std::move(q), std::move(proj)};
}

QuotientResult coequalizer_mon(const MonoidHom& f, const MonoidHom& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod())
    fail(ErrorKind::TypeMismatch, "coequalizer_mon: homs must be parallel");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < f.dom().size(); ++a) pairs.emplace_back(f(a), g(a));
  return quotient(f.cod(), congruence_closure(f.cod(), pairs));
}

int EndomorphismMonoid::index_of(const std::vector<int>& map) const {
  auto it = std::lower_bound(maps.begin(), maps.end(), map);
  if (it == maps.end() || *it != map) return -1;
  return static_cast<int>(it - maps.begin());
}

EndomorphismMonoid endomorphism_monoid(const FiniteMonoid& x) {
  if (x.size() > 6)
    fail(ErrorKind::SizeGuardExceeded, "endomorphism_monoid guard: size <= 6",
         {x.size()});
  int n = x.size();
  std::vector<std::vector<int>> endos;
  std::vector<int> map(n, 0);
  // lexicographic enumeration of all maps, filtered to endomorphisms
  while (true) {
    bool ok = map[x.identity()] == x.identity();
    for (int a = 0; ok && a < n; ++a)
      for (int b = 0; ok && b < n; ++b)
        if (map[x.add(a, b)] != x.add(map[a], map[b])) ok = false;
    if (ok) endos.push_back(map);
    int i = n - 1;
    while (i >= 0 && map[i] == n - 1) map[i--] = 0;
    if (i < 0) break;
    ++map[i];
  }
  int k = static_cast<int>(endos.size());
  EndomorphismMonoid result{FiniteMonoid(1, 0, {0}), endos};
  std::vector<int> table(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<int> comp(n);
      for (int a = 0; a < n; ++a) comp[a] = endos[i][endos[j][a]];
      table[static_cast<size_t>(i) * k + j] = result.index_of(comp);
    }
  std::vector<int> identity_map(n);
  std::iota(identity_map.begin(), identity_map.end(), 0);
  result.monoid = FiniteMonoid(k, result.index_of(identity_map), std::move(table));
  return result;
}

}  // namespace pomkit
