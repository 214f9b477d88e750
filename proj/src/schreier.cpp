#include "pomkit/schreier.hpp"

#include <algorithm>

namespace pomkit {

SplitExtension validate_split_extension(SplitExtension ext) {
  if (ext.k.dom() != ext.x || ext.k.cod() != ext.a || ext.p.dom() != ext.a ||
      ext.p.cod() != ext.b || ext.s.dom() != ext.b || ext.s.cod() != ext.a)
    throw Error(ErrorKind::TypeMismatch, "extension homs are not typed X -> A -> B");
  for (int bv = 0; bv < ext.b.size(); ++bv)
    if (ext.p(ext.s(bv)) != bv)
      throw Error(ErrorKind::ValidationError, "p(s(b)) != b at", {bv});
  for (int u = 0; u < ext.x.size(); ++u)
    for (int v = u + 1; v < ext.x.size(); ++v)
      if (ext.k(u) == ext.k(v))
        throw Error(ErrorKind::ValidationError, "k not injective at pair", {u, v});
  std::vector<bool> in_image(ext.a.size(), false);
  for (int u = 0; u < ext.x.size(); ++u) in_image[ext.k(u)] = true;
  for (int av = 0; av < ext.a.size(); ++av) {
    bool in_kernel = ext.p(av) == ext.b.identity();
    if (in_kernel != in_image[av])
      throw Error(ErrorKind::ValidationError, "image of k differs from kernel of p at",
                  {av});
  }
  if (ext.q) {
    if (ext.q->size() != static_cast<size_t>(ext.a.size()))
      throw Error(ErrorKind::SizeMismatch, "retraction length must equal |A|",
                  {static_cast<long long>(ext.q->size()), ext.a.size()});
    for (int v : *ext.q)
      if (v < 0 || v >= ext.x.size())
        throw Error(ErrorKind::OutOfRangeEntry, "retraction value out of range", {v});
    auto report = check_s1_s2(ext);
    if (!report.s1)
      throw Error(ErrorKind::ValidationError, "S1 fails at", {*report.s1_witness});
    if (!report.s2)
      throw Error(ErrorKind::ValidationError, "S2 fails at pair",
                  {report.s2_witness->first, report.s2_witness->second});
  }
  return ext;
}

std::vector<int> find_retraction(const SplitExtension& ext) {
  std::vector<int> q(ext.a.size());
  for (int av = 0; av < ext.a.size(); ++av) {
    int sp = ext.s(ext.p(av));
    int found = -1, count = 0;
    for (int xv = 0; xv < ext.x.size(); ++xv)
      if (ext.a.add(ext.k(xv), sp) == av) {
        if (found < 0) found = xv;
        ++count;
      }
    if (count != 1)
      throw Error(ErrorKind::NotSchreier, "element lacks a unique decomposition",
                  {av, count});
    q[av] = found;
  }
  return q;
}

S1S2Report check_s1_s2(const SplitExtension& ext) {
  if (!ext.q)
    throw Error(ErrorKind::TypeMismatch, "extension has no retraction to check");
  S1S2Report report;
  report.s1 = true;
  for (int av = 0; av < ext.a.size() && report.s1; ++av)
    if (ext.a.add(ext.k(ext.qa(av)), ext.s(ext.p(av))) != av) {
      report.s1 = false;
      report.s1_witness = av;
    }
  report.s2 = true;
  for (int xv = 0; xv < ext.x.size() && report.s2; ++xv)
    for (int bv = 0; bv < ext.b.size() && report.s2; ++bv)
      if (ext.qa(ext.a.add(ext.k(xv), ext.s(bv))) != xv) {
        report.s2 = false;
        report.s2_witness = std::make_pair(xv, bv);
      }
  return report;
}

ActionTable action_from_ext(const SplitExtension& ext) {
  if (!ext.q)
    throw Error(ErrorKind::TypeMismatch, "extension has no retraction; run find_retraction");
  std::vector<std::vector<int>> act(ext.b.size(), std::vector<int>(ext.x.size()));
  for (int bv = 0; bv < ext.b.size(); ++bv)
    for (int xv = 0; xv < ext.x.size(); ++xv)
      act[bv][xv] = ext.qa(ext.a.add(ext.s(bv), ext.k(xv)));
  auto check = validate_action_map(ext.x, ext.b, act);
  if (!check.valid)
    throw Error(ErrorKind::InvalidAction,
                "derived table is not an action; extension data is inconsistent");
  return {ext.x, ext.b, std::move(act)};
}

ActionMapCheck validate_action_map(const FiniteMonoid& x, const FiniteMonoid& b,
                                   const std::vector<std::vector<int>>& act) {
  if (act.size() != static_cast<size_t>(b.size()))
    throw Error(ErrorKind::SizeMismatch, "action table must have |B| rows",
                {static_cast<long long>(act.size()), b.size()});
  for (const auto& row : act) {
    if (row.size() != static_cast<size_t>(x.size()))
      throw Error(ErrorKind::SizeMismatch, "action row must have |X| entries",
                  {static_cast<long long>(row.size()), x.size()});
    for (int v : row)
      if (v < 0 || v >= x.size())
        throw Error(ErrorKind::OutOfRangeEntry, "action entry out of range", {v});
  }
  // each row is an endomorphism of X
  for (int bv = 0; bv < b.size(); ++bv) {
    if (act[bv][x.identity()] != x.identity())
      return {false, "endomorphism", {bv, x.identity()}};
    for (int u = 0; u < x.size(); ++u)
      for (int v = 0; v < x.size(); ++v)
        if (act[bv][x.add(u, v)] != x.add(act[bv][u], act[bv][v]))
          return {false, "endomorphism", {bv, u, v}};
  }
  for (int xv = 0; xv < x.size(); ++xv)
    if (act[b.identity()][xv] != xv) return {false, "identity_row", {xv}};
  for (int b1 = 0; b1 < b.size(); ++b1)
    for (int b2 = 0; b2 < b.size(); ++b2)
      for (int xv = 0; xv < x.size(); ++xv)
        if (act[b.add(b1, b2)][xv] != act[b1][act[b2][xv]])
          return {false, "multiplicative", {b1, b2, xv}};
  return {true, "", {}};
}

SplitExtension semidirect(const FiniteMonoid& x, const FiniteMonoid& b,
                          const ActionTable& phi) {
  if (phi.x != x || phi.b != b)
    throw Error(ErrorKind::TypeMismatch, "action table is for different monoids");
  auto check = validate_action_map(x, b, phi.act);
  if (!check.valid) {
    std::vector<long long> args(check.witness.begin(), check.witness.end());
    throw Error(ErrorKind::InvalidAction, ("action axiom fails: " + check.axiom).c_str(),
                std::move(args));
  }
  int nx = x.size(), nb = b.size(), n = nx * nb;
  if (n > kMaxElements)
    throw Error(ErrorKind::SizeGuardExceeded, "semidirect carrier exceeds 64 elements", {n});
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int x1 = 0; x1 < nx; ++x1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int x2 = 0; x2 < nx; ++x2)
        for (int b2 = 0; b2 < nb; ++b2) {
          int i = pair_index(x1, b1, nb), j = pair_index(x2, b2, nb);
          table[static_cast<size_t>(i) * n + j] =
              pair_index(x.add(x1, phi.of(b1, x2)), b.add(b1, b2), nb);
        }
  FiniteMonoid carrier(n, pair_index(x.identity(), b.identity(), nb), std::move(table));

  std::vector<int> kmap(nx), smap(nb), pmap(n), qmap(n);
  for (int xv = 0; xv < nx; ++xv) kmap[xv] = pair_index(xv, b.identity(), nb);
  for (int bv = 0; bv < nb; ++bv) smap[bv] = pair_index(x.identity(), bv, nb);
  for (int i = 0; i < n; ++i) {
    auto [xv, bv] = pair_unindex(i, nb);
    pmap[i] = bv;
    qmap[i] = xv;
  }
  SplitExtension ext{x,
                     carrier,
                     b,
                     MonoidHom(x, carrier, std::move(kmap)),
                     MonoidHom(carrier, b, std::move(pmap)),
                     MonoidHom(b, carrier, std::move(smap)),
                     std::move(qmap)};
  return validate_split_extension(std::move(ext));
}

namespace {

ConsequenceReport check_c3(const SplitExtension& ext) {
  ActionTable phi = action_from_ext(ext);
  SplitExtension sd = semidirect(ext.x, ext.b, phi);
  int nb = ext.b.size();
  // alpha : A -> X x B,  beta : X x B -> A
  std::vector<int> alpha(ext.a.size()), beta(sd.a.size());
  for (int av = 0; av < ext.a.size(); ++av)
    alpha[av] = pair_index(ext.qa(av), ext.p(av), nb);
  for (int i = 0; i < sd.a.size(); ++i) {
    auto [xv, bv] = pair_unindex(i, nb);
    beta[i] = ext.a.add(ext.k(xv), ext.s(bv));
  }
  for (int av = 0; av < ext.a.size(); ++av)
    if (beta[alpha[av]] != av) return {false, {av}};
  for (int i = 0; i < sd.a.size(); ++i)
    if (alpha[beta[i]] != i) return {false, {i}};
  // both directions must be homs; construction throws if not, so probe
  for (int u = 0; u < ext.a.size(); ++u)
    for (int v = 0; v < ext.a.size(); ++v)
      if (alpha[ext.a.add(u, v)] != sd.a.add(alpha[u], alpha[v]))
        return {false, {u, v}};
  return {true, {}};
}

ConsequenceReport check_c4(const SplitExtension& ext) {
  // cokernel of k = coequalizer of k and the constant-to-identity hom
  MonoidHom zero(ext.x, ext.a, std::vector<int>(ext.x.size(), ext.a.identity()));
  QuotientResult coker = coequalizer_mon(ext.k, zero);
  // p also merges the pair, so it factors through the coequalizer as t;
  // C4 holds when t is an isomorphism
  int classes = coker.monoid.size();
  std::vector<int> t(classes, -1);
  for (int av = 0; av < ext.a.size(); ++av) {
    int c = coker.projection(av);
    if (t[c] < 0) {
      t[c] = ext.p(av);
    } else if (t[c] != ext.p(av)) {
      return {false, {av}};  // p does not factor: not even well-defined
    }
  }
  if (classes != ext.b.size()) return {false, {classes, ext.b.size()}};
  std::vector<bool> hit(ext.b.size(), false);
  for (int c = 0; c < classes; ++c) {
    if (hit[t[c]]) return {false, {c}};
    hit[t[c]] = true;
  }
  return {true, {}};
}

}  // namespace

ConsequencesReport check_consequences(const SplitExtension& ext) {
  if (!ext.q)
    throw Error(ErrorKind::TypeMismatch, "extension has no retraction; run find_retraction");
  ConsequencesReport report;
  ActionTable phi = action_from_ext(ext);

  report.c1.holds = true;
  for (int bv = 0; bv < ext.b.size() && report.c1.holds; ++bv)
    for (int xv = 0; xv < ext.x.size() && report.c1.holds; ++xv)
      if (ext.a.add(ext.k(phi.of(bv, xv)), ext.s(bv)) !=
          ext.a.add(ext.s(bv), ext.k(xv))) {
        report.c1.holds = false;
        report.c1.witness = {bv, xv};
      }

  report.c2.holds = true;
  for (int a1 = 0; a1 < ext.a.size() && report.c2.holds; ++a1)
    for (int a2 = 0; a2 < ext.a.size() && report.c2.holds; ++a2)
      if (ext.qa(ext.a.add(a1, a2)) !=
          ext.x.add(ext.qa(a1), phi.of(ext.p(a1), ext.qa(a2)))) {
        report.c2.holds = false;
        report.c2.witness = {a1, a2};
      }

  report.c3 = check_c3(ext);
  report.c4 = check_c4(ext);
  return report;
}

}  // namespace pomkit
