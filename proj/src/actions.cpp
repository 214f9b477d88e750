#include "pomkit/actions.hpp"

#include <algorithm>

namespace pomkit {

int PreorderedAction::cone_col(int v) const {
  const auto& members = pb.members();
  auto it = std::lower_bound(members.begin(), members.end(), v);
  if (it == members.end() || *it != v) return -1;
  return static_cast<int>(it - members.begin());
}

bool FixedPointSet::contains(int u, int v) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(u, v));
}

namespace {

void require_right_normal(const FiniteMonoid& m, const Submonoid& s, const char* what) {
  auto rn = is_right_normal(m, s);
  if (!rn.holds)
    throw Error(ErrorKind::ConeNotRightNormal,
                (std::string(what) + " cone is not right normal, witness").c_str(),
                {*rn.witness_a, *rn.witness_elem});
}

void check_action_shape(const PreorderedAction& act) {
  if (act.px.parent() != act.x || act.pb.parent() != act.b)
    throw Error(ErrorKind::TypeMismatch, "cones belong to different monoids");
  if (act.phi.x != act.x || act.phi.b != act.b)
    throw Error(ErrorKind::TypeMismatch, "action table is for different monoids");
  if (act.xi.size() != static_cast<size_t>(act.x.size()))
    throw Error(ErrorKind::SizeMismatch, "xi must have |X| rows",
                {static_cast<long long>(act.xi.size()), act.x.size()});
  for (const auto& row : act.xi) {
    if (row.size() != static_cast<size_t>(act.pb.count()))
      throw Error(ErrorKind::SizeMismatch, "xi row must have |P_B| entries",
                  {static_cast<long long>(row.size()), act.pb.count()});
    for (int v : row)
      if (v < 0 || v >= act.x.size())
        throw Error(ErrorKind::OutOfRangeEntry, "xi entry out of range", {v});
  }
  auto phi_check = validate_action_map(act.x, act.b, act.phi.act);
  if (!phi_check.valid) {
    std::vector<long long> args(phi_check.witness.begin(), phi_check.witness.end());
    throw Error(ErrorKind::InvalidAction, ("phi axiom fails: " + phi_check.axiom).c_str(),
                std::move(args));
  }
}

}  // namespace

ConedSplitExtension validate_coned_extension(ConedSplitExtension cext) {
  cext.ext = validate_split_extension(std::move(cext.ext));
  if (!cext.ext.q) cext.ext.q = find_retraction(cext.ext);
  if (cext.px.parent() != cext.ext.x || cext.pa.parent() != cext.ext.a ||
      cext.pb.parent() != cext.ext.b)
    throw Error(ErrorKind::TypeMismatch, "cones belong to different monoids");
  require_right_normal(cext.ext.x, cext.px, "X");
  require_right_normal(cext.ext.a, cext.pa, "A");
  require_right_normal(cext.ext.b, cext.pb, "B");
  for (int u : cext.px.members())
    if (!cext.pa.contains(cext.ext.k(u)))
      throw Error(ErrorKind::ValidationError, "k does not restrict to the cones at", {u});
  for (int v : cext.pb.members())
    if (!cext.pa.contains(cext.ext.s(v)))
      throw Error(ErrorKind::ValidationError, "s does not restrict to the cones at", {v});
  for (int w : cext.pa.members())
    if (!cext.pb.contains(cext.ext.p(w)))
      throw Error(ErrorKind::ValidationError, "p does not restrict to the cones at", {w});
  return cext;
}

ActionAxiomReport validate_action(const PreorderedAction& act) {
  check_action_shape(act);
  require_right_normal(act.x, act.px, "X");
  require_right_normal(act.b, act.pb, "B");

  const auto& cone = act.pb.members();
  int ncone = act.pb.count();
  ActionAxiomReport report;

  report.a1.holds = true;
  for (int col = 0; col < ncone && report.a1.holds; ++col)
    if (act.xi_of(act.x.identity(), col) != act.x.identity()) {
      report.a1.holds = false;
      report.a1.witness = {cone[col]};
    }

  int id_col = act.cone_col(act.b.identity());
  report.a2.holds = true;
  for (int xv : act.px.members())
    if (act.xi_of(xv, id_col) != xv) {
      report.a2.holds = false;
      report.a2.witness = {xv};
      break;
    }

  // fixed pairs (x, cone column)
  std::vector<std::pair<int, int>> fixed;
  for (int xv = 0; xv < act.x.size(); ++xv)
    for (int col = 0; col < ncone; ++col)
      if (act.xi_of(xv, col) == xv) fixed.emplace_back(xv, col);

  report.a3.holds = true;
  for (auto [x1, c1] : fixed) {
    for (auto [x2, c2] : fixed) {
      int b1 = cone[c1], b2 = cone[c2];
      int xs = act.x.add(x1, act.phi.of(b1, x2));
      int bs = act.b.add(b1, b2);
      int col = act.cone_col(bs);  // cone is closed, so col >= 0
      if (act.xi_of(xs, col) != xs) {
        report.a3.holds = false;
        report.a3.witness = {x1, b1, x2, b2};
        break;
      }
    }
    if (!report.a3.holds) break;
  }

  report.a4.holds = true;
  for (auto [u, cu] : fixed) {
    int v = cone[cu];
    for (int xv = 0; xv < act.x.size() && report.a4.holds; ++xv)
      for (int bv = 0; bv < act.b.size() && report.a4.holds; ++bv) {
        int target_b = act.b.add(bv, v);            // b + v
        int target_x = act.x.add(xv, act.phi.of(bv, u));  // x + b.u
        bool found = false;
        for (auto [u2, cv2] : fixed) {
          int v2 = cone[cv2];
          if (act.b.add(v2, bv) == target_b &&
              act.x.add(u2, act.phi.of(v2, xv)) == target_x) {
            found = true;
            break;
          }
        }
        if (!found) {
          report.a4.holds = false;
          report.a4.witness = {u, v, xv, bv};
        }
      }
    if (!report.a4.holds) break;
  }
  return report;
}

FixedPointSet fixed_point_set(const PreorderedAction& act) {
  check_action_shape(act);
  FixedPointSet out;
  const auto& cone = act.pb.members();
  for (int xv = 0; xv < act.x.size(); ++xv)
    for (int col = 0; col < act.pb.count(); ++col)
      if (act.xi_of(xv, col) == xv) out.pairs.emplace_back(xv, cone[col]);
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

PreorderedAction canonicalize_xi(const PreorderedAction& act) {
  PreorderedAction out = act;
  for (int xv = 0; xv < act.x.size(); ++xv)
    for (int col = 0; col < act.pb.count(); ++col)
      out.xi[xv][col] = (act.xi_of(xv, col) == xv) ? xv : act.x.identity();
  return out;
}

PreorderedAction g_extract(const ConedSplitExtension& input) {
  ConedSplitExtension cext = validate_coned_extension(input);
  const SplitExtension& ext = cext.ext;
  std::vector<std::vector<int>> phi_rows(ext.b.size(), std::vector<int>(ext.x.size()));
  for (int bv = 0; bv < ext.b.size(); ++bv)
    for (int xv = 0; xv < ext.x.size(); ++xv)
      phi_rows[bv][xv] = ext.qa(ext.a.add(ext.s(bv), ext.k(xv)));
  ActionTable phi{ext.x, ext.b, std::move(phi_rows)};

  const auto& cone = cext.pb.members();
  std::vector<std::vector<int>> xi(ext.x.size(), std::vector<int>(cone.size()));
  for (int u = 0; u < ext.x.size(); ++u)
    for (size_t col = 0; col < cone.size(); ++col) {
      bool in_pa = cext.pa.contains(ext.a.add(ext.k(u), ext.s(cone[col])));
      xi[u][col] = in_pa ? u : ext.x.identity();
    }

  PreorderedAction act{ext.x, ext.b, cext.px, cext.pb, std::move(phi), std::move(xi)};
  auto axioms = validate_action(act);
  if (!axioms.ok())
    throw Error(ErrorKind::ValidationError,
                "extracted action violates an axiom; extension data is inconsistent");
  return act;
}

ConedSplitExtension h_build(const PreorderedAction& act) {
  auto axioms = validate_action(act);
  const char* failing = !axioms.a1.holds   ? "A1"
                        : !axioms.a2.holds ? "A2"
                        : !axioms.a3.holds ? "A3"
                        : !axioms.a4.holds ? "A4"
                                           : nullptr;
  if (failing) {
    const AxiomCheck& bad = !axioms.a1.holds   ? axioms.a1
                            : !axioms.a2.holds ? axioms.a2
                            : !axioms.a3.holds ? axioms.a3
                                               : axioms.a4;
    std::vector<long long> args(bad.witness.begin(), bad.witness.end());
    throw Error(ErrorKind::InvalidAction, (std::string("action axiom fails: ") + failing).c_str(),
                std::move(args));
  }

  SplitExtension ext = semidirect(act.x, act.b, act.phi);
  FixedPointSet fixed = fixed_point_set(act);
  std::vector<int> pa_members;
  for (auto [u, v] : fixed.pairs) pa_members.push_back(pair_index(u, v, act.b.size()));
  // closure holds by A3; Submonoid construction re-checks it
  Submonoid pa(ext.a, std::move(pa_members));
  auto rn = is_right_normal(ext.a, pa);
  if (!rn.holds)
    throw Error(ErrorKind::ValidationError,
                "fixed-point cone not right normal despite axioms; internal error");
  ConedSplitExtension cext{std::move(ext), act.px, pa, act.pb};
  return validate_coned_extension(std::move(cext));
}

RoundTripHGReport roundtrip_hg(const ConedSplitExtension& input) {
  ConedSplitExtension cext = validate_coned_extension(input);
  PreorderedAction act = g_extract(cext);
  ConedSplitExtension built = h_build(act);
  const SplitExtension& ext = cext.ext;
  int nb = ext.b.size();

  RoundTripHGReport report;
  std::vector<int> beta(built.ext.a.size());
  for (int i = 0; i < built.ext.a.size(); ++i) {
    auto [xv, bv] = pair_unindex(i, nb);
    beta[i] = ext.a.add(ext.k(xv), ext.s(bv));
  }

  std::vector<bool> hit(ext.a.size(), false);
  report.beta_bijective.holds = built.ext.a.size() == ext.a.size();
  for (int i = 0; i < built.ext.a.size() && report.beta_bijective.holds; ++i) {
    if (hit[beta[i]]) report.beta_bijective.holds = false;
    hit[beta[i]] = true;
  }
  if (!report.beta_bijective.holds) report.beta_bijective.detail = "beta not bijective";

  report.beta_hom.holds = true;
  for (int i = 0; i < built.ext.a.size() && report.beta_hom.holds; ++i)
    for (int j = 0; j < built.ext.a.size() && report.beta_hom.holds; ++j)
      if (beta[built.ext.a.add(i, j)] != ext.a.add(beta[i], beta[j])) {
        report.beta_hom.holds = false;
        report.beta_hom.detail = "beta not multiplicative";
      }
  if (report.beta_hom.holds &&
      beta[built.ext.a.identity()] != ext.a.identity()) {
    report.beta_hom.holds = false;
    report.beta_hom.detail = "beta does not preserve the identity";
  }

  report.squares.holds = true;
  for (int xv = 0; xv < ext.x.size(); ++xv)
    if (beta[built.ext.k(xv)] != ext.k(xv)) {
      report.squares.holds = false;
      report.squares.detail = "beta . k' != k";
    }
  for (int bv = 0; bv < ext.b.size(); ++bv)
    if (beta[built.ext.s(bv)] != ext.s(bv)) {
      report.squares.holds = false;
      report.squares.detail = "beta . s' != s";
    }
  for (int i = 0; i < built.ext.a.size(); ++i)
    if (ext.p(beta[i]) != built.ext.p(i)) {
      report.squares.holds = false;
      report.squares.detail = "p . beta != p'";
    }

  std::vector<int> image;
  for (int i : built.pa.members()) image.push_back(beta[i]);
  std::sort(image.begin(), image.end());
  report.cone_bijection.holds = image == cext.pa.members();
  if (!report.cone_bijection.holds)
    report.cone_bijection.detail = "beta image of the fixed-point cone differs from P_A";
  return report;
}

RoundTripGHReport roundtrip_gh(const PreorderedAction& act) {
  ConedSplitExtension built = h_build(act);
  PreorderedAction back = g_extract(built);
  PreorderedAction canonical = canonicalize_xi(act);

  RoundTripGHReport report;
  report.carriers_equal = back.x == act.x && back.b == act.b;
  report.cones_equal = back.px == act.px && back.pb == act.pb;
  report.phi_equal = back.phi == act.phi;
  report.fixed_points_equal = fixed_point_set(back) == fixed_point_set(act);
  report.xi_canonical_equal = back.xi == canonical.xi;
  return report;
}

ExtMorphismReport check_ext_morphism(const MonoidHom& f0, const MonoidHom& f1,
                                     const MonoidHom& f2, const ConedSplitExtension& src,
                                     const ConedSplitExtension& dst) {
  if (f0.dom() != src.ext.x || f0.cod() != dst.ext.x || f1.dom() != src.ext.a ||
      f1.cod() != dst.ext.a || f2.dom() != src.ext.b || f2.cod() != dst.ext.b)
    throw Error(ErrorKind::TypeMismatch, "morphism components do not match the extensions");

  for (int xv = 0; xv < src.ext.x.size(); ++xv)
    if (dst.ext.k(f0(xv)) != f1(src.ext.k(xv)))
      return {false, "k-square", {xv}};
  for (int av = 0; av < src.ext.a.size(); ++av)
    if (dst.ext.p(f1(av)) != f2(src.ext.p(av)))
      return {false, "p-square", {av}};
  for (int bv = 0; bv < src.ext.b.size(); ++bv)
    if (dst.ext.s(f2(bv)) != f1(src.ext.s(bv)))
      return {false, "s-square", {bv}};
  for (int u : src.px.members())
    if (!dst.px.contains(f0(u))) return {false, "P_X-restriction", {u}};
  for (int w : src.pa.members())
    if (!dst.pa.contains(f1(w))) return {false, "P_A-restriction", {w}};
  for (int v : src.pb.members())
    if (!dst.pb.contains(f2(v))) return {false, "P_B-restriction", {v}};
  return {true, "", {}};
}

ActionMorphismReport check_action_morphism(const MonoidHom& f0, const MonoidHom& f2,
                                           const PreorderedAction& src,
                                           const PreorderedAction& dst) {
  if (f0.dom() != src.x || f0.cod() != dst.x || f2.dom() != src.b || f2.cod() != dst.b)
    throw Error(ErrorKind::TypeMismatch, "morphism components do not match the actions");

  ActionMorphismReport report;
  for (int u : src.px.members())
    if (!dst.px.contains(f0(u))) return {false, "P_X-restriction", {u}};
  for (int v : src.pb.members())
    if (!dst.pb.contains(f2(v))) return {false, "P_B-restriction", {v}};
  for (int bv = 0; bv < src.b.size(); ++bv)
    for (int xv = 0; xv < src.x.size(); ++xv)
      if (f0(src.phi.of(bv, xv)) != dst.phi.of(f2(bv), f0(xv)))
        return {false, "equivariance", {bv, xv}, {}};
  FixedPointSet src_fixed = fixed_point_set(src);
  FixedPointSet dst_fixed = fixed_point_set(dst);
  for (auto [u, v] : src_fixed.pairs) {
    int u2 = f0(u), v2 = f2(v);
    if (!dst_fixed.contains(u2, v2))
      return {false, "fixed-point-restriction", {u, v}, {}};
    report.fixed_point_map.push_back({{u, v}, {u2, v2}});
  }
  report.ok = true;
  return report;
}

namespace {

// the integer example: phi is trivial, xi(u,v) = u when 0 <= u <= v, else 0
long long zz_xi(long long u, long long v) { return (u >= 0 && u <= v) ? u : 0; }
bool zz_fixed(long long u, long long v) { return zz_xi(u, v) == u; }

}  // namespace

ZzDemoReport zz_demo(long long window) {
  if (window < 1)
    throw Error(ErrorKind::OutOfRangeEntry, "window must be at least 1", {window});
  const long long n = window;
  ZzDemoReport report;
  report.window = n;

  report.a1.holds = true;
  for (long long v = 0; v <= n; ++v) {
    ++report.a1.checked;
    if (zz_xi(0, v) != 0) report.a1.holds = false;
  }

  report.a2.holds = true;
  ++report.a2.checked;  // P_X = {0}
  if (zz_xi(0, 0) != 0) report.a2.holds = false;

  // fixed pairs within the window
  std::vector<std::pair<long long, long long>> fixed;
  for (long long u = -n; u <= n; ++u)
    for (long long v = 0; v <= n; ++v)
      if (zz_fixed(u, v)) fixed.emplace_back(u, v);

  report.a3.holds = true;
  for (auto [x1, b1] : fixed)
    for (auto [x2, b2] : fixed) {
      ++report.a3.checked;
      if (!zz_fixed(x1 + x2, b1 + b2)) report.a3.holds = false;
    }

  report.a4.holds = true;
  for (auto [u, v] : fixed)
    for (long long x = -n; x <= n; ++x)
      for (long long b = -n; b <= n; ++b) {
        ++report.a4.checked;
        // commutative witness u' = u, v' = v
        if (b + v != v + b || x + u != u + x || !zz_fixed(u, v))
          report.a4.holds = false;
      }

  report.fixed_set_positive.holds = true;
  report.fixed_set_negative.holds = true;
  for (long long u = -n; u <= n; ++u)
    for (long long v = 0; v <= n; ++v) {
      bool member = zz_fixed(u, v);
      if (u >= 0) {
        ++report.fixed_set_positive.checked;
        if (member != (u <= v)) report.fixed_set_positive.holds = false;
      } else {
        ++report.fixed_set_negative.checked;
        if (member) report.fixed_set_negative.holds = false;
      }
    }

  // sum presentation: k(x) = (x,-x), p(a) = a1+a2, s(b) = (0,b), q = pi1
  report.s1_sum.holds = true;
  for (long long a1 = -n; a1 <= n; ++a1)
    for (long long a2 = -n; a2 <= n; ++a2) {
      ++report.s1_sum.checked;
      long long qx = a1;
      long long first = qx + 0, second = -qx + (a1 + a2);
      if (first != a1 || second != a2) report.s1_sum.holds = false;
    }
  report.s2_sum.holds = true;
  for (long long x = -n; x <= n; ++x)
    for (long long b = -n; b <= n; ++b) {
      ++report.s2_sum.checked;
      if (x + 0 != x) report.s2_sum.holds = false;  // pi1((x,-x)+(0,b)) = x
    }

  // product presentation: k(x) = (x,0), p = pi2, s(b) = (0,b), q = pi1
  report.s1_product.holds = true;
  for (long long a1 = -n; a1 <= n; ++a1)
    for (long long a2 = -n; a2 <= n; ++a2) {
      ++report.s1_product.checked;
      if (a1 + 0 != a1 || 0 + a2 != a2) report.s1_product.holds = false;
    }
  report.s2_product.holds = true;
  for (long long x = -n; x <= n; ++x)
    for (long long b = -n; b <= n; ++b) {
      ++report.s2_product.checked;
      if (x + 0 != x) report.s2_product.holds = false;
    }

  report.xi_agreement.holds = true;
  for (long long u = -n; u <= n; ++u)
    for (long long v = 0; v <= n; ++v) {
      ++report.xi_agreement.checked;
      bool via_cone = (u >= 0) && (v - u >= 0);  // k(u)+s(v) = (u, v-u) in N x N
      if (zz_fixed(u, v) != via_cone) report.xi_agreement.holds = false;
    }

  for (auto [u, v] : std::initializer_list<std::pair<long long, long long>>{
           {3, 5}, {-2, 5}, {0, 0}})
    report.samples.push_back({u, v, zz_xi(u, v), zz_fixed(u, v)});
  return report;
}

}  // namespace pomkit
