#include "pomkit/report.hpp"

#include <ostream>
#include <sstream>

namespace pomkit {

namespace {

json pair_list(const std::vector<std::pair<int, int>>& pairs) {
  json out = json::array();
  for (auto [a, b] : pairs) out.push_back(json::array({a, b}));
  return out;
}

json quad(const std::array<int, 4>& q) { return json::array({q[0], q[1], q[2], q[3]}); }

}  // namespace

std::string set_to_string(const std::vector<int>& elements) {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < elements.size(); ++i) out << (i ? "," : "") << elements[i];
  out << '}';
  return out.str();
}

json preorder_json(const Preorder& order) {
  return json{{"size", order.size()}, {"pairs", pair_list(order.nonreflexive_pairs())}};
}

json monoid_json(const FiniteMonoid& m) {
  json table = json::array();
  for (int i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(m.add(i, j));
    table.push_back(std::move(row));
  }
  return json{{"size", m.size()}, {"identity", m.identity()}, {"table", std::move(table)}};
}

json classification_json(const std::string& object, const ClassificationReport& report) {
  json witnesses = json::object();
  if (report.compatible_witness) witnesses["compatible"] = quad(*report.compatible_witness);
  if (report.star_witness)
    witnesses["in_ordmon_star"] =
        json::array({report.star_witness->first, report.star_witness->second});
  if (report.right_normal_witness_a)
    witnesses["cone_right_normal"] = json{{"a", *report.right_normal_witness_a},
                                          {"element", *report.right_normal_witness_elem}};
  if (report.left_normal_witness_a)
    witnesses["cone_left_normal"] = json{{"a", *report.left_normal_witness_a},
                                         {"element", *report.left_normal_witness_elem}};
  if (report.induced_compat_witness)
    witnesses["induced_right_compatible"] = quad(*report.induced_compat_witness);
  if (report.commutative_witness)
    witnesses["commutative"] = json::array(
        {report.commutative_witness->first, report.commutative_witness->second});

  return json{{"object", object},
              {"compatible", report.compatible},
              {"cone", report.cone},
              {"induced_right", preorder_json(report.induced_right_order)},
              {"induced_left", preorder_json(report.induced_left_order)},
              {"in_ordmon_star", report.in_ordmon_star},
              {"cone_right_normal", report.cone_right_normal},
              {"cone_left_normal", report.cone_left_normal},
              {"induced_right_compatible", report.induced_right_compatible},
              {"commutative", report.commutative},
              {"witnesses", std::move(witnesses)}};
}

json cosets_json(const std::string& object, const std::vector<int>& submonoid,
                 const std::vector<CosetRow>& rows) {
  json out_rows = json::array();
  for (const auto& row : rows)
    out_rows.push_back(json{{"a", row.a}, {"left", row.left}, {"right", row.right}});
  return json{{"object", object}, {"submonoid", submonoid}, {"rows", std::move(out_rows)}};
}

json normality_json(const std::string& object, const std::vector<int>& submonoid,
                    const NormalityReport& report) {
  json out{{"object", object},
           {"submonoid", submonoid},
           {"right_normal", report.right.holds},
           {"left_normal", report.left.holds},
           {"normal", report.normal}};
  if (!report.right.holds)
    out["right_witness"] = json{{"a", *report.right.witness_a},
                                {"element", *report.right.witness_elem}};
  if (!report.left.holds)
    out["left_witness"] =
        json{{"a", *report.left.witness_a}, {"element", *report.left.witness_elem}};
  return out;
}

json coreflect_json(const std::string& object, const CoreflectionResult& result) {
  return json{{"object", object},
              {"order", preorder_json(result.object.order())},
              {"cone", result.object.cone().members()},
              {"arrow", "identity"}};
}

json fragment_json(const std::string& object, const FreeFragment& fragment) {
  json words = json::array();
  for (const auto& w : fragment.words()) words.push_back(w);
  return json{{"object", object},
              {"depth", fragment.depth()},
              {"word_count", fragment.words().size()},
              {"words", std::move(words)},
              {"pairs", pair_list(fragment.nonreflexive_pairs())}};
}

json s1s2_json(const S1S2Report& report) {
  json out{{"s1", report.s1}, {"s2", report.s2}};
  if (report.s1_witness) out["s1_witness"] = *report.s1_witness;
  if (report.s2_witness)
    out["s2_witness"] = json::array({report.s2_witness->first, report.s2_witness->second});
  return out;
}

json consequences_json(const ConsequencesReport& report) {
  auto one = [](const ConsequenceReport& c) {
    json out{{"holds", c.holds}};
    if (!c.holds) out["witness"] = c.witness;
    return out;
  };
  return json{{"c1", one(report.c1)},
              {"c2", one(report.c2)},
              {"c3", one(report.c3)},
              {"c4", one(report.c4)},
              {"all", report.ok()}};
}

json action_axioms_json(const ActionAxiomReport& report) {
  auto one = [](const AxiomCheck& c) {
    json out{{"holds", c.holds}};
    if (!c.holds) out["witness"] = c.witness;
    return out;
  };
  return json{{"a1", one(report.a1)},
              {"a2", one(report.a2)},
              {"a3", one(report.a3)},
              {"a4", one(report.a4)},
              {"all", report.ok()}};
}

json roundtrip_hg_json(const RoundTripHGReport& report) {
  auto one = [](const IsoCheck& c) {
    json out{{"holds", c.holds}};
    if (!c.holds) out["detail"] = c.detail;
    return out;
  };
  return json{{"beta_bijective", one(report.beta_bijective)},
              {"beta_hom", one(report.beta_hom)},
              {"squares", one(report.squares)},
              {"cone_bijection", one(report.cone_bijection)},
              {"all", report.ok()}};
}

json roundtrip_gh_json(const RoundTripGHReport& report) {
  return json{{"carriers_equal", report.carriers_equal},
              {"cones_equal", report.cones_equal},
              {"phi_equal", report.phi_equal},
              {"fixed_points_equal", report.fixed_points_equal},
              {"xi_canonical_equal", report.xi_canonical_equal},
              {"all", report.ok()}};
}

json zz_json(const ZzDemoReport& report) {
  auto one = [](const WindowCheck& c) {
    return json{{"checked", c.checked}, {"holds", c.holds}};
  };
  json samples = json::array();
  for (const auto& s : report.samples)
    samples.push_back(json{{"u", s.u}, {"v", s.v}, {"xi", s.xi}, {"in_fixed_set", s.in_fixed_set}});
  return json{{"window", report.window},
              {"a1", one(report.a1)},
              {"a2", one(report.a2)},
              {"a3", one(report.a3)},
              {"a4", one(report.a4)},
              {"fixed_set_positive", one(report.fixed_set_positive)},
              {"fixed_set_negative", one(report.fixed_set_negative)},
              {"s1_sum", one(report.s1_sum)},
              {"s2_sum", one(report.s2_sum)},
              {"s1_product", one(report.s1_product)},
              {"s2_product", one(report.s2_product)},
              {"xi_agreement", one(report.xi_agreement)},
              {"samples", std::move(samples)},
              {"all", report.ok()}};
}

void render_preorder(std::ostream& out, const Preorder& order) {
  auto pairs = order.nonreflexive_pairs();
  if (pairs.empty()) {
    out << "(discrete)";
    return;
  }
  for (size_t i = 0; i < pairs.size(); ++i)
    out << (i ? ", " : "") << pairs[i].first << "<=" << pairs[i].second;
}

void render_classification(std::ostream& out, const std::string& object,
                           const ClassificationReport& report) {
  out << "classification of " << object << "\n";
  out << "  compatible:               " << (report.compatible ? "yes" : "no") << "\n";
  out << "  cone:                     " << set_to_string(report.cone) << "\n";
  out << "  induced right order:      ";
  render_preorder(out, report.induced_right_order);
  out << "\n  induced left order:       ";
  render_preorder(out, report.induced_left_order);
  out << "\n  order equals induced:     " << (report.in_ordmon_star ? "yes" : "no");
  if (report.star_witness)
    out << "   (pair " << report.star_witness->first << "<=" << report.star_witness->second
        << " is not induced)";
  out << "\n  cone right normal:        " << (report.cone_right_normal ? "yes" : "no");
  if (report.right_normal_witness_a)
    out << "   (a=" << *report.right_normal_witness_a << ", element "
        << *report.right_normal_witness_elem << " of a+P escapes P+a)";
  out << "\n  cone left normal:         " << (report.cone_left_normal ? "yes" : "no");
  if (report.left_normal_witness_a)
    out << "   (a=" << *report.left_normal_witness_a << ", element "
        << *report.left_normal_witness_elem << " of P+a escapes a+P)";
  out << "\n  induced right compatible: " << (report.induced_right_compatible ? "yes" : "no");
  if (report.induced_compat_witness) {
    const auto& w = *report.induced_compat_witness;
    out << "   (fails at a=" << w[0] << " b=" << w[1] << " c=" << w[2] << " d=" << w[3] << ")";
  }
  out << "\n  commutative:              " << (report.commutative ? "yes" : "no");
  if (report.commutative_witness)
    out << "   (" << report.commutative_witness->first << "+"
        << report.commutative_witness->second << " differs)";
  out << "\n";
}

void render_cosets(std::ostream& out, const std::string& object,
                   const std::vector<CosetRow>& rows) {
  out << "cosets for " << object << "\n";
  out << "a | a+S | S+a\n";
  for (const auto& row : rows)
    out << row.a << " | " << set_to_string(row.left) << " | " << set_to_string(row.right)
        << "\n";
}

void render_zz(std::ostream& out, const ZzDemoReport& report) {
  auto line = [&](const char* name, const WindowCheck& c) {
    out << "  " << name << ": " << (c.holds ? "ok" : "FAIL") << " (" << c.checked
        << " checks)\n";
  };
  out << "integer demo, window " << report.window << "\n";
  line("A1", report.a1);
  line("A2", report.a2);
  line("A3", report.a3);
  line("A4", report.a4);
  line("fixed set, u >= 0", report.fixed_set_positive);
  line("fixed set, u < 0", report.fixed_set_negative);
  line("S1 (sum presentation)", report.s1_sum);
  line("S2 (sum presentation)", report.s2_sum);
  line("S1 (product presentation)", report.s1_product);
  line("S2 (product presentation)", report.s2_product);
  line("xi matches cone membership", report.xi_agreement);
  for (const auto& s : report.samples)
    out << "  xi(" << s.u << "," << s.v << ") = " << s.xi
        << (s.in_fixed_set ? "  (fixed)" : "  (not fixed)") << "\n";
  out << (report.ok() ? "all window checks passed" : "window checks FAILED") << "\n";
}

}  // namespace pomkit
