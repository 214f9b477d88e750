// pomtool: command-line front end for the preordered-monoid toolkit.
//
// Exit codes: 0 all checks pass, 1 a checked property fails (report emitted),
// 2 parse or validation error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pomkit/document.hpp"
#include "pomkit/enumerate.hpp"
#include "pomkit/report.hpp"

using namespace pomkit;

namespace {

struct Options {
  bool machine = false;
  bool seedless = false;  // output is deterministic regardless; accepted for scripts
};

struct Source {
  Document doc;
  std::optional<std::string> default_object;
};

Source load_source(const std::string& file) {
  if (std::filesystem::exists(file)) {
    std::ifstream in(file);
    std::ostringstream text;
    text << in.rdbuf();
    return {parse(text.str()), std::nullopt};
  }
  if (file == "builtin") return {builtin_examples(), std::nullopt};
  const auto names = builtin_example_names();
  if (builtin_examples().find(file) ||
      std::find(names.begin(), names.end(), file) != names.end())
    return {builtin_examples(), file};
  throw Error(ErrorKind::UnknownReference,
              ("no such file or builtin example: " + file).c_str());
}

std::string pick_object(const Source& source, const std::string& object_flag) {
  if (!object_flag.empty()) return object_flag;
  if (source.default_object) return *source.default_object;
  throw Error(ErrorKind::UnknownReference, "no --object given");
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

void emit(const Options& opt, const json& machine_form, const std::string& human_form) {
  if (opt.machine)
    std::cout << machine_form.dump(2) << "\n";
  else
    std::cout << human_form;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::NotSchreier:
    case ErrorKind::ConeNotRightNormal:
    case ErrorKind::InvalidAction:
      return 1;
    default:
      return 2;
  }
}

void report_error(const Options& opt, const Error& e) {
  json out{{"error", error_kind_name(e.kind())}, {"message", e.what()}, {"args", e.args()}};
  if (opt.machine)
    std::cout << out.dump(2) << "\n";
  else
    std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
}

// objects named on the command line resolve to a monoid plus an optional
// order; the submonoid defaults to the positive cone when an order exists
struct SubmonoidTarget {
  FiniteMonoid monoid;
  Submonoid submonoid;
  std::string object;
};

SubmonoidTarget resolve_submonoid(const Source& source, const std::string& object,
                                  const std::string& submonoid_flag) {
  const Block* block = source.doc.find(object);
  if (!block)
    throw Error(ErrorKind::UnknownReference, ("unknown block: " + object).c_str());
  const FiniteMonoid& m = source.doc.monoid_of(object);
  if (!submonoid_flag.empty())
    return {m, Submonoid(m, parse_list(submonoid_flag)), object};
  if (const auto* pom = std::get_if<PomBlock>(block))
    return {m, pom->pom.cone(), object};
  throw Error(ErrorKind::UnknownReference,
              "monoid objects need an explicit --submonoid list");
}

// ------------------------------ verbs ------------------------------

int cmd_validate(const Options& opt, const std::string& file) {
  Source source = load_source(file);
  json blocks = json::array();
  std::ostringstream human;
  for (const Block& block : source.doc.blocks()) {
    blocks.push_back(json{{"name", block_name(block)}, {"kind", block_kind(block)},
                          {"status", "ok"}});
    human << block_kind(block) << " " << block_name(block) << ": ok\n";
  }
  emit(opt, json{{"file", file}, {"blocks", blocks}}, human.str());
  return 0;
}

int cmd_classify(const Options& opt, const std::string& file, const std::string& object) {
  Source source = load_source(file);
  std::string name = pick_object(source, object);
  ClassificationReport report = classify(source.doc.pom_of(name).pom);
  std::ostringstream human;
  render_classification(human, name, report);
  emit(opt, classification_json(name, report), human.str());
  return 0;
}

int cmd_cone(const Options& opt, const std::string& file, const std::string& object) {
  Source source = load_source(file);
  std::string name = pick_object(source, object);
  const Submonoid& cone = source.doc.pom_of(name).pom.cone();
  emit(opt, json{{"object", name}, {"cone", cone.members()}},
       "cone of " + name + ": " + set_to_string(cone.members()) + "\n");
  return 0;
}

int cmd_cosets(const Options& opt, const std::string& file, const std::string& object,
               const std::string& submonoid_flag) {
  Source source = load_source(file);
  std::string name = pick_object(source, object);
  SubmonoidTarget target = resolve_submonoid(source, name, submonoid_flag);
  auto rows = coset_table(target.monoid, target.submonoid);
  std::ostringstream human;
  render_cosets(human, name, rows);
  emit(opt, cosets_json(name, target.submonoid.members(), rows), human.str());
  return 0;
}

int cmd_induced(const Options& opt, const std::string& file, const std::string& object,
                const std::string& side, const std::string& submonoid_flag) {
  Source source = load_source(file);
  std::string name = pick_object(source, object);
  SubmonoidTarget target = resolve_submonoid(source, name, submonoid_flag);
  Preorder order = side == "left" ? induced_left(target.monoid, target.submonoid)
                                  : induced_right(target.monoid, target.submonoid);
  std::ostringstream human;
  human << "induced " << side << " order of " << name << " by "
        << set_to_string(target.submonoid.members()) << ": ";
  render_preorder(human, order);
  human << "\n";
  emit(opt,
       json{{"object", name},
            {"side", side},
            {"submonoid", target.submonoid.members()},
            {"order", preorder_json(order)}},
       human.str());
  return 0;
}

int cmd_normality(const Options& opt, const std::string& file, const std::string& object,
                  const std::string& submonoid_flag) {
  Source source = load_source(file);
  std::string name = pick_object(source, object);
  SubmonoidTarget target = resolve_submonoid(source, name, submonoid_flag);
  NormalityReport report = is_normal(target.monoid, target.submonoid);
  std::ostringstream human;
  human << "submonoid " << set_to_string(target.submonoid.members()) << " of " << name
        << ":\n";
  human << "  right normal: " << (report.right.holds ? "yes" : "no");
  if (!report.right.holds)
    human << " (a=" << *report.right.witness_a << ", element " << *report.right.witness_elem
          << ")";
  human << "\n  left normal:  " << (report.left.holds ? "yes" : "no");
  if (!report.left.holds)
    human << " (a=" << *report.left.witness_a << ", element " << *report.left.witness_elem
          << ")";
  human << "\n  normal:       " << (report.normal ? "yes" : "no") << "\n";
  emit(opt, normality_json(name, target.submonoid.members(), report), human.str());
  return 0;
}

int cmd_coreflect(const Options& opt, const std::string& file, const std::string& object) {
  Source source = load_source(file);
  std::string name = pick_object(source, object);
  CoreflectionResult result = coreflect(source.doc.pom_of(name).pom);
  std::ostringstream human;
  human << "coreflection of " << name << ": order ";
  render_preorder(human, result.object.order());
  human << "\n  cone " << set_to_string(result.object.cone().members())
        << "\n  arrow: identity map\n";
  emit(opt, coreflect_json(name, result), human.str());
  return 0;
}

int cmd_free(const Options& opt, const std::string& file, const std::string& object,
             int depth) {
  Source source = load_source(file);
  std::string name = pick_object(source, object);
  const PosetBlock& poset = source.doc.poset_of(name);
  FreeFragment fragment = free_fragment(poset.poset, depth);
  std::ostringstream human;
  human << "free fragment over " << name << " at depth " << depth << ": "
        << fragment.words().size() << " words\n";
  for (const Word& w : fragment.words()) {
    human << "  [";
    for (size_t i = 0; i < w.size(); ++i) human << (i ? " " : "") << w[i];
    human << "]\n";
  }
  human << "order pairs (word indices): " << fragment.nonreflexive_pairs().size() << "\n";
  for (auto [i, j] : fragment.nonreflexive_pairs())
    human << "  " << i << " <= " << j << "\n";
  emit(opt, fragment_json(name, fragment), human.str());
  return 0;
}

int cmd_coeq(const Options& opt, const std::string& file, const std::string& f_name,
             const std::string& g_name) {
  Source source = load_source(file);
  const HomBlock& f = source.doc.hom_of(f_name);
  const HomBlock& g = source.doc.hom_of(g_name);
  if (f.from_ref != g.from_ref || f.to_ref != g.to_ref)
    throw Error(ErrorKind::TypeMismatch, "homs are not parallel");

  const Block* from_block = source.doc.find(f.from_ref);
  const Block* to_block = source.doc.find(f.to_ref);
  bool ordered = std::get_if<PomBlock>(from_block) && std::get_if<PomBlock>(to_block);
  std::ostringstream human;
  json machine;
  if (ordered) {
    auto result = coequalizer_ordmon(std::get<PomBlock>(*from_block).pom,
                                     std::get<PomBlock>(*to_block).pom, f.hom, g.hom);
    human << "preordered coequalizer: " << result.object.monoid().size()
          << " classes\n  projection:";
    for (int v : result.projection.map()) human << " " << v;
    human << "\n  order: ";
    render_preorder(human, result.object.order());
    human << "\n";
    machine = json{{"kind", "ordmon"},
                   {"monoid", monoid_json(result.object.monoid())},
                   {"order", preorder_json(result.object.order())},
                   {"projection", result.projection.map()}};
  } else {
    auto result = coequalizer_mon(f.hom, g.hom);
    human << "coequalizer: " << result.monoid.size() << " classes\n  projection:";
    for (int v : result.projection.map()) human << " " << v;
    human << "\n";
    machine = json{{"kind", "mon"},
                   {"monoid", monoid_json(result.monoid)},
                   {"projection", result.projection.map()}};
  }
  emit(opt, machine, human.str());
  return 0;
}

ConedSplitExtension require_coned(const ExtensionBlock& block) {
  if (!block.coned)
    throw Error(ErrorKind::TypeMismatch,
                ("extension " + block.name + " has no cones").c_str());
  return *block.coned;
}

int cmd_schreier_check(const Options& opt, const std::string& file,
                       const std::string& object) {
  Source source = load_source(file);
  std::string name = pick_object(source, object);
  const ExtensionBlock& block = source.doc.extension_of(name);
  SplitExtension ext = block.ext;
  if (!ext.q) ext.q = find_retraction(ext);  // throws NotSchreier -> exit 1
  S1S2Report s1s2 = check_s1_s2(ext);
  ConsequencesReport consequences = check_consequences(ext);
  bool all = s1s2.ok() && consequences.ok();
  std::ostringstream human;
  human << "extension " << name << " is a Schreier split extension\n";
  human << "  retraction q:";
  for (int v : *ext.q) human << " " << v;
  human << "\n  S1: " << (s1s2.s1 ? "ok" : "FAIL") << "  S2: " << (s1s2.s2 ? "ok" : "FAIL")
        << "\n";
  human << "  C1: " << (consequences.c1.holds ? "ok" : "FAIL")
        << "  C2: " << (consequences.c2.holds ? "ok" : "FAIL")
        << "  C3: " << (consequences.c3.holds ? "ok" : "FAIL")
        << "  C4: " << (consequences.c4.holds ? "ok" : "FAIL") << "\n";
  emit(opt,
       json{{"object", name},
            {"schreier", true},
            {"q", *ext.q},
            {"s1s2", s1s2_json(s1s2)},
            {"consequences", consequences_json(consequences)},
            {"all", all}},
       human.str());
  return all ? 0 : 1;
}

int cmd_schreier_extract(const Options& opt, const std::string& file,
                         const std::string& object) {
  Source source = load_source(file);
  std::string name = pick_object(source, object);
  const ExtensionBlock& block = source.doc.extension_of(name);
  PreorderedAction action = g_extract(require_coned(block));

  Document out;
  out.add(MonoidBlock{block.x_ref, action.x});
  out.add(MonoidBlock{block.b_ref, action.b});
  out.add(ActionBlock{name + "_action", block.x_ref, block.b_ref, action});
  std::string text = serialize(out);
  emit(opt,
       json{{"object", name},
            {"x", block.x_ref},
            {"b", block.b_ref},
            {"px", action.px.members()},
            {"pb", action.pb.members()},
            {"phi", action.phi.act},
            {"xi", action.xi},
            {"document", text}},
       text);
  return 0;
}

int cmd_schreier_build(const Options& opt, const std::string& file,
                       const std::string& object) {
  Source source = load_source(file);
  std::string name = pick_object(source, object);
  const ActionBlock& block = source.doc.action_of(name);
  ConedSplitExtension cext = h_build(block.action);

  Document out;
  out.add(MonoidBlock{block.x_ref, cext.ext.x});
  out.add(MonoidBlock{block.b_ref, cext.ext.b});
  out.add(MonoidBlock{name + "_a", cext.ext.a});
  out.add(HomBlock{name + "_k", block.x_ref, name + "_a", cext.ext.k});
  out.add(HomBlock{name + "_p", name + "_a", block.b_ref, cext.ext.p});
  out.add(HomBlock{name + "_s", block.b_ref, name + "_a", cext.ext.s});
  ExtensionBlock ext_block{name + "_ext", block.x_ref, name + "_a", block.b_ref,
                           name + "_k", name + "_p",  name + "_s",  cext.ext,
                           cext};
  out.add(std::move(ext_block));
  std::string text = "# semidirect carrier: pair (x,b) has index x*|B| + b\n" +
                     serialize(out);
  emit(opt,
       json{{"object", name},
            {"carrier", monoid_json(cext.ext.a)},
            {"pa", cext.pa.members()},
            {"document", text}},
       text);
  return 0;
}

int cmd_schreier_roundtrip(const Options& opt, const std::string& file,
                           const std::string& object) {
  Source source = load_source(file);
  std::string name = pick_object(source, object);
  const Block* block = source.doc.find(name);
  if (!block) throw Error(ErrorKind::UnknownReference, ("unknown block: " + name).c_str());
  std::ostringstream human;
  json machine;
  bool ok = false;
  if (const auto* ext_block = std::get_if<ExtensionBlock>(block)) {
    RoundTripHGReport report = roundtrip_hg(require_coned(*ext_block));
    ok = report.ok();
    machine = json{{"object", name}, {"direction", "HG"}, {"report", roundtrip_hg_json(report)}};
    human << "H(G(" << name << ")) compared through beta: " << (ok ? "isomorphic" : "FAIL")
          << "\n";
  } else if (const auto* act_block = std::get_if<ActionBlock>(block)) {
    RoundTripGHReport report = roundtrip_gh(act_block->action);
    ok = report.ok();
    machine = json{{"object", name}, {"direction", "GH"}, {"report", roundtrip_gh_json(report)}};
    human << "G(H(" << name << ")) compared to the canonical form: "
          << (ok ? "equal" : "FAIL") << "\n";
  } else {
    throw Error(ErrorKind::TypeMismatch, "roundtrip needs an extension or action block");
  }
  emit(opt, machine, human.str());
  return ok ? 0 : 1;
}

int cmd_demo_zz(const Options& opt, long long window) {
  ZzDemoReport report = zz_demo(window);
  std::ostringstream human;
  render_zz(human, report);
  emit(opt, zz_json(report), human.str());
  return report.ok() ? 0 : 1;
}

int cmd_enumerate_monoids(const Options& opt, int size, int limit, bool count_only) {
  long long count = 0;
  json items = json::array();
  std::ostringstream human;
  enumerate_monoids(size, [&](const FiniteMonoid& m) {
    ++count;
    if (count_only) return true;
    if (limit >= 0 && count > limit) return true;
    if (opt.machine) {
      items.push_back(monoid_json(m));
    } else {
      human << "monoid " << count - 1 << ":\n";
      for (int i = 0; i < m.size(); ++i) {
        human << " ";
        for (int j = 0; j < m.size(); ++j) human << " " << m.add(i, j);
        human << "\n";
      }
    }
    return true;
  });
  human << "total: " << count << "\n";
  emit(opt, json{{"size", size}, {"count", count}, {"items", items}}, human.str());
  return 0;
}

int cmd_enumerate_preorders(const Options& opt, const std::string& file,
                            const std::string& object, bool count_only) {
  Source source = load_source(file);
  std::string name = pick_object(source, object);
  const FiniteMonoid& m = source.doc.monoid_of(name);
  long long count = 0;
  json items = json::array();
  std::ostringstream human;
  enumerate_compatible_preorders(m, [&](const Preorder& r) {
    ++count;
    if (!count_only) {
      if (opt.machine) {
        items.push_back(preorder_json(r));
      } else {
        human << "  ";
        render_preorder(human, r);
        human << "\n";
      }
    }
    return true;
  });
  human << "total: " << count << "\n";
  emit(opt, json{{"object", name}, {"count", count}, {"items", items}}, human.str());
  return 0;
}

int cmd_enumerate_submonoids(const Options& opt, const std::string& file,
                             const std::string& object, const std::string& filter_name) {
  Source source = load_source(file);
  std::string name = pick_object(source, object);
  const FiniteMonoid& m = source.doc.monoid_of(name);
  SubmonoidFilter filter = SubmonoidFilter::none;
  if (filter_name == "right_normal") filter = SubmonoidFilter::right_normal;
  else if (filter_name == "left_normal") filter = SubmonoidFilter::left_normal;
  else if (filter_name == "normal") filter = SubmonoidFilter::normal;
  else if (filter_name != "none")
    throw Error(ErrorKind::UnknownReference, ("unknown filter: " + filter_name).c_str());
  long long count = 0;
  json items = json::array();
  std::ostringstream human;
  enumerate_submonoids(m, filter, [&](const Submonoid& s) {
    ++count;
    items.push_back(s.members());
    human << "  " << set_to_string(s.members()) << "\n";
    return true;
  });
  human << "total: " << count << "\n";
  emit(opt, json{{"object", name}, {"filter", filter_name}, {"count", count},
                 {"items", items}},
       human.str());
  return 0;
}

int cmd_enumerate_homs(const Options& opt, const std::string& file, const std::string& from,
                       const std::string& to) {
  Source source = load_source(file);
  const FiniteMonoid& dom = source.doc.monoid_of(from);
  const FiniteMonoid& cod = source.doc.monoid_of(to);
  long long count = 0;
  json items = json::array();
  std::ostringstream human;
  enumerate_homs(dom, cod, [&](const MonoidHom& h) {
    ++count;
    items.push_back(h.map());
    human << " ";
    for (int v : h.map()) human << " " << v;
    human << "\n";
    return true;
  });
  human << "total: " << count << "\n";
  emit(opt, json{{"from", from}, {"to", to}, {"count", count}, {"items", items}},
       human.str());
  return 0;
}

int cmd_enumerate_actions(const Options& opt, const std::string& file, const std::string& x,
                          const std::string& b, const std::string& px_flag,
                          const std::string& pb_flag, bool count_only) {
  Source source = load_source(file);
  const FiniteMonoid& xm = source.doc.monoid_of(x);
  const FiniteMonoid& bm = source.doc.monoid_of(b);
  Submonoid px = px_flag.empty() ? Submonoid(xm, {xm.identity()})
                                 : Submonoid(xm, parse_list(px_flag));
  Submonoid pb = pb_flag.empty() ? Submonoid(bm, {bm.identity()})
                                 : Submonoid(bm, parse_list(pb_flag));
  long long count = 0;
  json items = json::array();
  std::ostringstream human;
  enumerate_actions(xm, bm, px, pb, [&](const PreorderedAction& act) {
    ++count;
    if (!count_only) {
      items.push_back(json{{"phi", act.phi.act}, {"xi", act.xi}});
      human << "  action " << count - 1 << ": phi rows";
      for (const auto& row : act.phi.act) {
        human << " [";
        for (size_t i = 0; i < row.size(); ++i) human << (i ? " " : "") << row[i];
        human << "]";
      }
      human << ", fixed pairs";
      for (auto [u, v] : fixed_point_set(act).pairs)
        human << " (" << u << "," << v << ")";
      human << "\n";
    }
    return true;
  });
  human << "total: " << count << "\n";
  emit(opt, json{{"x", x}, {"b", b}, {"px", px.members()}, {"pb", pb.members()},
                 {"count", count}, {"items", items}},
       human.str());
  return 0;
}

int cmd_examples_list(const Options& opt) {
  json items = json::array();
  std::ostringstream human;
  for (const Block& block : builtin_examples().blocks()) {
    items.push_back(json{{"name", block_name(block)}, {"kind", block_kind(block)}});
    human << block_kind(block) << " " << block_name(block) << "\n";
  }
  items.push_back(json{{"name", "ex4_4"}, {"kind", "demo"}});
  human << "demo ex4_4 (infinite integer example; run: pomtool demo zz --window N)\n";
  emit(opt, json{{"examples", items}}, human.str());
  return 0;
}

int cmd_examples_show(const Options& opt, const std::string& name) {
  if (name == "ex4_4") {
    std::string text =
        "ex4_4 is the integer example: the action (Z, Z, {0}, N, trivial phi,\n"
        "xi(u,v) = u when 0 <= u <= v, else 0). It lives on infinite carriers,\n"
        "so it is exercised by the windowed demo: pomtool demo zz --window N\n";
    emit(opt, json{{"name", name}, {"kind", "demo"}, {"note", text}}, text);
    return 0;
  }
  const Document& doc = builtin_examples();
  const Block* block = doc.find(name);
  if (!block)
    throw Error(ErrorKind::UnknownReference, ("unknown example: " + name).c_str());
  Document out;
  if (const auto* pom = std::get_if<PomBlock>(block)) {
    out.add(MonoidBlock{pom->monoid_ref, doc.monoid_of(pom->monoid_ref)});
    out.add(*pom);
  } else {
    out.add(*block);
  }
  std::string text = serialize(out);
  emit(opt, json{{"name", name}, {"document", text}}, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification and construction toolkit for finite preordered monoids"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--machine", opt.machine, "machine-readable JSON output");
  app.add_flag("--seedless", opt.seedless, "force deterministic output (always on)");

  std::string file, object, submonoid, side = "right", filter = "none";
  std::string f_name, g_name, from, to, x_name, b_name, px_flag, pb_flag, show_name;
  int depth = 0, size = 1, limit = -1;
  long long window = 10;
  bool count_only = false;

  auto* validate_cmd = app.add_subcommand("validate", "validate every block in a file");
  validate_cmd->add_option("file", file)->required();

  auto* classify_cmd = app.add_subcommand("classify", "full classification report");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->add_option("--object", object);

  auto* cone_cmd = app.add_subcommand("cone", "positive cone of a preordered monoid");
  cone_cmd->add_option("file", file)->required();
  cone_cmd->add_option("--object", object);

  auto* cosets_cmd = app.add_subcommand("cosets", "left and right coset table");
  cosets_cmd->add_option("file", file)->required();
  cosets_cmd->add_option("--object", object);
  cosets_cmd->add_option("--submonoid", submonoid, "comma-separated elements");

  auto* induced_cmd = app.add_subcommand("induced", "order induced by a submonoid");
  induced_cmd->add_option("file", file)->required();
  induced_cmd->add_option("--object", object);
  induced_cmd->add_option("--side", side)->check(CLI::IsMember({"right", "left"}));
  induced_cmd->add_option("--submonoid", submonoid);

  auto* normality_cmd = app.add_subcommand("normality", "right/left normality report");
  normality_cmd->add_option("file", file)->required();
  normality_cmd->add_option("--object", object);
  normality_cmd->add_option("--submonoid", submonoid)->required();

  auto* coreflect_cmd =
      app.add_subcommand("coreflect", "replace the order by its cone-induced order");
  coreflect_cmd->add_option("file", file)->required();
  coreflect_cmd->add_option("--object", object);

  auto* free_cmd = app.add_subcommand("free", "free-monoid fragment over a poset");
  free_cmd->add_option("file", file)->required();
  free_cmd->add_option("--object", object);
  free_cmd->add_option("--depth", depth)->required();

  auto* coeq_cmd = app.add_subcommand("coeq", "coequalizer of two parallel homs");
  coeq_cmd->add_option("file", file)->required();
  coeq_cmd->add_option("--f", f_name)->required();
  coeq_cmd->add_option("--g", g_name)->required();

  auto* schreier_cmd = app.add_subcommand("schreier", "Schreier split extension tools");
  schreier_cmd->require_subcommand(1);
  auto* sch_check = schreier_cmd->add_subcommand("check", "retraction, S1/S2, C1-C4");
  sch_check->add_option("file", file)->required();
  sch_check->add_option("--object", object);
  auto* sch_extract = schreier_cmd->add_subcommand("extract", "extension to action");
  sch_extract->add_option("file", file)->required();
  sch_extract->add_option("--object", object);
  auto* sch_build = schreier_cmd->add_subcommand("build", "action to extension");
  sch_build->add_option("file", file)->required();
  sch_build->add_option("--object", object);
  auto* sch_roundtrip = schreier_cmd->add_subcommand("roundtrip", "equivalence round trips");
  sch_roundtrip->add_option("file", file)->required();
  sch_roundtrip->add_option("--object", object);

  auto* demo_cmd = app.add_subcommand("demo", "worked demos");
  demo_cmd->require_subcommand(1);
  auto* zz_cmd = demo_cmd->add_subcommand("zz", "windowed integer example");
  zz_cmd->add_option("--window", window)->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "exhaustive enumeration");
  enum_cmd->require_subcommand(1);
  auto* enum_monoids = enum_cmd->add_subcommand("monoids", "all Cayley tables");
  enum_monoids->add_option("--size", size)->required();
  enum_monoids->add_option("--limit", limit, "print at most this many");
  enum_monoids->add_flag("--count", count_only, "print the count only");
  auto* enum_preorders = enum_cmd->add_subcommand("preorders", "compatible preorders");
  enum_preorders->add_option("file", file)->required();
  enum_preorders->add_option("--object", object);
  enum_preorders->add_flag("--count", count_only);
  auto* enum_submonoids = enum_cmd->add_subcommand("submonoids", "submonoids");
  enum_submonoids->add_option("file", file)->required();
  enum_submonoids->add_option("--object", object);
  enum_submonoids->add_option("--filter", filter,
                              "none | right_normal | left_normal | normal");
  auto* enum_homs = enum_cmd->add_subcommand("homs", "monoid homomorphisms");
  enum_homs->add_option("file", file)->required();
  enum_homs->add_option("--from", from)->required();
  enum_homs->add_option("--to", to)->required();
  auto* enum_actions = enum_cmd->add_subcommand("actions", "preordered actions");
  enum_actions->add_option("file", file)->required();
  enum_actions->add_option("--x", x_name)->required();
  enum_actions->add_option("--b", b_name)->required();
  enum_actions->add_option("--px", px_flag, "cone of X (defaults to the identity)");
  enum_actions->add_option("--pb", pb_flag, "cone of B (defaults to the identity)");
  enum_actions->add_flag("--count", count_only);

  auto* examples_cmd = app.add_subcommand("examples", "bundled example registry");
  examples_cmd->require_subcommand(1);
  examples_cmd->add_subcommand("list", "list example names");
  auto* examples_show = examples_cmd->add_subcommand("show", "print one example");
  examples_show->add_option("name", show_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(opt, file);
    if (classify_cmd->parsed()) return cmd_classify(opt, file, object);
    if (cone_cmd->parsed()) return cmd_cone(opt, file, object);
    if (cosets_cmd->parsed()) return cmd_cosets(opt, file, object, submonoid);
    if (induced_cmd->parsed()) return cmd_induced(opt, file, object, side, submonoid);
    if (normality_cmd->parsed()) return cmd_normality(opt, file, object, submonoid);
    if (coreflect_cmd->parsed()) return cmd_coreflect(opt, file, object);
    if (free_cmd->parsed()) return cmd_free(opt, file, object, depth);
    if (coeq_cmd->parsed()) return cmd_coeq(opt, file, f_name, g_name);
    if (schreier_cmd->parsed()) {
      if (sch_check->parsed()) return cmd_schreier_check(opt, file, object);
      if (sch_extract->parsed()) return cmd_schreier_extract(opt, file, object);
      if (sch_build->parsed()) return cmd_schreier_build(opt, file, object);
      if (sch_roundtrip->parsed()) return cmd_schreier_roundtrip(opt, file, object);
    }
    if (demo_cmd->parsed() && zz_cmd->parsed()) return cmd_demo_zz(opt, window);
    if (enum_cmd->parsed()) {
      if (enum_monoids->parsed()) return cmd_enumerate_monoids(opt, size, limit, count_only);
      if (enum_preorders->parsed())
        return cmd_enumerate_preorders(opt, file, object, count_only);
      if (enum_submonoids->parsed())
        return cmd_enumerate_submonoids(opt, file, object, filter);
      if (enum_homs->parsed()) return cmd_enumerate_homs(opt, file, from, to);
      if (enum_actions->parsed())
        return cmd_enumerate_actions(opt, file, x_name, b_name, px_flag, pb_flag,
                                     count_only);
    }
    if (examples_cmd->parsed()) {
      if (examples_show->parsed()) return cmd_examples_show(opt, show_name);
      return cmd_examples_list(opt);
    }
  } catch (const Error& e) {
    report_error(opt, e);
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
