#include "pomkit/document.hpp"

#include <map>
#include <sstream>

namespace pomkit {

bool ExtensionBlock::operator==(const ExtensionBlock& other) const {
  bool base = name == other.name && x_ref == other.x_ref && a_ref == other.a_ref &&
              b_ref == other.b_ref && k_ref == other.k_ref && p_ref == other.p_ref &&
              s_ref == other.s_ref && coned.has_value() == other.coned.has_value();
  if (!base) return false;
  if (!coned) return true;
  return coned->px == other.coned->px && coned->pa == other.coned->pa &&
         coned->pb == other.coned->pb;
}

bool ActionBlock::operator==(const ActionBlock& other) const {
  return name == other.name && x_ref == other.x_ref && b_ref == other.b_ref &&
         action.px == other.action.px && action.pb == other.action.pb &&
         action.phi == other.action.phi && action.xi == other.action.xi;
}

const std::string& block_name(const Block& block) {
  return std::visit([](const auto& b) -> const std::string& { return b.name; }, block);
}

const char* block_kind(const Block& block) {
  struct Visitor {
    const char* operator()(const MonoidBlock&) const { return "monoid"; }
    const char* operator()(const PomBlock&) const { return "pom"; }
    const char* operator()(const PosetBlock&) const { return "poset"; }
    const char* operator()(const HomBlock&) const { return "hom"; }
    const char* operator()(const ExtensionBlock&) const { return "extension"; }
    const char* operator()(const ActionBlock&) const { return "action"; }
  };
  return std::visit(Visitor{}, block);
}

const Block* Document::find(const std::string& name) const {
  for (const auto& block : blocks_)
    if (block_name(block) == name) return &block;
  return nullptr;
}

void Document::add(Block block) {
  if (find(block_name(block)))
    throw Error(ErrorKind::ValidationError,
                ("duplicate block name: " + block_name(block)).c_str());
  blocks_.push_back(std::move(block));
}

namespace {

[[noreturn]] void unknown(const std::string& name) {
  throw Error(ErrorKind::UnknownReference, ("unknown block: " + name).c_str());
}

}  // namespace

const FiniteMonoid& Document::monoid_of(const std::string& name) const {
  const Block* block = find(name);
  if (!block) unknown(name);
  if (const auto* m = std::get_if<MonoidBlock>(block)) return m->monoid;
  if (const auto* p = std::get_if<PomBlock>(block)) return p->pom.monoid();
  throw Error(ErrorKind::TypeMismatch, (name + " is not a monoid or pom block").c_str());
}

const PomBlock& Document::pom_of(const std::string& name) const {
  const Block* block = find(name);
  if (!block) unknown(name);
  if (const auto* p = std::get_if<PomBlock>(block)) return *p;
  throw Error(ErrorKind::TypeMismatch, (name + " is not a pom block").c_str());
}

const PosetBlock& Document::poset_of(const std::string& name) const {
  const Block* block = find(name);
  if (!block) unknown(name);
  if (const auto* p = std::get_if<PosetBlock>(block)) return *p;
  throw Error(ErrorKind::TypeMismatch, (name + " is not a poset block").c_str());
}

const HomBlock& Document::hom_of(const std::string& name) const {
  const Block* block = find(name);
  if (!block) unknown(name);
  if (const auto* h = std::get_if<HomBlock>(block)) return *h;
  throw Error(ErrorKind::TypeMismatch, (name + " is not a hom block").c_str());
}

const ExtensionBlock& Document::extension_of(const std::string& name) const {
  const Block* block = find(name);
  if (!block) unknown(name);
  if (const auto* e = std::get_if<ExtensionBlock>(block)) return *e;
  throw Error(ErrorKind::TypeMismatch, (name + " is not an extension block").c_str());
}

const ActionBlock& Document::action_of(const std::string& name) const {
  const Block* block = find(name);
  if (!block) unknown(name);
  if (const auto* a = std::get_if<ActionBlock>(block)) return *a;
  throw Error(ErrorKind::TypeMismatch, (name + " is not an action block").c_str());
}

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string token;
    while (ls >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void syntax(int line, const std::string& what) {
  std::ostringstream msg;
  msg << "line " << line << ": " << what;
  throw Error(ErrorKind::SyntaxError, msg.str(), {line});
}

int to_int(const Line& line, const std::string& token) {
  try {
    size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size()) syntax(line.number, "not an integer: " + token);
    return value;
  } catch (const Error&) {
    throw;
  } catch (...) {
    syntax(line.number, "not an integer: " + token);
  }
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lines_(tokenize(text)) {}

  Document run() {
    Document doc;
    while (pos_ < lines_.size()) {
      const Line& head = lines_[pos_];
      const std::string& kind = head.tokens[0];
      if (head.tokens.size() != 2) syntax(head.number, "expected '<kind> <name>'");
      const std::string& name = head.tokens[1];
      ++pos_;
      try {
        if (kind == "monoid")
          doc.add(parse_monoid(name));
        else if (kind == "pom")
          doc.add(parse_pom(name, doc));
        else if (kind == "poset")
          doc.add(parse_poset(name));
        else if (kind == "hom")
          doc.add(parse_hom(name, doc));
        else if (kind == "extension")
          doc.add(parse_extension(name, doc));
        else if (kind == "action")
          doc.add(parse_action(name, doc));
        else
          syntax(head.number, "unknown block kind: " + kind);
      } catch (const Error& err) {
        if (err.kind() == ErrorKind::SyntaxError ||
            err.kind() == ErrorKind::UnknownReference)
          throw;
        throw Error(ErrorKind::ValidationError,
                    ("block " + name + ": " + err.what()).c_str(), err.args());
      }
      expect_end(name);
    }
    return doc;
  }

 private:
  const Line& peek() {
    if (pos_ >= lines_.size()) syntax(last_line(), "unexpected end of file");
    return lines_[pos_];
  }
  const Line& next() {
    const Line& line = peek();
    ++pos_;
    return line;
  }
  int last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

  bool at_keyword(const char* word) {
    return pos_ < lines_.size() && lines_[pos_].tokens[0] == word;
  }

  void expect_end(const std::string& name) {
    const Line& line = next();
    if (line.tokens.size() != 1 || line.tokens[0] != "end")
      syntax(line.number, "expected 'end' of block " + name);
  }

  std::vector<int> int_row(const Line& line, size_t from = 0) {
    std::vector<int> out;
    for (size_t i = from; i < line.tokens.size(); ++i)
      out.push_back(to_int(line, line.tokens[i]));
    return out;
  }

  std::vector<std::vector<int>> rows(int count, int width) {
    std::vector<std::vector<int>> out;
    for (int i = 0; i < count; ++i) {
      const Line& line = next();
      auto row = int_row(line);
      if (static_cast<int>(row.size()) != width)
        syntax(line.number, "expected a row of " + std::to_string(width) + " entries");
      out.push_back(std::move(row));
    }
    return out;
  }

  MonoidBlock parse_monoid(const std::string& name) {
    const Line& size_line = next();
    if (size_line.tokens.size() != 2 || size_line.tokens[0] != "size")
      syntax(size_line.number, "expected 'size n'");
    int n = to_int(size_line, size_line.tokens[1]);
    if (n < 1) syntax(size_line.number, "size must be positive");
    const Line& id_line = next();
    if (id_line.tokens.size() != 2 || id_line.tokens[0] != "identity")
      syntax(id_line.number, "expected 'identity e'");
    int identity = to_int(id_line, id_line.tokens[1]);
    const Line& table_line = next();
    if (table_line.tokens.size() != 1 || table_line.tokens[0] != "table")
      syntax(table_line.number, "expected 'table'");
    return {name, validate_monoid(rows(n, n), identity)};
  }

  PomBlock parse_pom(const std::string& name, const Document& doc) {
    const Line& use_line = next();
    if (use_line.tokens.size() != 2 || use_line.tokens[0] != "use")
      syntax(use_line.number, "expected 'use <monoid>'");
    const std::string& ref = use_line.tokens[1];
    const FiniteMonoid& m = doc.monoid_of(ref);
    const Line& head = next();
    if (head.tokens.size() != 2 || head.tokens[0] != "preorder")
      syntax(head.number, "expected 'preorder edges' or 'preorder matrix'");
    if (head.tokens[1] == "edges") {
      std::vector<std::pair<int, int>> edges;
      while (!at_keyword("end")) {
        const Line& line = next();
        if (line.tokens.size() != 2) syntax(line.number, "expected 'a b'");
        edges.emplace_back(to_int(line, line.tokens[0]), to_int(line, line.tokens[1]));
      }
      return {name, ref,
              PreorderedMonoid(m, Preorder::closure_from_edges(m.size(), edges))};
    }
    if (head.tokens[1] == "matrix")
      return {name, ref, PreorderedMonoid(m, Preorder::from_matrix(rows(m.size(), m.size())))};
    syntax(head.number, "expected 'edges' or 'matrix'");
  }

  PosetBlock parse_poset(const std::string& name) {
    const Line& size_line = next();
    if (size_line.tokens.size() != 2 || size_line.tokens[0] != "size")
      syntax(size_line.number, "expected 'size n'");
    int n = to_int(size_line, size_line.tokens[1]);
    const Line& edges_line = next();
    if (edges_line.tokens.size() != 1 || edges_line.tokens[0] != "edges")
      syntax(edges_line.number, "expected 'edges'");
    std::vector<std::pair<int, int>> edges;
    while (!at_keyword("end")) {
      const Line& line = next();
      if (line.tokens.size() != 2) syntax(line.number, "expected 'a b'");
      edges.emplace_back(to_int(line, line.tokens[0]), to_int(line, line.tokens[1]));
    }
    return {name, PreorderedSet{n, Preorder::closure_from_edges(n, edges)}};
  }

  HomBlock parse_hom(const std::string& name, const Document& doc) {
    const Line& line = next();
    if (line.tokens.size() != 4 || line.tokens[0] != "from" || line.tokens[2] != "to")
      syntax(line.number, "expected 'from <name> to <name>'");
    const FiniteMonoid& dom = doc.monoid_of(line.tokens[1]);
    const FiniteMonoid& cod = doc.monoid_of(line.tokens[3]);
    const Line& map_line = next();
    if (map_line.tokens.size() != 1 || map_line.tokens[0] != "map")
      syntax(map_line.number, "expected 'map'");
    const Line& row_line = next();
    auto row = int_row(row_line);
    if (static_cast<int>(row.size()) != dom.size())
      syntax(row_line.number, "map row must have dom-size entries");
    return {name, line.tokens[1], line.tokens[3], MonoidHom(dom, cod, std::move(row))};
  }

  MonoidHom typed_hom(const Document& doc, const std::string& ref, const FiniteMonoid& dom,
                      const FiniteMonoid& cod, int line, const char* role) {
    const HomBlock& block = doc.hom_of(ref);
    if (block.hom.dom() != dom || block.hom.cod() != cod)
      syntax(line, std::string(role) + " hom has wrong endpoints: " + ref);
    return block.hom;
  }

  ExtensionBlock parse_extension(const std::string& name, const Document& doc) {
    const Line& carriers = next();
    if (carriers.tokens.size() != 6 || carriers.tokens[0] != "x" ||
        carriers.tokens[2] != "a" || carriers.tokens[4] != "b")
      syntax(carriers.number, "expected 'x <m> a <m> b <m>'");
    const FiniteMonoid& x = doc.monoid_of(carriers.tokens[1]);
    const FiniteMonoid& a = doc.monoid_of(carriers.tokens[3]);
    const FiniteMonoid& b = doc.monoid_of(carriers.tokens[5]);
    const Line& homs = next();
    if (homs.tokens.size() != 6 || homs.tokens[0] != "k" || homs.tokens[2] != "p" ||
        homs.tokens[4] != "s")
      syntax(homs.number, "expected 'k <hom> p <hom> s <hom>'");
    SplitExtension ext{x,
                       a,
                       b,
                       typed_hom(doc, homs.tokens[1], x, a, homs.number, "k"),
                       typed_hom(doc, homs.tokens[3], a, b, homs.number, "p"),
                       typed_hom(doc, homs.tokens[5], b, a, homs.number, "s"),
                       std::nullopt};
    ext = validate_split_extension(std::move(ext));
    ExtensionBlock block{name,
                         carriers.tokens[1],
                         carriers.tokens[3],
                         carriers.tokens[5],
                         homs.tokens[1],
                         homs.tokens[3],
                         homs.tokens[5],
                         std::move(ext),
                         std::nullopt};
    if (at_keyword("cones")) {
      next();
      std::vector<int> px, pa, pb;
      for (const char* label : {"px", "pa", "pb"}) {
        const Line& line = next();
        if (line.tokens.empty() || line.tokens[0] != label)
          syntax(line.number, std::string("expected '") + label + " <elements>'");
        auto members = int_row(line, 1);
        if (std::string(label) == "px")
          px = std::move(members);
        else if (std::string(label) == "pa")
          pa = std::move(members);
        else
          pb = std::move(members);
      }
      ConedSplitExtension coned{block.ext, Submonoid(x, px), Submonoid(a, pa),
                                Submonoid(b, pb)};
      block.coned = validate_coned_extension(std::move(coned));
      block.ext = block.coned->ext;  // pick up the computed retraction
    }
    return block;
  }

  ActionBlock parse_action(const std::string& name, const Document& doc) {
    const Line& carriers = next();
    if (carriers.tokens.size() != 4 || carriers.tokens[0] != "x" || carriers.tokens[2] != "b")
      syntax(carriers.number, "expected 'x <m> b <m>'");
    const FiniteMonoid& x = doc.monoid_of(carriers.tokens[1]);
    const FiniteMonoid& b = doc.monoid_of(carriers.tokens[3]);
    const Line& px_line = next();
    if (px_line.tokens.empty() || px_line.tokens[0] != "px")
      syntax(px_line.number, "expected 'px <elements>'");
    Submonoid px(x, int_row(px_line, 1));
    const Line& pb_line = next();
    if (pb_line.tokens.empty() || pb_line.tokens[0] != "pb")
      syntax(pb_line.number, "expected 'pb <elements>'");
    Submonoid pb(b, int_row(pb_line, 1));
    const Line& phi_line = next();
    if (phi_line.tokens.size() != 1 || phi_line.tokens[0] != "phi")
      syntax(phi_line.number, "expected 'phi'");
    auto phi_rows = rows(b.size(), x.size());
    const Line& xi_line = next();
    if (xi_line.tokens.size() != 1 || xi_line.tokens[0] != "xi")
      syntax(xi_line.number, "expected 'xi'");
    auto xi_rows = rows(x.size(), pb.count());
    PreorderedAction action{x, b, std::move(px), std::move(pb),
                            ActionTable{x, b, std::move(phi_rows)}, std::move(xi_rows)};
    auto axioms = validate_action(action);
    if (!axioms.ok()) {
      const char* axiom = !axioms.a1.holds   ? "A1"
                          : !axioms.a2.holds ? "A2"
                          : !axioms.a3.holds ? "A3"
                                             : "A4";
      throw Error(ErrorKind::ValidationError,
                  ("action violates axiom " + std::string(axiom)).c_str());
    }
    return {name, carriers.tokens[1], carriers.tokens[3], std::move(action)};
  }

  std::vector<Line> lines_;
  size_t pos_ = 0;
};

}  // namespace

Document parse(const std::string& text) { return Parser(text).run(); }

namespace {

void serialize_members(std::ostream& out, const char* label, const std::vector<int>& members) {
  out << label;
  for (int v : members) out << ' ' << v;
  out << '\n';
}

struct Serializer {
  std::ostream& out;

  void operator()(const MonoidBlock& block) const {
    const FiniteMonoid& m = block.monoid;
    out << "monoid " << block.name << "\n";
    out << "size " << m.size() << "\n";
    out << "identity " << m.identity() << "\n";
    out << "table\n";
    for (int i = 0; i < m.size(); ++i) {
      for (int j = 0; j < m.size(); ++j) out << (j ? " " : "") << m.add(i, j);
      out << "\n";
    }
    out << "end\n";
  }

  void operator()(const PomBlock& block) const {
    out << "pom " << block.name << "\n";
    out << "use " << block.monoid_ref << "\n";
    out << "preorder edges\n";
    for (auto [a, b] : block.pom.order().nonreflexive_pairs())
      out << a << " " << b << "\n";
    out << "end\n";
  }

  void operator()(const PosetBlock& block) const {
    out << "poset " << block.name << "\n";
    out << "size " << block.poset.size << "\n";
    out << "edges\n";
    for (auto [a, b] : block.poset.order.nonreflexive_pairs()) out << a << " " << b << "\n";
    out << "end\n";
  }

  void operator()(const HomBlock& block) const {
    out << "hom " << block.name << "\n";
    out << "from " << block.from_ref << " to " << block.to_ref << "\n";
    out << "map\n";
    for (int a = 0; a < block.hom.dom().size(); ++a) out << (a ? " " : "") << block.hom(a);
    out << "\nend\n";
  }

  void operator()(const ExtensionBlock& block) const {
    out << "extension " << block.name << "\n";
    out << "x " << block.x_ref << " a " << block.a_ref << " b " << block.b_ref << "\n";
    out << "k " << block.k_ref << " p " << block.p_ref << " s " << block.s_ref << "\n";
    if (block.coned) {
      out << "cones\n";
      serialize_members(out, "px", block.coned->px.members());
      serialize_members(out, "pa", block.coned->pa.members());
      serialize_members(out, "pb", block.coned->pb.members());
    }
    out << "end\n";
  }

  void operator()(const ActionBlock& block) const {
    const PreorderedAction& act = block.action;
    out << "action " << block.name << "\n";
    out << "x " << block.x_ref << " b " << block.b_ref << "\n";
    serialize_members(out, "px", act.px.members());
    serialize_members(out, "pb", act.pb.members());
    out << "phi\n";
    for (int bv = 0; bv < act.b.size(); ++bv) {
      for (int xv = 0; xv < act.x.size(); ++xv) out << (xv ? " " : "") << act.phi.of(bv, xv);
      out << "\n";
    }
    out << "xi\n";
    for (int xv = 0; xv < act.x.size(); ++xv) {
      for (int col = 0; col < act.pb.count(); ++col)
        out << (col ? " " : "") << act.xi_of(xv, col);
      out << "\n";
    }
    out << "end\n";
  }
};

}  // namespace

std::string serialize(const Document& doc) {
  std::ostringstream out;
  bool first = true;
  for (const auto& block : doc.blocks()) {
    if (!first) out << "\n";
    first = false;
    std::visit(Serializer{out}, block);
  }
  return out.str();
}

const Document& builtin_examples() {
  static const Document doc = [] {
    Document d;
    d.add(MonoidBlock{"m_ex2_2", validate_monoid({{0, 1, 2, 3, 4},
                                                  {1, 1, 4, 4, 4},
                                                  {2, 2, 4, 4, 4},
                                                  {3, 3, 4, 4, 4},
                                                  {4, 4, 4, 4, 4}},
                                                 0)});
    d.add(MonoidBlock{"m_ex2_3", validate_monoid({{0, 1, 2, 3, 4},
                                                  {1, 1, 2, 2, 4},
                                                  {2, 1, 2, 1, 4},
                                                  {3, 1, 2, 1, 4},
                                                  {4, 4, 4, 4, 4}},
                                                 0)});
    d.add(MonoidBlock{"m_comm3", validate_monoid({{0, 1, 2}, {1, 1, 1}, {2, 1, 1}}, 0)});

    const FiniteMonoid& m22 = d.monoid_of("m_ex2_2");
    const FiniteMonoid& m23 = d.monoid_of("m_ex2_3");
    const FiniteMonoid& mc3 = d.monoid_of("m_comm3");

    // positively preordered: every element above zero, plus the square diagram
    d.add(PomBlock{"ex2_2", "m_ex2_2",
                   PreorderedMonoid(m22, Preorder::closure_from_edges(
                                             5, {{0, 1},
                                                 {0, 2},
                                                 {0, 3},
                                                 {0, 4},
                                                 {1, 2},
                                                 {1, 3},
                                                 {1, 4},
                                                 {2, 3},
                                                 {2, 4},
                                                 {3, 4}}))});
    d.add(PomBlock{"ex2_3", "m_ex2_3",
                   PreorderedMonoid(m23, Preorder::closure_from_edges(
                                             5, {{0, 1},
                                                 {0, 2},
                                                 {0, 3},
                                                 {0, 4},
                                                 {1, 2},
                                                 {1, 4},
                                                 {2, 4},
                                                 {3, 1},
                                                 {3, 2},
                                                 {3, 4}}))});
    d.add(PomBlock{"ex2_4", "m_ex2_2",
                   PreorderedMonoid(m22, Preorder::closure_from_edges(
                                             5, {{0, 1}, {2, 4}, {3, 4}}))});
    d.add(PomBlock{"ex_comm3", "m_comm3",
                   PreorderedMonoid(mc3, Preorder::closure_from_edges(
                                             3, {{0, 1}, {0, 2}, {1, 2}, {2, 1}}))});
    return d;
  }();
  return doc;
}

std::vector<std::string> builtin_example_names() {
  return {"ex2_2", "ex2_3", "ex2_4", "ex_comm3", "ex4_4"};
}

}  // namespace pomkit
