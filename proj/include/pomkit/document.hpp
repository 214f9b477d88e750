#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pomkit/actions.hpp"
#include "pomkit/constructions.hpp"
#include "pomkit/pom.hpp"

namespace pomkit {

struct MonoidBlock {
  std::string name;
  FiniteMonoid monoid;
  bool operator==(const MonoidBlock&) const = default;
};

struct PomBlock {
  std::string name;
  std::string monoid_ref;
  PreorderedMonoid pom;
  bool operator==(const PomBlock&) const = default;
};

struct PosetBlock {
  std::string name;
  PreorderedSet poset;
  bool operator==(const PosetBlock& other) const {
    return name == other.name && poset.size == other.poset.size &&
           poset.order == other.poset.order;
  }
};

struct HomBlock {
  std::string name;
  std::string from_ref;
  std::string to_ref;
  MonoidHom hom;
  bool operator==(const HomBlock&) const = default;
};

struct ExtensionBlock {
  std::string name;
  std::string x_ref, a_ref, b_ref;
  std::string k_ref, p_ref, s_ref;
  SplitExtension ext;                        // validated; q present iff coned
  std::optional<ConedSplitExtension> coned;  // present when the file gives cones
  bool operator==(const ExtensionBlock& other) const;
};

struct ActionBlock {
  std::string name;
  std::string x_ref, b_ref;
  PreorderedAction action;
  bool operator==(const ActionBlock& other) const;
};

using Block =
    std::variant<MonoidBlock, PomBlock, PosetBlock, HomBlock, ExtensionBlock, ActionBlock>;

const std::string& block_name(const Block& block);
const char* block_kind(const Block& block);

/// An ordered collection of named blocks. References resolve to blocks that
/// appear earlier; every block is validated by its module on insertion.
class Document {
 public:
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block* find(const std::string& name) const;
  void add(Block block);

  /// The underlying monoid of a monoid or pom block.
  const FiniteMonoid& monoid_of(const std::string& name) const;
  const PomBlock& pom_of(const std::string& name) const;
  const PosetBlock& poset_of(const std::string& name) const;
  const HomBlock& hom_of(const std::string& name) const;
  const ExtensionBlock& extension_of(const std::string& name) const;
  const ActionBlock& action_of(const std::string& name) const;

  bool operator==(const Document&) const = default;

 private:
  std::vector<Block> blocks_;
};

Document parse(const std::string& text);
std::string serialize(const Document& doc);

/// Worked examples shipped with the tool, transcribed from their sources:
/// monoid blocks m_ex2_2 (shared by ex2_2 and ex2_4), m_ex2_3, m_comm3 and
/// pom blocks ex2_2, ex2_3, ex2_4, ex_comm3.
const Document& builtin_examples();

/// Names listed by `examples list`; includes the zz demo marker.
std::vector<std::string> builtin_example_names();

}  // namespace pomkit
