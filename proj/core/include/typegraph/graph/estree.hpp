#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "typegraph/graph/vocabulary.hpp"

namespace typegraph::graph {

using Json = nlohmann::ordered_json;

/// Children of one AST field, in document order.
struct AstField {
  std::string name;
  bool is_list = false;
  std::vector<int> children;
};

struct AstNode {
  int id = 0;
  std::string type;
  int type_index = 0;
  std::size_t start = 0;
  std::size_t end = 0;
  int parent = -1;
  /// Field of the parent holding this node ("" for the root).
  std::string field;
  /// Position inside a list-valued field, or -1.
  int list_index = -1;
  std::vector<AstField> fields;
  /// The raw ESTree object; owned by the enclosing AstDocument.
  const Json* raw = nullptr;

  bool is_leaf() const noexcept;
  /// Child ids over all fields, in document order.
  std::vector<int> children() const;
};

/// A parsed ESTree tree with nodes numbered in pre-order.
///
/// A Babel `File` wrapper is unwrapped to its `program`. Keys holding location
/// data, comments and `extra` are not traversed; every other value that is an
/// object with a string `type` (or an array of such) is a child.
class AstDocument {
 public:
  const std::vector<AstNode>& nodes() const noexcept { return nodes_; }
  const AstNode& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  std::size_t size() const noexcept { return nodes_.size(); }
  const AstNode& root() const { return nodes_.front(); }

 private:
  friend AstDocument parse_estree_json(Json document, const Vocabularies& vocab);
  std::shared_ptr<const Json> json_;
  std::vector<AstNode> nodes_;
};

/// Throws ParseError (with byte offset) on malformed JSON or a node without a
/// span, VocabularyError on a node type missing from the vocabulary.
AstDocument parse_estree(std::string_view document, const Vocabularies& vocab);
AstDocument parse_estree_json(Json document, const Vocabularies& vocab);

}  // namespace typegraph::graph
