#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "typegraph/graph/estree.hpp"
#include "typegraph/graph/label.hpp"
#include "typegraph/graph/scope.hpp"
#include "typegraph/graph/vocabulary.hpp"

namespace typegraph::graph {

inline constexpr std::size_t kMaxValueChars = 16;
inline constexpr std::size_t kMinGraphNodes = 3;
inline constexpr std::size_t kMaxGraphNodes = 20000;

struct GraphNode {
  int id = 0;
  std::vector<int> type_indices;
  std::optional<int> property_index;
  /// UTF-8; at most 16 UTF-16 code units of the leaf's name, value or pattern.
  std::string value_chars;
  Label label;
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const GraphNode&) const = default;
};

struct TypedEdge {
  int src = 0;
  int edge_type = 0;
  int dst = 0;
  EdgeCategory category = EdgeCategory::ast;

  bool operator==(const TypedEdge&) const = default;
};

struct ProgramGraph {
  std::vector<GraphNode> nodes;
  std::vector<TypedEdge> edges;
  std::string source_path;
  std::string repository;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// "start:end" -> class name, as written by the label recorder.
using RuntimeLabels = std::map<std::string, std::string>;

/// Property string of a node ("{operator:=}", "{kind:var}", ...), or nullopt.
/// Throws VocabularyError when an operator has no entry in propTypes.
std::optional<int> node_property(const AstNode& node, const Vocabularies& vocab);

/// Rendered name/value/pattern of a leaf (untruncated); "" for inner nodes.
std::string node_value(const AstNode& node);

/// One node per AST node in pre-order. Labels are left unknown.
std::vector<GraphNode> build_nodes(const AstDocument& doc, const Vocabularies& vocab);

std::vector<TypedEdge> build_edges(const AstDocument& doc, const ScopeInfo& scope, const Vocabularies& vocab);

/// Applies runtime labels (to the innermost node with the exact span) and the
/// explicit-correspondence table. Throws LabelError on an unknown class name
/// and ParseError on a malformed key. Returns the number of keys that matched
/// no node.
std::size_t assign_labels(ProgramGraph& graph, const RuntimeLabels& labels, const Vocabularies& vocab);

/// Keep iff 3 <= |nodes| <= 20,000.
bool filter_graph(const ProgramGraph& graph) noexcept;

/// parse result -> scope analysis -> nodes, edges, labels.
ProgramGraph build_graph(const AstDocument& doc, const Vocabularies& vocab, const RuntimeLabels* labels = nullptr,
                         std::string source_path = {}, std::string repository = {});

}  // namespace typegraph::graph
