#include "typegraph/graph/program_graph.hpp"

#include <array>
#include <charconv>
#include <unordered_map>

#include "typegraph/error.hpp"

namespace typegraph::graph {

namespace {

constexpr std::array<const char*, 14> kBooleanProperties = {
    "async",  "computed", "delegate", "exact",  "expression", "generator", "method",
    "optional", "prefix", "selfClosing", "shorthand", "static", "tail", "value"};

std::string number_text(const Json& v) {
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v.get<double>());
  return std::string(buf.data(), ptr);
}

const Json* member(const Json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

std::optional<std::string> regex_flags(const AstNode& node) {
  const Json& raw = *node.raw;
  if (node.type == "RegExpLiteral") {
    const Json* f = member(raw, "flags");
    return f && f->is_string() ? f->get<std::string>() : std::string();
  }
  if (const Json* r = member(raw, "regex"); r && r->is_object()) {
    const Json* f = member(*r, "flags");
    return f && f->is_string() ? f->get<std::string>() : std::string();
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> node_property(const AstNode& node, const Vocabularies& vocab) {
  const Json& raw = *node.raw;
  const auto& props = vocab.prop_types();

  if (const Json* op = member(raw, "operator"); op && op->is_string()) {
    const std::string text = "{operator:" + op->get<std::string>() + "}";
    if (auto i = props.find(text)) return i;
    throw VocabularyError("unknown property '" + text + "' on " + node.type);
  }
  std::vector<std::string> candidates;
  auto add_string = [&](const char* key) {
    if (const Json* v = member(raw, key); v && v->is_string()) {
      candidates.push_back(std::string("{") + key + ":" + v->get<std::string>() + "}");
    }
  };
  add_string("kind");
  if (auto flags = regex_flags(node)) candidates.push_back("{flags:" + *flags + "}");
  for (const char* key : {"sourceType", "exportKind", "importKind", "variance"}) add_string(key);
  for (const char* key : kBooleanProperties) {
    if (const Json* v = member(raw, key); v && v->is_boolean() && v->get<bool>()) {
      candidates.push_back(std::string("{") + key + ":true}");
    }
  }
  for (const auto& c : candidates) {
    if (auto i = props.find(c)) return i;
  }
  return std::nullopt;
}

std::string node_value(const AstNode& node) {
  if (!node.is_leaf()) return {};
  const Json& raw = *node.raw;
  // Babel's NullLiteral carries no value key.
  if (node.type == "NullLiteral") return "null";
  if (const Json* name = member(raw, "name"); name && name->is_string()) return name->get<std::string>();
  if (const Json* v = member(raw, "value")) {
    if (v->is_string()) return v->get<std::string>();
    if (v->is_number()) return number_text(*v);
    if (v->is_boolean()) return v->get<bool>() ? "true" : "false";
    if (v->is_null() && !member(raw, "regex")) return "null";
    if (v->is_object() && node.type == "TemplateElement") {
      if (const Json* r = member(*v, "raw"); r && r->is_string()) return r->get<std::string>();
    }
  }
  if (const Json* p = member(raw, "pattern"); p && p->is_string()) return p->get<std::string>();
  if (const Json* r = member(raw, "regex"); r && r->is_object()) {
    if (const Json* p = member(*r, "pattern"); p && p->is_string()) return p->get<std::string>();
  }
  return {};
}

std::vector<GraphNode> build_nodes(const AstDocument& doc, const Vocabularies& vocab) {
  std::vector<GraphNode> nodes;
  nodes.reserve(doc.size());
  for (const AstNode& a : doc.nodes()) {
    GraphNode n;
    n.id = a.id;
    n.type_indices = {a.type_index};
    n.property_index = node_property(a, vocab);
    n.value_chars = truncate_utf16_units(node_value(a), kMaxValueChars);
    n.start = a.start;
    n.end = a.end;
    nodes.push_back(std::move(n));
  }
  return nodes;
}

namespace {

class EdgeNames {
 public:
  explicit EdgeNames(const Vocabularies& v) : vocab_(v) {
    child_ = v.edge_index("ast.child");
    next_in_list_ = v.edge_index("ast.next-in-list");
    for (int k = 0; k <= 4; ++k) position_[k] = v.edge_index("ast.position." + std::to_string(k));
    position_star_ = v.edge_index("ast.position.*");
    for (int j = 1; j <= 4; ++j) from_last_[j] = v.edge_index("ast.position-from-last." + std::to_string(j));
    from_last_star_ = v.edge_index("ast.position-from-last.*");
    next_node_ = v.edge_index("traverse.next-node");
    next_sibling_ = v.edge_index("traverse.next-sibling");
    defined_by_ = v.edge_index("reference.defined-by");
    next_use_ = v.edge_index("reference.next-use");
  }

  int child(const std::string& field) { return lookup("ast.child." + field, child_); }
  int next_in_list(const std::string& field) { return lookup("ast.next-in-list." + field, next_in_list_); }
  int position(std::size_t k) const { return k <= 4 ? position_[k] : position_star_; }
  int from_last(std::size_t j) const { return j <= 4 ? from_last_[j] : from_last_star_; }

  int next_node_ = 0, next_sibling_ = 0, defined_by_ = 0, next_use_ = 0;

 private:
  int lookup(const std::string& name, int fallback) {
    auto it = cache_.find(name);
    if (it != cache_.end()) return it->second;
    const int index = vocab_.edge_types().find(name).value_or(fallback);
    cache_.emplace(name, index);
    return index;
  }

  const Vocabularies& vocab_;
  int child_ = 0, next_in_list_ = 0, position_star_ = 0, from_last_star_ = 0;
  std::array<int, 5> position_{};
  std::array<int, 5> from_last_{};
  std::unordered_map<std::string, int> cache_;
};

}  // namespace

std::vector<TypedEdge> build_edges(const AstDocument& doc, const ScopeInfo& scope, const Vocabularies& vocab) {
  EdgeNames names(vocab);
  std::vector<TypedEdge> edges;
  auto emit = [&](int src, int type, int dst) { edges.push_back({src, type, dst, vocab.category(type)}); };

  for (const AstNode& n : doc.nodes()) {
    for (const AstField& f : n.fields) {
      const int child_type = names.child(f.name);
      for (int c : f.children) emit(n.id, child_type, c);
      if (!f.is_list) continue;
      const std::size_t count = f.children.size();
      if (count > 1) {
        const int next_type = names.next_in_list(f.name);
        for (std::size_t k = 0; k + 1 < count; ++k) emit(f.children[k], next_type, f.children[k + 1]);
      }
      for (std::size_t k = 0; k < count; ++k) {
        emit(n.id, names.position(k), f.children[k]);
        emit(n.id, names.from_last(count - k), f.children[k]);
      }
    }
    const std::vector<int> kids = n.children();
    for (std::size_t k = 0; k + 1 < kids.size(); ++k) emit(kids[k], names.next_sibling_, kids[k + 1]);
  }

  for (std::size_t i = 0; i + 1 < doc.size(); ++i) {
    emit(static_cast<int>(i), names.next_node_, static_cast<int>(i + 1));
  }

  std::vector<int> last_use(scope.declaration.size(), -1);
  for (std::size_t i = 0; i < scope.binding_of.size(); ++i) {
    const int b = scope.binding_of[i];
    if (b < 0) continue;
    const int use = static_cast<int>(i);
    emit(use, names.defined_by_, scope.declaration[static_cast<std::size_t>(b)]);
    if (last_use[static_cast<std::size_t>(b)] >= 0) emit(last_use[static_cast<std::size_t>(b)], names.next_use_, use);
    last_use[static_cast<std::size_t>(b)] = use;
  }
  return edges;
}

namespace {

std::pair<std::size_t, std::size_t> parse_span_key(const std::string& key) {
  const auto colon = key.find(':');
  std::size_t start = 0, end = 0;
  const char* first = key.data();
  const char* last = key.data() + key.size();
  bool ok = colon != std::string::npos;
  if (ok) {
    auto r1 = std::from_chars(first, first + colon, start);
    auto r2 = std::from_chars(first + colon + 1, last, end);
    ok = r1.ec == std::errc() && r1.ptr == first + colon && r2.ec == std::errc() && r2.ptr == last;
  }
  if (!ok) throw ParseError("malformed label key '" + key + "' (expected start:end)", 0);
  return {start, end};
}

}  // namespace

std::size_t assign_labels(ProgramGraph& graph, const RuntimeLabels& labels, const Vocabularies& vocab) {
  std::map<std::pair<std::size_t, std::size_t>, int> innermost;
  for (const GraphNode& n : graph.nodes) innermost[{n.start, n.end}] = n.id;

  for (GraphNode& n : graph.nodes) {
    n.label = Label{};
    for (int t : n.type_indices) {
      if (auto cls = explicit_label_for(vocab.node_types().name(static_cast<std::size_t>(t)))) {
        n.label = Label{*cls, true};
        break;
      }
    }
  }

  std::size_t unmatched = 0;
  for (const auto& [key, name] : labels) {
    const LabelClass cls = parse_label_class(name);
    auto it = innermost.find(parse_span_key(key));
    if (it == innermost.end()) {
      ++unmatched;
      continue;
    }
    GraphNode& n = graph.nodes[static_cast<std::size_t>(it->second)];
    n.label.variant = cls;
  }
  return unmatched;
}

bool filter_graph(const ProgramGraph& graph) noexcept {
  return graph.nodes.size() >= kMinGraphNodes && graph.nodes.size() <= kMaxGraphNodes;
}

ProgramGraph build_graph(const AstDocument& doc, const Vocabularies& vocab, const RuntimeLabels* labels,
                         std::string source_path, std::string repository) {
  ProgramGraph g;
  g.nodes = build_nodes(doc, vocab);
  g.edges = build_edges(doc, analyze_scopes(doc), vocab);
  g.source_path = std::move(source_path);
  g.repository = std::move(repository);
  assign_labels(g, labels ? *labels : RuntimeLabels{}, vocab);
  return g;
}

}  // namespace typegraph::graph
