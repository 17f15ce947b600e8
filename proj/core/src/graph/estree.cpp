#include "typegraph/graph/estree.hpp"

#include <array>

#include "typegraph/error.hpp"

namespace typegraph::graph {

namespace {

constexpr std::array<std::string_view, 10> kSkippedKeys = {
    "type", "start", "end", "loc", "range", "extra", "comments", "leadingComments", "trailingComments",
    "innerComments"};

bool skipped(std::string_view key) {
  for (auto k : kSkippedKeys) {
    if (k == key) return true;
  }
  return false;
}

bool is_node(const Json& v) {
  if (!v.is_object()) return false;
  auto it = v.find("type");
  return it != v.end() && it->is_string();
}

bool is_node_list(const Json& v) {
  if (!v.is_array()) return false;
  bool any = false;
  for (const auto& e : v) {
    if (e.is_null()) continue;
    if (!is_node(e)) return false;
    any = true;
  }
  return any;
}

std::size_t offset(const Json& v, const std::string& type, const char* what) {
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw ParseError(type + " node has a non-integer " + what, 0);
  }
  const auto n = v.get<long long>();
  if (n < 0) throw ParseError(type + " node has a negative " + what, 0);
  return static_cast<std::size_t>(n);
}

class Builder {
 public:
  Builder(const Vocabularies& vocab, std::vector<AstNode>& out) : vocab_(vocab), out_(out) {}

  int visit(const Json& obj, int parent, const std::string& field, int list_index) {
    const int id = static_cast<int>(out_.size());
    out_.emplace_back();
    {
      AstNode& n = out_.back();
      n.id = id;
      n.type = obj["type"].get<std::string>();
      auto index = vocab_.node_types().find(n.type);
      if (!index) throw VocabularyError("unknown node type '" + n.type + "'");
      n.type_index = *index;
      n.parent = parent;
      n.field = field;
      n.list_index = list_index;
      n.raw = &obj;
      read_span(obj, n);
    }
    std::vector<AstField> fields;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      if (skipped(it.key())) continue;
      const Json& v = it.value();
      if (is_node(v)) {
        AstField f{it.key(), false, {}};
        f.children.push_back(visit(v, id, it.key(), -1));
        fields.push_back(std::move(f));
      } else if (is_node_list(v)) {
        AstField f{it.key(), true, {}};
        int k = 0;
        for (const auto& e : v) {
          if (e.is_null()) continue;
          f.children.push_back(visit(e, id, it.key(), k++));
        }
        fields.push_back(std::move(f));
      }
    }
    out_[static_cast<std::size_t>(id)].fields = std::move(fields);
    return id;
  }

 private:
  static void read_span(const Json& obj, AstNode& n) {
    auto s = obj.find("start");
    auto e = obj.find("end");
    if (s != obj.end() && e != obj.end()) {
      n.start = offset(*s, n.type, "start");
      n.end = offset(*e, n.type, "end");
      return;
    }
    auto r = obj.find("range");
    if (r != obj.end() && r->is_array() && r->size() == 2) {
      n.start = offset((*r)[0], n.type, "range start");
      n.end = offset((*r)[1], n.type, "range end");
      return;
    }
    throw ParseError(n.type + " node has no span (start/end or range)", 0);
  }

  const Vocabularies& vocab_;
  std::vector<AstNode>& out_;
};

}  // namespace

bool AstNode::is_leaf() const noexcept {
  for (const auto& f : fields) {
    if (!f.children.empty()) return false;
  }
  return true;
}

std::vector<int> AstNode::children() const {
  std::vector<int> out;
  for (const auto& f : fields) out.insert(out.end(), f.children.begin(), f.children.end());
  return out;
}

AstDocument parse_estree_json(Json document, const Vocabularies& vocab) {
  auto owned = std::make_shared<const Json>(std::move(document));
  const Json* root = owned.get();
  if (!is_node(*root)) throw ParseError("document root is not an ESTree node", 0);
  if ((*root)["type"] == "File") {
    auto p = root->find("program");
    if (p == root->end() || !is_node(*p)) throw ParseError("File node without a program", 0);
    root = &*p;
  }
  AstDocument doc;
  Builder(vocab, doc.nodes_).visit(*root, -1, "", -1);
  doc.json_ = std::move(owned);
  return doc;
}

AstDocument parse_estree(std::string_view document, const Vocabularies& vocab) {
  Json j;
  try {
    j = Json::parse(document.begin(), document.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
  return parse_estree_json(std::move(j), vocab);
}

}  // namespace typegraph::graph
