#include "typegraph/graph/scope.hpp"

#include <string>
#include <string_view>
#include <unordered_map>

namespace typegraph::graph {

namespace {

bool is_function(std::string_view t) {
  return t == "FunctionDeclaration" || t == "FunctionExpression" || t == "ArrowFunctionExpression" ||
         t == "ObjectMethod" || t == "ClassMethod" || t == "ClassPrivateMethod";
}

bool opens_block_scope(std::string_view t) {
  return t == "BlockStatement" || t == "ForStatement" || t == "ForInStatement" || t == "ForOfStatement" ||
         t == "CatchClause" || t == "SwitchStatement" || t == "StaticBlock";
}

bool flag(const AstNode& n, const char* key) {
  auto it = n.raw->find(key);
  return it != n.raw->end() && it->is_boolean() && it->get<bool>();
}

std::string string_field(const AstNode& n, const char* key) {
  auto it = n.raw->find(key);
  return (it != n.raw->end() && it->is_string()) ? it->get<std::string>() : std::string();
}

const AstField* field(const AstNode& n, std::string_view name) {
  for (const auto& f : n.fields) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

struct Scope {
  int parent = -1;
  bool function_scope = false;
  std::unordered_map<std::string, int> names;
};

class Analyzer {
 public:
  explicit Analyzer(const AstDocument& doc) : doc_(doc) {
    scope_of_.assign(doc.size(), -1);
    info_.binding_of.assign(doc.size(), -1);
    info_.is_binding.assign(doc.size(), false);
  }

  ScopeInfo run() {
    const int program = new_scope(-1, true);
    declare_pass(doc_.root().id, program);
    resolve_pass();
    return std::move(info_);
  }

 private:
  int new_scope(int parent, bool function_scope) {
    scopes_.push_back(Scope{parent, function_scope, {}});
    return static_cast<int>(scopes_.size()) - 1;
  }

  int function_scope_of(int scope) const {
    while (!scopes_[static_cast<std::size_t>(scope)].function_scope) scope = scopes_[static_cast<std::size_t>(scope)].parent;
    return scope;
  }

  void declare(int scope, int identifier, int decl_node) {
    const AstNode& id = doc_.node(identifier);
    info_.is_binding[static_cast<std::size_t>(identifier)] = true;
    auto& names = scopes_[static_cast<std::size_t>(scope)].names;
    const std::string name = string_field(id, "name");
    if (names.contains(name)) return;
    names.emplace(name, static_cast<int>(info_.declaration.size()));
    info_.declaration.push_back(decl_node);
  }

  // Binding identifiers of a destructuring pattern.
  void pattern_identifiers(int node, std::vector<int>& out) const {
    const AstNode& n = doc_.node(node);
    if (n.type == "Identifier") {
      out.push_back(node);
    } else if (n.type == "ObjectPattern") {
      for (int p : children_of(n, "properties")) {
        const AstNode& prop = doc_.node(p);
        if (prop.type == "RestElement") {
          pattern_identifiers(p, out);
        } else if (const AstField* v = field(prop, "value"); v && !v->children.empty()) {
          pattern_identifiers(v->children.front(), out);
        }
      }
    } else if (n.type == "ArrayPattern") {
      for (int e : children_of(n, "elements")) pattern_identifiers(e, out);
    } else if (n.type == "AssignmentPattern") {
      for (int l : children_of(n, "left")) pattern_identifiers(l, out);
    } else if (n.type == "RestElement" || n.type == "RestProperty") {
      for (int a : children_of(n, "argument")) pattern_identifiers(a, out);
    } else if (n.type == "TSParameterProperty") {
      for (int p : children_of(n, "parameter")) pattern_identifiers(p, out);
    }
  }

  std::vector<int> children_of(const AstNode& n, std::string_view name) const {
    const AstField* f = field(n, name);
    return f ? f->children : std::vector<int>{};
  }

  void declare_pattern(int scope, int pattern, int decl_node_or_self) {
    std::vector<int> ids;
    pattern_identifiers(pattern, ids);
    for (int id : ids) declare(scope, id, decl_node_or_self < 0 ? id : decl_node_or_self);
  }

  void declare_pass(int node, int scope) {
    const AstNode& n = doc_.node(node);
    scope_of_[static_cast<std::size_t>(node)] = scope;

    if (is_function(n.type)) {
      if (n.type == "FunctionDeclaration") {
        for (int id : children_of(n, "id")) declare(scope, id, node);
      }
      const int inner = new_scope(scope, true);
      if (n.type == "FunctionExpression") {
        for (int id : children_of(n, "id")) declare(inner, id, node);
      }
      for (int p : children_of(n, "params")) declare_pattern(inner, p, -1);
      for (const auto& f : n.fields) {
        for (int c : f.children) {
          const AstNode& child = doc_.node(c);
          if (f.name == "body" && child.type == "BlockStatement") {
            // The function body shares the parameter scope.
            scope_of_[static_cast<std::size_t>(c)] = inner;
            for (int s : child.children()) declare_pass(s, inner);
          } else {
            declare_pass(c, inner);
          }
        }
      }
      return;
    }

    int inner = scope;
    if (opens_block_scope(n.type)) {
      inner = new_scope(scope, false);
      if (n.type == "CatchClause") {
        for (int p : children_of(n, "param")) declare_pattern(inner, p, -1);
      }
    } else if (n.type == "ClassExpression" && field(n, "id")) {
      inner = new_scope(scope, false);
      for (int id : children_of(n, "id")) declare(inner, id, node);
    } else if (n.type == "ClassDeclaration") {
      for (int id : children_of(n, "id")) declare(scope, id, node);
    } else if (n.type == "VariableDeclaration") {
      const std::string kind = string_field(n, "kind");
      const int target = kind == "var" ? function_scope_of(scope) : scope;
      for (int d : children_of(n, "declarations")) {
        for (int id : children_of(doc_.node(d), "id")) declare_pattern(target, id, d);
      }
    } else if (n.type == "ImportSpecifier" || n.type == "ImportDefaultSpecifier" ||
               n.type == "ImportNamespaceSpecifier") {
      for (int local : children_of(n, "local")) declare(function_scope_of(scope), local, node);
    }

    for (int c : n.children()) declare_pass(c, inner);
  }

  bool is_reference_position(const AstNode& n) const {
    if (n.parent < 0) return true;
    const AstNode& p = doc_.node(n.parent);
    const std::string& f = n.field;
    if (f == "property" && (p.type == "MemberExpression" || p.type == "OptionalMemberExpression")) {
      return flag(p, "computed");
    }
    if (f == "key") return flag(p, "computed");
    if (f == "label" || f == "imported" || f == "exported") return false;
    if (p.type == "MetaProperty") return false;
    return true;
  }

  void resolve_pass() {
    for (const AstNode& n : doc_.nodes()) {
      if (n.type != "Identifier" || info_.is_binding[static_cast<std::size_t>(n.id)]) continue;
      if (!is_reference_position(n)) continue;
      const std::string name = string_field(n, "name");
      for (int s = scope_of_[static_cast<std::size_t>(n.id)]; s >= 0; s = scopes_[static_cast<std::size_t>(s)].parent) {
        const auto& names = scopes_[static_cast<std::size_t>(s)].names;
        if (auto it = names.find(name); it != names.end()) {
          info_.binding_of[static_cast<std::size_t>(n.id)] = it->second;
          break;
        }
      }
    }
  }

  const AstDocument& doc_;
  std::vector<Scope> scopes_;
  std::vector<int> scope_of_;
  ScopeInfo info_;
};

}  // namespace

ScopeInfo analyze_scopes(const AstDocument& doc) { return Analyzer(doc).run(); }

}  // namespace typegraph::graph
