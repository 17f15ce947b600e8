#include "typegraph/graph/label.hpp"

#include <string>
#include <utility>

#include "typegraph/error.hpp"

namespace typegraph::graph {

std::string_view label_name(LabelClass c) noexcept { return kLabelNames[static_cast<std::size_t>(c)]; }

std::optional<LabelClass> try_parse_label(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kLabelNames.size(); ++i) {
    if (kLabelNames[i] == name) return static_cast<LabelClass>(i);
  }
  return std::nullopt;
}

LabelClass parse_label_class(std::string_view name) {
  auto c = try_parse_label(name);
  if (!c || *c == LabelClass::unknown) {
    throw LabelError("invalid runtime label '" + std::string(name) + "'");
  }
  return *c;
}

std::optional<LabelClass> explicit_label_for(std::string_view t) noexcept {
  static constexpr std::pair<std::string_view, LabelClass> table[] = {
      {"StringLiteral", LabelClass::string},
      {"DirectiveLiteral", LabelClass::string},
      {"TemplateLiteral", LabelClass::string},
      {"NumericLiteral", LabelClass::number},
      {"BooleanLiteral", LabelClass::boolean},
      {"NullLiteral", LabelClass::null},
      {"FunctionDeclaration", LabelClass::function},
      {"FunctionExpression", LabelClass::function},
      {"ArrowFunctionExpression", LabelClass::function},
      {"ObjectMethod", LabelClass::function},
      {"ClassMethod", LabelClass::function},
      {"DeclareFunction", LabelClass::function},
      {"ArrayExpression", LabelClass::array},
      {"ArrayPattern", LabelClass::array},
      {"ObjectExpression", LabelClass::object},
      {"ObjectPattern", LabelClass::object},
  };
  for (const auto& [name, cls] : table) {
    if (name == t) return cls;
  }
  return std::nullopt;
}

}  // namespace typegraph::graph
