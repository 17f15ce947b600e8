#pragma once

#include <cstddef>
#include <vector>

#include "typegraph/graph/estree.hpp"

namespace typegraph::graph {

/// Lexical name resolution over one AstDocument.
///
/// `var` declarations bind in the enclosing function (or program) scope,
/// `let`, `const`, classes and function declarations in the innermost block.
/// Identifiers that resolve to nothing (globals) are left unresolved.
struct ScopeInfo {
  /// Per node: binding id for an identifier use, or -1.
  std::vector<int> binding_of;
  /// Per binding: the node it is defined by (declarator, declaration,
  /// parameter identifier or import specifier).
  std::vector<int> declaration;
  /// Per node: true for identifiers that introduce a binding.
  std::vector<bool> is_binding;
};

ScopeInfo analyze_scopes(const AstDocument& doc);

}  // namespace typegraph::graph
