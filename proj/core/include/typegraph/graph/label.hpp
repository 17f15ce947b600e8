#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace typegraph::graph {

/// The eight runtime classes in output order, then `unknown`.
enum class LabelClass : int {
  object = 0,
  string = 1,
  function = 2,
  number = 3,
  undefined = 4,
  array = 5,
  boolean = 6,
  null = 7,
  unknown = 8,
};

inline constexpr std::size_t kClassCount = 8;

inline constexpr std::array<std::string_view, 9> kLabelNames = {
    "object", "string", "function", "number", "undefined", "array", "boolean", "null", "unknown"};

struct Label {
  LabelClass variant = LabelClass::unknown;
  bool explicit_ = false;

  bool known() const noexcept { return variant != LabelClass::unknown; }
  int index() const noexcept { return static_cast<int>(variant); }
  bool operator==(const Label&) const = default;
};

std::string_view label_name(LabelClass c) noexcept;

/// Parses one of the eight class names (not "unknown"); throws LabelError otherwise.
LabelClass parse_label_class(std::string_view name);

/// Parses any of the nine names, including "unknown"; nullopt otherwise.
std::optional<LabelClass> try_parse_label(std::string_view name) noexcept;

/// Class forced by the node type alone (literals, function and container forms).
std::optional<LabelClass> explicit_label_for(std::string_view node_type) noexcept;

}  // namespace typegraph::graph
