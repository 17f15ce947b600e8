#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace typegraph::graph {

inline constexpr std::size_t kNodeTypeCount = 144;
inline constexpr std::size_t kPropTypeCount = 107;
inline constexpr std::size_t kEdgeTypeCount = 100;

enum class EdgeCategory { ast = 0, ref_traverse = 1 };
inline constexpr std::size_t kEdgeCategoryCount = 2;

/// "ast." names are AST edges; "reference." and "traverse." names are RefTraverse.
/// Throws VocabularyError for any other prefix.
EdgeCategory categorize(std::string_view edge_type_name);

/// An ordered list of names; index = position in the list.
class NameTable {
 public:
  NameTable() = default;
  explicit NameTable(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  std::optional<int> find(std::string_view name) const;
  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

/// The node-type, property and edge-type vocabularies shipped in data/vocab.
class Vocabularies {
 public:
  /// Reads nodeTypes.txt, propTypes.txt and edgeTypes.txt (one name per line).
  /// Throws VocabularyError when a file is missing, a name repeats, or a count is wrong.
  static Vocabularies load(const std::filesystem::path& dir);

  /// The first existing directory among: `explicit_dir` (must exist if given),
  /// $TYPEGRAPH_VOCAB_DIR, the install location, the source tree.
  static std::filesystem::path locate(const std::optional<std::filesystem::path>& explicit_dir = std::nullopt);

  const NameTable& node_types() const noexcept { return node_types_; }
  const NameTable& prop_types() const noexcept { return prop_types_; }
  const NameTable& edge_types() const noexcept { return edge_types_; }

  /// Category of each edge type index, precomputed.
  EdgeCategory category(int edge_type) const { return categories_.at(static_cast<std::size_t>(edge_type)); }

  /// Index of a name that must exist (throws VocabularyError otherwise).
  int edge_index(std::string_view name) const;

 private:
  NameTable node_types_;
  NameTable prop_types_;
  NameTable edge_types_;
  std::vector<EdgeCategory> categories_;
};

/// 104 symbols: 0 = padding, 1 = unknown, 2..96 = printable ASCII 0x20..0x7E,
/// 97..103 reserved (never produced by index()).
class CharVocabulary {
 public:
  static constexpr std::size_t kSize = 104;
  static constexpr int kPad = 0;
  static constexpr int kUnknown = 1;
  static constexpr std::size_t kStringLength = 16;

  static int index(char32_t c) noexcept {
    return (c >= 0x20 && c <= 0x7E) ? static_cast<int>(c - 0x20) + 2 : kUnknown;
  }

  /// Indices for a (UTF-8) value string, padded or cut to exactly kStringLength.
  static std::vector<int> encode(std::string_view utf8);
};

/// Decodes UTF-8 to code points. Invalid bytes decode as U+FFFD.
std::u32string decode_utf8(std::string_view utf8);

/// Longest prefix of `utf8` whose UTF-16 length is at most `max_units`.
std::string truncate_utf16_units(std::string_view utf8, std::size_t max_units);

}  // namespace typegraph::graph
