#include "typegraph/graph/vocabulary.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "typegraph/error.hpp"

namespace typegraph::graph {

EdgeCategory categorize(std::string_view name) {
  if (name.starts_with("ast.")) return EdgeCategory::ast;
  if (name.starts_with("reference.") || name.starts_with("traverse.")) return EdgeCategory::ref_traverse;
  throw VocabularyError("edge type '" + std::string(name) + "' has no known category prefix");
}

NameTable::NameTable(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<int>(i)).second) {
      throw VocabularyError("duplicate vocabulary entry '" + names_[i] + "'");
    }
  }
}

std::optional<int> NameTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

NameTable read_table(const std::filesystem::path& file, std::size_t expected) {
  std::ifstream in(file);
  if (!in) throw VocabularyError("cannot read vocabulary file " + file.string());
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) names.push_back(line);
  }
  if (names.size() != expected) {
    throw VocabularyError(file.string() + ": expected " + std::to_string(expected) + " entries, found " +
                          std::to_string(names.size()));
  }
  return NameTable(std::move(names));
}

}  // namespace

Vocabularies Vocabularies::load(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw VocabularyError("vocabulary directory not found: " + dir.string());
  Vocabularies v;
  v.node_types_ = read_table(dir / "nodeTypes.txt", kNodeTypeCount);
  v.prop_types_ = read_table(dir / "propTypes.txt", kPropTypeCount);
  v.edge_types_ = read_table(dir / "edgeTypes.txt", kEdgeTypeCount);
  for (const auto& name : v.edge_types_.names()) v.categories_.push_back(categorize(name));
  return v;
}

std::filesystem::path Vocabularies::locate(const std::optional<std::filesystem::path>& explicit_dir) {
  if (explicit_dir) {
    if (!std::filesystem::is_directory(*explicit_dir)) {
      throw VocabularyError("vocabulary directory not found: " + explicit_dir->string());
    }
    return *explicit_dir;
  }
  if (const char* env = std::getenv("TYPEGRAPH_VOCAB_DIR"); env && *env) {
    if (!std::filesystem::is_directory(env)) {
      throw VocabularyError(std::string("TYPEGRAPH_VOCAB_DIR does not exist: ") + env);
    }
    return env;
  }
#ifdef TYPEGRAPH_INSTALL_VOCAB_DIR
  if (std::filesystem::is_directory(TYPEGRAPH_INSTALL_VOCAB_DIR)) return TYPEGRAPH_INSTALL_VOCAB_DIR;
#endif
#ifdef TYPEGRAPH_SOURCE_VOCAB_DIR
  if (std::filesystem::is_directory(TYPEGRAPH_SOURCE_VOCAB_DIR)) return TYPEGRAPH_SOURCE_VOCAB_DIR;
#endif
  throw VocabularyError("no vocabulary directory found; pass --vocab-dir or set TYPEGRAPH_VOCAB_DIR");
}

int Vocabularies::edge_index(std::string_view name) const {
  if (auto i = edge_types_.find(name)) return *i;
  throw VocabularyError("unknown edge type '" + std::string(name) + "'");
}

std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    int extra = 0;
    char32_t cp = 0;
    if (c < 0x80) {
      cp = c;
    } else if ((c & 0xE0) == 0xC0) {
      cp = c & 0x1F;
      extra = 1;
    } else if ((c & 0xF0) == 0xE0) {
      cp = c & 0x0F;
      extra = 2;
    } else if ((c & 0xF8) == 0xF0) {
      cp = c & 0x07;
      extra = 3;
    } else {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k <= extra; ++k) {
      if (i + k >= s.size() || (static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
    }
    if (!ok) {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

std::string truncate_utf16_units(std::string_view s, std::size_t max_units) {
  std::size_t units = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = 1;
    if ((c & 0xE0) == 0xC0) len = 2;
    else if ((c & 0xF0) == 0xE0) len = 3;
    else if ((c & 0xF8) == 0xF0) len = 4;
    const std::size_t cost = len == 4 ? 2 : 1;
    if (units + cost > max_units) break;
    units += cost;
    i = std::min(s.size(), i + len);
  }
  return std::string(s.substr(0, i));
}

std::vector<int> CharVocabulary::encode(std::string_view utf8) {
  std::vector<int> out(kStringLength, kPad);
  const std::u32string cps = decode_utf8(utf8);
  for (std::size_t i = 0; i < cps.size() && i < kStringLength; ++i) out[i] = index(cps[i]);
  return out;
}

}  // namespace typegraph::graph
