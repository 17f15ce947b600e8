#include "corpus.hpp"

#include <algorithm>

#include "typegraph/error.hpp"

namespace typegraph::cli {

namespace fs = std::filesystem;

std::vector<CorpusFile> list_corpus(const fs::path& ast_dir, const std::optional<fs::path>& labels_dir) {
  if (!fs::is_directory(ast_dir)) throw DataError("AST directory not found: " + ast_dir.string());
  if (labels_dir && !fs::is_directory(*labels_dir)) {
    throw DataError("labels directory not found: " + labels_dir->string());
  }
  std::vector<CorpusFile> files;
  for (const auto& entry : fs::recursive_directory_iterator(ast_dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    const fs::path rel = fs::relative(entry.path(), ast_dir);
    CorpusFile f;
    f.ast = entry.path();
    f.source = rel.generic_string();
    f.repository = rel.has_parent_path() ? rel.begin()->string() : ast_dir.filename().string();
    if (labels_dir) {
      const fs::path candidate = *labels_dir / rel;
      if (fs::is_regular_file(candidate)) f.labels = candidate;
    }
    files.push_back(std::move(f));
  }
  std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) { return a.source < b.source; });
  return files;
}

}  // namespace typegraph::cli
