#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace typegraph::cli {

/// One ESTree file of an <ast-dir>/<repo>/<file>.json tree.
struct CorpusFile {
  std::filesystem::path ast;
  std::optional<std::filesystem::path> labels;
  std::string repository;
  /// Path relative to the ast dir, '/'-separated.
  std::string source;
};

/// Sorted by relative path. Files directly under `ast_dir` belong to a
/// repository named after the directory itself.
std::vector<CorpusFile> list_corpus(const std::filesystem::path& ast_dir,
                                    const std::optional<std::filesystem::path>& labels_dir);

}  // namespace typegraph::cli
