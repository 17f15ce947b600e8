#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace typegraph::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2, kDiverged = 3 };

struct BuildGraphsOptions {
  std::filesystem::path ast_dir;
  std::optional<std::filesystem::path> labels_dir;
  std::filesystem::path out;
  std::optional<std::filesystem::path> vocab_dir;
  int jobs = 1;
};

struct ModelOptions {
  std::string arch = "ggnn";
  std::optional<std::filesystem::path> config;
  std::uint64_t seed = 0;
  std::optional<double> lr;
};

struct TrainOptions {
  std::filesystem::path graphs;
  ModelOptions model;
  std::filesystem::path out;
  std::optional<std::filesystem::path> metrics;
  std::optional<std::filesystem::path> vocab_dir;
  int epochs = 50;
  int patience = 5;
  double split = 0.8;
};

struct EvaluateOptions {
  std::filesystem::path graphs;
  std::filesystem::path checkpoint;
  std::optional<std::filesystem::path> vocab_dir;
};

struct PredictOptions {
  std::filesystem::path ast;
  std::filesystem::path checkpoint;
  std::optional<std::filesystem::path> labels;
  std::optional<std::filesystem::path> source;
  std::optional<std::filesystem::path> jsonl;
  std::optional<std::filesystem::path> vocab_dir;
};

struct LrFindOptions {
  std::filesystem::path graphs;
  ModelOptions model;
  std::filesystem::path out;
  std::optional<std::filesystem::path> vocab_dir;
  double lr_min = 1e-6;
  double lr_max = 1.0;
  int epochs = 8;
};

struct HpSearchOptions {
  std::filesystem::path graphs;
  std::string arch = "ggnn";
  std::optional<std::filesystem::path> space;
  std::filesystem::path out;
  std::optional<std::filesystem::path> vocab_dir;
  int n_configs = 200;
  int max_epochs = 50;
  int workers = 1;
  std::uint64_t seed = 0;
  std::optional<double> lr;
  double split = 0.8;
};

int build_graphs(const BuildGraphsOptions& o);
int train(const TrainOptions& o);
int evaluate(const EvaluateOptions& o);
int predict(const PredictOptions& o);
int lr_find(const LrFindOptions& o);
int hp_search(const HpSearchOptions& o);

}  // namespace typegraph::cli
