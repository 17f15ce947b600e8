#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "typegraph/graph/program_graph.hpp"
#include "typegraph/model/gnn.hpp"
#include "typegraph/training/batching.hpp"
#include "typegraph/training/metrics.hpp"

namespace typegraph::training {

struct TrainConfig {
  double initial_lr = 0.001;
  double plateau_factor = 0.1;
  int plateau_patience = 5;
  double plateau_threshold = 1e-4;
  int max_epochs = 50;
  std::uint64_t seed = 0;
  BatchLimits limits;
  /// Stop once the epoch's training F1 reaches this value (<= 0 disables).
  double target_train_f1 = 0.0;
  /// Include wall-clock time in the metrics log (off for byte-stable logs).
  bool log_wall_time = true;
};

struct EpochMetrics {
  int epoch = 0;
  double lr = 0.0;
  double train_loss = 0.0;
  double val_f1 = 0.0;
  double wall_ms = 0.0;
  /// From the epoch's training-mode forward passes, explicit nodes excluded / included.
  double train_f1 = 0.0;
  double train_f1_with_explicit = 0.0;
};

nlohmann::ordered_json to_json(const EpochMetrics& m, bool with_wall_time = true);

enum class TrainStatus { completed, diverged, stopped };
const char* status_name(TrainStatus s) noexcept;

struct TrainResult {
  TrainStatus status = TrainStatus::completed;
  std::vector<EpochMetrics> history;
  double best_val_f1 = 0.0;
  int best_epoch = 0;
  std::string message;
};

/// Called after each epoch; returning false stops training (status `stopped`).
using EpochCallback = std::function<bool(const EpochMetrics&)>;

/// Mini-batch training with Adam and the plateau scheduler. On return the
/// model holds the parameters of the best validation epoch. A non-finite loss
/// or gradient ends training with status `diverged`.
TrainResult train(model::TypeModel& model, std::span<const graph::ProgramGraph> graphs,
                  std::span<const std::size_t> train_indices, std::span<const std::size_t> validation_indices,
                  const TrainConfig& config, const EpochCallback& on_epoch = {}, std::ostream* metrics_log = nullptr);

/// Validation-mode F1 (mean over a fixed batch plan) in eval mode.
double validation_f1(const model::TypeModel& model, std::span<const graph::ProgramGraph> graphs,
                     const std::vector<std::vector<std::size_t>>& plan);

struct EvaluationReport {
  double micro_f1 = 0.0;
  std::size_t evaluated_nodes = 0;
  std::size_t labeled_nodes = 0;
  std::size_t explicit_nodes = 0;
  std::size_t total_nodes = 0;
  std::array<ClassScores, graph::kClassCount> classes{};
};

/// Test-mode evaluation: one global F1 over labeled, non-explicit nodes.
EvaluationReport evaluate(const model::TypeModel& model, std::span<const graph::ProgramGraph> graphs,
                          std::span<const std::size_t> indices, const BatchLimits& limits = {});

/// Class probabilities [N, 8] for one graph, eval mode.
numerics::Tensor predict_probabilities(const model::TypeModel& model, const graph::ProgramGraph& graph);

}  // namespace typegraph::training
