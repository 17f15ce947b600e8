#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "typegraph/graph/program_graph.hpp"
#include "typegraph/model/model_config.hpp"
#include "typegraph/numerics/rng.hpp"
#include "typegraph/training/trainer.hpp"

namespace typegraph::training {

/// Grid sampled uniformly, one axis at a time. Defaults are the full tuning grid.
struct SearchSpace {
  std::vector<std::size_t> hidden_sizes{32, 64, 128};
  std::vector<int> enc_blocks{0, 1, 2, 3};
  std::vector<double> dropouts{0.0, 0.1, 0.2, 0.3, 0.4, 0.5};
  std::vector<int> n_layers{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<int> dec_blocks{0, 1, 2, 3};
  /// Probability that a GGNN trial gets a master node (0 disables).
  double master_probability = 0.5;
  std::vector<std::size_t> master_sizes{20, 40, 60, 80, 100, 120, 140, 160, 180, 200};
  std::vector<double> master_dropouts{0.0, 0.1, 0.2, 0.3, 0.4, 0.5};

  /// Throws ConfigError for an empty axis or a value outside the model's ranges.
  void validate() const;
  model::ModelConfig sample(model::Arch arch, numerics::Rng& rng) const;
};

struct SearchConfig {
  model::Arch arch = model::Arch::ggnn;
  int n_configs = 200;
  int max_epochs = 50;
  int reduction_factor = 4;
  int min_epochs = 3;
  /// Trials run concurrently per wave; results are merged in trial order.
  int workers = 1;
  std::uint64_t seed = 0;
  /// Training settings shared by all trials (lr, patience, batch limits).
  TrainConfig train;
};

/// min_epochs * factor^k for every k with min_epochs * factor^(k+1) <= max_epochs, then max_epochs.
/// For 3 / 4 / 50 this is 3, 12, 50.
std::vector<int> asha_rungs(int min_epochs, int reduction_factor, int max_epochs);

enum class TrialStatus { completed, stopped, diverged, failed };
const char* trial_status_name(TrialStatus s) noexcept;

struct TrialRecord {
  int trial = 0;
  model::ModelConfig config;
  std::vector<double> val_f1;
  double best_f1 = 0.0;
  int stop_epoch = 0;
  TrialStatus status = TrialStatus::completed;
  std::string error;
};

struct SearchResult {
  std::vector<TrialRecord> trials;
  std::vector<int> rungs;
  /// Trials sorted by best_f1 (descending), ties by trial number.
  std::vector<int> ranking;
  std::size_t total_epochs = 0;
};

/// Asynchronous successive halving. At each rung a trial continues only if
/// its best validation F1 so far ranks within the top ceil(n / factor) of the
/// n results recorded at that rung (ties go to the earlier trial). Trials see
/// the records of all earlier waves, so the outcome does not depend on thread timing.
SearchResult hp_search(std::span<const graph::ProgramGraph> graphs, std::span<const std::size_t> train_indices,
                       std::span<const std::size_t> validation_indices, const SearchSpace& space,
                       const SearchConfig& config);

/// CSV: trial, config fields, best_f1, stop_epoch, status, val_f1 curve (';'-separated).
void write_trial_table(std::ostream& out, const SearchResult& result);

}  // namespace typegraph::training
