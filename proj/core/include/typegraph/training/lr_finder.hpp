#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "typegraph/graph/program_graph.hpp"
#include "typegraph/model/gnn.hpp"
#include "typegraph/training/batching.hpp"

namespace typegraph::training {

struct LrFinderConfig {
  double lr_min = 1e-6;
  double lr_max = 1.0;
  int epochs = 8;
  std::uint64_t seed = 0;
  BatchLimits limits;
};

struct LrPoint {
  std::size_t step = 0;
  int epoch = 0;
  double lr = 0.0;
  double loss = 0.0;
};

struct LrFinderResult {
  /// The schedule for every planned batch of all epochs.
  std::vector<double> planned_lrs;
  std::vector<std::size_t> batches_per_epoch;
  /// One point per batch actually run; the last one may be non-finite.
  std::vector<LrPoint> points;
  bool diverged = false;
};

/// lr_i = lr_min * (lr_max / lr_min)^(i / (B - 1)) over all B batches of
/// `epochs` epochs, one Adam step per batch, stopping at the first
/// non-finite loss. The model's parameters are restored afterwards.
LrFinderResult lr_finder(model::TypeModel& model, std::span<const graph::ProgramGraph> graphs,
                         std::span<const std::size_t> train_indices, const LrFinderConfig& config);

/// "lr,loss" CSV with a header line.
void write_lr_curve_csv(std::ostream& out, const LrFinderResult& result);

}  // namespace typegraph::training
