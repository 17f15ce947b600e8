#pragma once

#include <cstddef>
#include <vector>

#include "typegraph/numerics/parameters.hpp"

namespace typegraph::training {

struct AdamConfig {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

/// Adam over the trainable entries of a ParameterStore.
class Adam {
 public:
  explicit Adam(numerics::ParameterStore& params, AdamConfig config = {});

  /// Applies one update from the accumulated gradients. Throws NumericError
  /// (naming the parameter) if any gradient is non-finite; nothing is updated then.
  void step(double lr);
  std::size_t steps() const noexcept { return t_; }

 private:
  numerics::ParameterStore& params_;
  AdamConfig config_;
  std::vector<numerics::Tensor> m_;
  std::vector<numerics::Tensor> v_;
  std::size_t t_ = 0;
};

/// Multiplies the learning rate by `factor` once the monitored score
/// (higher is better) has failed to beat its best by more than `threshold`
/// for `patience` consecutive observations.
class PlateauScheduler {
 public:
  explicit PlateauScheduler(double initial_lr, double factor = 0.1, int patience = 5, double threshold = 1e-4);

  /// Returns true when this observation triggered a reduction.
  bool observe(double score);
  double lr() const noexcept { return lr_; }
  int reductions() const noexcept { return reductions_; }
  double best() const noexcept { return best_; }

 private:
  double initial_lr_;
  double factor_;
  int patience_;
  double threshold_;
  double lr_;
  double best_;
  int bad_epochs_ = 0;
  int reductions_ = 0;
};

}  // namespace typegraph::training
