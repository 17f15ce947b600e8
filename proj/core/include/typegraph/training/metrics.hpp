#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "typegraph/graph/label.hpp"
#include "typegraph/numerics/tensor.hpp"

namespace typegraph::training {

enum class F1Mode { validation, test };

/// Row-wise argmax over the 8 classes.
std::vector<int> argmax_predictions(const numerics::Tensor& log_probs);

/// Labeled and not explicit.
inline bool is_evaluation_node(int label, bool explicit_flag) noexcept {
  return label != static_cast<int>(graph::LabelClass::unknown) && !explicit_flag;
}

struct ClassScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
};

/// Pooled counts over a set of evaluation nodes.
class Confusion {
 public:
  void add(int predicted, int gold);
  /// Adds every node selected by is_evaluation_node (or every labeled node
  /// when `include_explicit`).
  void add_nodes(std::span<const int> predictions, std::span<const int> labels, const std::vector<bool>& explicit_flags,
                 bool include_explicit = false);
  void merge(const Confusion& other);

  std::size_t total() const noexcept { return total_; }
  std::size_t correct() const noexcept { return correct_; }
  /// Micro-averaged F1 from pooled TP/FP/FN. Throws DataError when empty.
  double micro_f1() const;
  ClassScores class_scores(graph::LabelClass c) const;
  std::size_t count(int predicted, int gold) const { return counts_.at(gold).at(predicted); }

 private:
  std::array<std::array<std::size_t, graph::kClassCount>, graph::kClassCount> counts_{};
  std::size_t total_ = 0;
  std::size_t correct_ = 0;
};

/// Micro-F1 over evaluation nodes. Throws DataError when there are none.
double micro_f1(std::span<const int> predictions, std::span<const int> labels, const std::vector<bool>& explicit_flags);

/// Validation mode: unweighted mean of per-batch scores (batches without
/// evaluation nodes are skipped). Test mode: one score over all nodes pooled.
double combine_batch_scores(std::span<const Confusion> batches, F1Mode mode);

}  // namespace typegraph::training
