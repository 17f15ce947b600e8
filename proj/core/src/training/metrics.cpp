#include "typegraph/training/metrics.hpp"

#include "typegraph/error.hpp"

namespace typegraph::training {

std::vector<int> argmax_predictions(const numerics::Tensor& log_probs) {
  std::vector<int> out(log_probs.rows());
  for (std::size_t r = 0; r < log_probs.rows(); ++r) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < log_probs.cols(); ++c) {
      if (log_probs(r, c) > log_probs(r, best)) best = c;
    }
    out[r] = static_cast<int>(best);
  }
  return out;
}

void Confusion::add(int predicted, int gold) {
  counts_.at(static_cast<std::size_t>(gold)).at(static_cast<std::size_t>(predicted))++;
  ++total_;
  if (predicted == gold) ++correct_;
}

void Confusion::add_nodes(std::span<const int> predictions, std::span<const int> labels,
                          const std::vector<bool>& explicit_flags, bool include_explicit) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const bool selected = include_explicit ? labels[i] != static_cast<int>(graph::LabelClass::unknown)
                                           : is_evaluation_node(labels[i], explicit_flags[i]);
    if (selected) add(predictions[i], labels[i]);
  }
}

void Confusion::merge(const Confusion& other) {
  for (std::size_t g = 0; g < graph::kClassCount; ++g) {
    for (std::size_t p = 0; p < graph::kClassCount; ++p) counts_[g][p] += other.counts_[g][p];
  }
  total_ += other.total_;
  correct_ += other.correct_;
}

double Confusion::micro_f1() const {
  if (total_ == 0) throw DataError("F1 is undefined without evaluation nodes");
  std::size_t tp = 0, fp = 0, fn = 0;
  for (std::size_t c = 0; c < graph::kClassCount; ++c) {
    for (std::size_t p = 0; p < graph::kClassCount; ++p) {
      if (c == p) {
        tp += counts_[c][p];
      } else {
        fn += counts_[c][p];
        fp += counts_[c][p];
      }
    }
  }
  const double precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
  const double recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
  return precision + recall == 0.0 ? 0.0 : 2.0 * precision * recall / (precision + recall);
}

ClassScores Confusion::class_scores(graph::LabelClass cls) const {
  const auto c = static_cast<std::size_t>(cls);
  std::size_t tp = counts_[c][c], predicted = 0, support = 0;
  for (std::size_t k = 0; k < graph::kClassCount; ++k) {
    predicted += counts_[k][c];
    support += counts_[c][k];
  }
  ClassScores s;
  s.support = support;
  s.precision = predicted ? static_cast<double>(tp) / static_cast<double>(predicted) : 0.0;
  s.recall = support ? static_cast<double>(tp) / static_cast<double>(support) : 0.0;
  s.f1 = s.precision + s.recall > 0.0 ? 2.0 * s.precision * s.recall / (s.precision + s.recall) : 0.0;
  return s;
}

double micro_f1(std::span<const int> predictions, std::span<const int> labels, const std::vector<bool>& explicit_flags) {
  Confusion c;
  c.add_nodes(predictions, labels, explicit_flags);
  return c.micro_f1();
}

double combine_batch_scores(std::span<const Confusion> batches, F1Mode mode) {
  if (mode == F1Mode::test) {
    Confusion pooled;
    for (const auto& b : batches) pooled.merge(b);
    return pooled.micro_f1();
  }
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& b : batches) {
    if (b.total() == 0) continue;
    sum += b.micro_f1();
    ++n;
  }
  if (n == 0) throw DataError("F1 is undefined without evaluation nodes");
  return sum / static_cast<double>(n);
}

}  // namespace typegraph::training
