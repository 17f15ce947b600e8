#include "typegraph/training/trainer.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

#include "typegraph/error.hpp"
#include "typegraph/training/optim.hpp"

namespace typegraph::training {

using model::Mode;
using numerics::Rng;
using numerics::Tape;

nlohmann::ordered_json to_json(const EpochMetrics& m, bool with_wall_time) {
  nlohmann::ordered_json j;
  j["epoch"] = m.epoch;
  j["lr"] = m.lr;
  j["train_loss"] = m.train_loss;
  j["val_f1"] = m.val_f1;
  if (with_wall_time) j["wall_ms"] = m.wall_ms;
  j["train_f1"] = m.train_f1;
  j["train_f1_with_explicit"] = m.train_f1_with_explicit;
  return j;
}

const char* status_name(TrainStatus s) noexcept {
  switch (s) {
    case TrainStatus::completed: return "completed";
    case TrainStatus::diverged: return "diverged";
    case TrainStatus::stopped: return "stopped";
  }
  return "unknown";
}

namespace {

double seconds_to_ms(std::chrono::steady_clock::duration d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

numerics::Tensor eval_log_probs(const model::TypeModel& model, const graph::Batch& batch) {
  Tape tape;
  Rng unused(0);
  return model.forward(tape, batch, Mode::eval, unused).value();
}

}  // namespace

double validation_f1(const model::TypeModel& model, std::span<const graph::ProgramGraph> graphs,
                     const std::vector<std::vector<std::size_t>>& plan) {
  std::vector<Confusion> per_batch;
  for (const auto& members : plan) {
    const graph::Batch batch = graph::make_batch(graphs, members);
    Confusion c;
    c.add_nodes(argmax_predictions(eval_log_probs(model, batch)), batch.labels, batch.explicit_flags);
    per_batch.push_back(c);
  }
  return combine_batch_scores(per_batch, F1Mode::validation);
}

TrainResult train(model::TypeModel& model, std::span<const graph::ProgramGraph> graphs,
                  std::span<const std::size_t> train_indices, std::span<const std::size_t> validation_indices,
                  const TrainConfig& config, const EpochCallback& on_epoch, std::ostream* metrics_log) {
  if (train_indices.empty()) throw DataError("no training graphs");
  if (validation_indices.empty()) throw DataError("no validation graphs");
  if (!(config.initial_lr > 0.0)) throw ConfigError("initial_lr", "must be positive");
  if (config.max_epochs < 1) throw ConfigError("max_epochs", "must be at least 1");

  Rng rng(config.seed);
  Rng plan_rng = rng.fork();
  const auto val_plan = plan_batches(graphs, validation_indices, plan_rng, config.limits);

  numerics::ParameterStore& params = model.parameters();
  Adam adam(params);
  PlateauScheduler scheduler(config.initial_lr, config.plateau_factor, config.plateau_patience,
                             config.plateau_threshold);
  numerics::ParameterStore best = params;
  TrainResult result;
  result.best_val_f1 = -1.0;

  for (int epoch = 1; epoch <= config.max_epochs; ++epoch) {
    const auto started = std::chrono::steady_clock::now();
    const double lr = scheduler.lr();
    double loss_sum = 0.0;
    std::size_t eligible = 0;
    Confusion train_plain;
    Confusion train_all;
    bool diverged = false;

    for (const auto& members : plan_batches(graphs, train_indices, rng, config.limits)) {
      const graph::Batch batch = graph::make_batch(graphs, members);
      Tape tape;
      params.zero_grad();
      numerics::Var log_probs = model.forward(tape, batch, Mode::train, rng);
      const model::LossResult loss = model::masked_loss(log_probs, batch);
      const double value = loss.value.value()[0];
      if (!std::isfinite(value)) {
        result.message = "non-finite loss at epoch " + std::to_string(epoch);
        diverged = true;
        break;
      }
      const std::vector<int> predictions = argmax_predictions(log_probs.value());
      train_plain.add_nodes(predictions, batch.labels, batch.explicit_flags);
      train_all.add_nodes(predictions, batch.labels, batch.explicit_flags, true);
      if (loss.no_eligible_nodes) continue;
      tape.backward(loss.value);
      try {
        adam.step(lr);
      } catch (const NumericError& e) {
        result.message = std::string(e.what()) + " at epoch " + std::to_string(epoch);
        diverged = true;
        break;
      }
      loss_sum += value * static_cast<double>(loss.eligible_nodes);
      eligible += loss.eligible_nodes;
    }
    if (diverged) {
      result.status = TrainStatus::diverged;
      break;
    }

    EpochMetrics m;
    m.epoch = epoch;
    m.lr = lr;
    m.train_loss = eligible ? loss_sum / static_cast<double>(eligible) : 0.0;
    try {
      m.val_f1 = validation_f1(model, graphs, val_plan);
    } catch (const DataError&) {
      m.val_f1 = 0.0;
    }
    m.train_f1 = train_plain.total() ? train_plain.micro_f1() : 0.0;
    m.train_f1_with_explicit = train_all.total() ? train_all.micro_f1() : 0.0;
    m.wall_ms = seconds_to_ms(std::chrono::steady_clock::now() - started);
    scheduler.observe(m.val_f1);

    if (m.val_f1 > result.best_val_f1) {
      result.best_val_f1 = m.val_f1;
      result.best_epoch = epoch;
      best.copy_values_from(params);
    }
    result.history.push_back(m);
    if (metrics_log) *metrics_log << to_json(m, config.log_wall_time).dump() << '\n';

    if (on_epoch && !on_epoch(m)) {
      result.status = TrainStatus::stopped;
      break;
    }
    if (config.target_train_f1 > 0.0 && m.train_f1 >= config.target_train_f1) break;
  }
  if (result.best_epoch > 0) params.copy_values_from(best);
  if (result.best_val_f1 < 0.0) result.best_val_f1 = 0.0;
  return result;
}

EvaluationReport evaluate(const model::TypeModel& model, std::span<const graph::ProgramGraph> graphs,
                          std::span<const std::size_t> indices, const BatchLimits& limits) {
  EvaluationReport report;
  Confusion pooled;
  for (const auto& members : plan_batches_in_order(graphs, indices, limits)) {
    const graph::Batch batch = graph::make_batch(graphs, members);
    pooled.add_nodes(argmax_predictions(eval_log_probs(model, batch)), batch.labels, batch.explicit_flags);
    report.total_nodes += batch.node_count;
    for (std::size_t i = 0; i < batch.node_count; ++i) {
      if (batch.labels[i] == static_cast<int>(graph::LabelClass::unknown)) continue;
      ++report.labeled_nodes;
      if (batch.explicit_flags[i]) ++report.explicit_nodes;
    }
  }
  report.evaluated_nodes = pooled.total();
  report.micro_f1 = pooled.micro_f1();
  for (std::size_t c = 0; c < graph::kClassCount; ++c) {
    report.classes[c] = pooled.class_scores(static_cast<graph::LabelClass>(c));
  }
  return report;
}

numerics::Tensor predict_probabilities(const model::TypeModel& model, const graph::ProgramGraph& graph) {
  numerics::Tensor p = eval_log_probs(model, graph::make_batch(graph));
  for (double& v : p.data()) v = std::exp(v);
  return p;
}

}  // namespace typegraph::training
