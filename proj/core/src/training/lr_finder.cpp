#include "typegraph/training/lr_finder.hpp"

#include <cmath>
#include <ostream>

#include "typegraph/error.hpp"
#include "typegraph/training/optim.hpp"
#include "typegraph/util/format.hpp"

namespace typegraph::training {

LrFinderResult lr_finder(model::TypeModel& model, std::span<const graph::ProgramGraph> graphs,
                         std::span<const std::size_t> train_indices, const LrFinderConfig& config) {
  if (!(config.lr_min > 0.0 && config.lr_min < config.lr_max)) {
    throw ConfigError("lr_min", "need 0 < lr_min < lr_max");
  }
  if (config.epochs < 1) throw ConfigError("epochs", "must be at least 1");
  if (train_indices.empty()) throw DataError("no training graphs");

  numerics::Rng rng(config.seed);
  std::vector<std::vector<std::vector<std::size_t>>> plans;
  LrFinderResult result;
  std::size_t total = 0;
  for (int e = 0; e < config.epochs; ++e) {
    plans.push_back(plan_batches(graphs, train_indices, rng, config.limits));
    result.batches_per_epoch.push_back(plans.back().size());
    total += plans.back().size();
  }
  const double ratio = config.lr_max / config.lr_min;
  for (std::size_t i = 0; i < total; ++i) {
    const double t = total > 1 ? static_cast<double>(i) / static_cast<double>(total - 1) : 0.0;
    result.planned_lrs.push_back(config.lr_min * std::pow(ratio, t));
  }

  numerics::ParameterStore& params = model.parameters();
  const numerics::ParameterStore original = params;
  Adam adam(params);
  std::size_t step = 0;
  for (int e = 0; e < config.epochs && !result.diverged; ++e) {
    for (const auto& members : plans[static_cast<std::size_t>(e)]) {
      const graph::Batch batch = graph::make_batch(graphs, members);
      const double lr = result.planned_lrs[step];
      numerics::Tape tape;
      params.zero_grad();
      const model::LossResult loss =
          model::masked_loss(model.forward(tape, batch, model::Mode::train, rng), batch);
      const double value = loss.value.value()[0];
      result.points.push_back({step, e + 1, lr, value});
      ++step;
      if (!std::isfinite(value)) {
        result.diverged = true;
        break;
      }
      if (loss.no_eligible_nodes) continue;
      tape.backward(loss.value);
      try {
        adam.step(lr);
      } catch (const NumericError&) {
        result.diverged = true;
        break;
      }
    }
  }
  params.copy_values_from(original);
  return result;
}

void write_lr_curve_csv(std::ostream& out, const LrFinderResult& result) {
  out << "step,epoch,lr,loss\n";
  for (const auto& p : result.points) {
    out << p.step << ',' << p.epoch << ',' << util::format_double(p.lr) << ',' << util::format_double(p.loss)
        << '\n';
  }
}

}  // namespace typegraph::training
