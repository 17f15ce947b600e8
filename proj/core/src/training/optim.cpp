#include "typegraph/training/optim.hpp"

#include <cmath>
#include <limits>

#include "typegraph/error.hpp"

namespace typegraph::training {

Adam::Adam(numerics::ParameterStore& params, AdamConfig config) : params_(params), config_(config) {
  for (const auto& p : params_) {
    m_.emplace_back(p->value.shape());
    v_.emplace_back(p->value.shape());
  }
}

void Adam::step(double lr) {
  for (const auto& p : params_) {
    if (p->trainable && !p->grad.empty() && !p->grad.all_finite()) {
      throw NumericError("non-finite gradient in parameter '" + p->name + "'");
    }
  }
  ++t_;
  const double c1 = 1.0 - std::pow(config_.beta1, static_cast<double>(t_));
  const double c2 = 1.0 - std::pow(config_.beta2, static_cast<double>(t_));
  for (std::size_t k = 0; k < params_.size(); ++k) {
    numerics::Parameter& p = params_[k];
    if (!p.trainable || p.grad.empty()) continue;
    auto value = p.value.data();
    auto grad = p.grad.data();
    auto m = m_[k].data();
    auto v = v_[k].data();
    for (std::size_t i = 0; i < value.size(); ++i) {
      const double g = grad[i];
      m[i] = config_.beta1 * m[i] + (1.0 - config_.beta1) * g;
      v[i] = config_.beta2 * v[i] + (1.0 - config_.beta2) * g * g;
      value[i] -= lr * (m[i] / c1) / (std::sqrt(v[i] / c2) + config_.eps);
    }
  }
}

PlateauScheduler::PlateauScheduler(double initial_lr, double factor, int patience, double threshold)
    : initial_lr_(initial_lr),
      factor_(factor),
      patience_(patience),
      threshold_(threshold),
      lr_(initial_lr),
      best_(-std::numeric_limits<double>::infinity()) {}

bool PlateauScheduler::observe(double score) {
  if (score > best_ + threshold_) {
    best_ = score;
    bad_epochs_ = 0;
    return false;
  }
  if (++bad_epochs_ < patience_) return false;
  bad_epochs_ = 0;
  ++reductions_;
  lr_ = initial_lr_ * std::pow(factor_, reductions_);
  return true;
}

}  // namespace typegraph::training
