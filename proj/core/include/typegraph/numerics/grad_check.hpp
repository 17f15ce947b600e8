#pragma once

#include <functional>
#include <string>
#include <vector>

#include "typegraph/numerics/autodiff.hpp"
#include "typegraph/numerics/parameters.hpp"

namespace typegraph::numerics {

struct ParameterGradError {
  std::string name;
  double max_relative_error = 0.0;
  double max_abs_analytic = 0.0;
};

struct GradCheckReport {
  std::vector<ParameterGradError> parameters;
  double max_relative_error = 0.0;
  std::string worst_parameter;
  bool passed = false;
};

/// Records a scalar loss on the given tape, reading parameters from the store
/// the checker was handed. Must be deterministic (freeze dropout masks).
using LossFunction = std::function<Var(Tape&)>;

/// Compares analytic gradients with central differences for every trainable
/// element. Relative error is |a - n| / max(|a|, |n|, floor); the floor keeps
/// near-zero gradients from dominating through rounding noise.
GradCheckReport grad_check(const LossFunction& loss, ParameterStore& params, double eps, double tol,
                           double floor = 1e-6);

}  // namespace typegraph::numerics
