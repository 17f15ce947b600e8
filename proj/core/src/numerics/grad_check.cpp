#include "typegraph/numerics/grad_check.hpp"

#include <algorithm>
#include <cmath>

namespace typegraph::numerics {
namespace {

double evaluate(const LossFunction& loss) {
  Tape tape;
  return loss(tape).value()[0];
}

}  // namespace

GradCheckReport grad_check(const LossFunction& loss, ParameterStore& params, double eps, double tol, double floor) {
  params.zero_grad();
  {
    Tape tape;
    Var l = loss(tape);
    tape.backward(l);
  }
  // Snapshot analytic gradients; the perturbed evaluations below never run backward.
  std::vector<Tensor> analytic;
  for (auto& p : params) analytic.push_back(p->grad);

  GradCheckReport report;
  report.passed = true;
  for (std::size_t k = 0; k < params.size(); ++k) {
    Parameter& p = params[k];
    if (!p.trainable) continue;
    ParameterGradError err{p.name, 0.0, analytic[k].max_abs()};
    for (std::size_t i = 0; i < p.value.size(); ++i) {
      const double saved = p.value[i];
      p.value[i] = saved + eps;
      const double up = evaluate(loss);
      p.value[i] = saved - eps;
      const double down = evaluate(loss);
      p.value[i] = saved;
      const double numeric = (up - down) / (2.0 * eps);
      const double a = analytic[k][i];
      const double rel = std::abs(a - numeric) / std::max({std::abs(a), std::abs(numeric), floor});
      err.max_relative_error = std::max(err.max_relative_error, rel);
    }
    if (report.worst_parameter.empty() || err.max_relative_error > report.max_relative_error) {
      report.max_relative_error = err.max_relative_error;
      report.worst_parameter = p.name;
    }
    report.passed = report.passed && err.max_relative_error < tol;
    report.parameters.push_back(std::move(err));
  }
  return report;
}

}  // namespace typegraph::numerics
