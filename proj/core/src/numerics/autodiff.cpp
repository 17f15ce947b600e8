#include "typegraph/numerics/autodiff.hpp"

#include "typegraph/error.hpp"

namespace typegraph::numerics {

Var Tape::constant(Tensor value) {
  Node n;
  n.value = std::move(value);
  nodes_.push_back(std::move(n));
  return Var(this, nodes_.size() - 1);
}

Var Tape::parameter(Parameter& param) {
  Node n;
  n.value = param.value;
  n.param = &param;
  n.needs_grad = param.trainable;
  nodes_.push_back(std::move(n));
  return Var(this, nodes_.size() - 1);
}

Var Tape::record(Tensor value, std::vector<Var> inputs, BackwardFn backward) {
  Node n;
  n.value = std::move(value);
  n.inputs.reserve(inputs.size());
  for (const Var& in : inputs) {
    if (&in.tape() != this) throw UsageError("op mixes values from different tapes");
    n.inputs.push_back(in.id());
    n.needs_grad = n.needs_grad || nodes_[in.id()].needs_grad;
  }
  if (n.needs_grad) {
    if (!backward) throw UsageError("op needs a gradient but has no backward rule");
    n.backward = std::move(backward);
  }
  nodes_.push_back(std::move(n));
  return Var(this, nodes_.size() - 1);
}

void Tape::backward(Var loss) {
  if (!loss.valid() || &loss.tape() != this || loss.id() >= nodes_.size()) {
    throw UsageError("backward: loss was not recorded on this tape");
  }
  if (consumed_) throw UsageError("backward: tape already consumed");
  const Tensor& lv = nodes_[loss.id()].value;
  if (lv.size() != 1) throw UsageError("backward: loss must be a scalar, got " + to_string(lv.shape()));
  consumed_ = true;

  for (auto& n : nodes_) n.grad = Tensor();
  nodes_[loss.id()].grad = Tensor(lv.shape(), 1.0);

  std::vector<Tensor*> input_grads;
  for (std::size_t i = loss.id() + 1; i-- > 0;) {
    Node& n = nodes_[i];
    if (!n.needs_grad || n.grad.empty()) continue;
    if (n.param) {
      n.param->grad.accumulate(n.grad);
      continue;
    }
    input_grads.clear();
    for (std::size_t in : n.inputs) {
      Node& src = nodes_[in];
      if (!src.needs_grad) {
        input_grads.push_back(nullptr);
        continue;
      }
      if (src.grad.empty()) src.grad = Tensor(src.value.shape(), 0.0);
      input_grads.push_back(&src.grad);
    }
    n.backward(*this, n.grad, input_grads);
  }
}

}  // namespace typegraph::numerics
