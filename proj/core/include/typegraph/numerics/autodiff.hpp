#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "typegraph/numerics/parameters.hpp"
#include "typegraph/numerics/tensor.hpp"

namespace typegraph::numerics {

class Tape;

/// Handle to a value recorded on a Tape.
class Var {
 public:
  Var() = default;
  Var(Tape* tape, std::size_t id) : tape_(tape), id_(id) {}

  Tape& tape() const { return *tape_; }
  std::size_t id() const noexcept { return id_; }
  bool valid() const noexcept { return tape_ != nullptr; }

  const Tensor& value() const;
  const Shape& shape() const { return value().shape(); }
  std::size_t rows() const { return value().rows(); }
  std::size_t cols() const { return value().cols(); }

 private:
  Tape* tape_ = nullptr;
  std::size_t id_ = 0;
};

/// Receives the gradient of the op's output and adds into the input gradients.
/// `input_grads[i]` is null when input i does not need a gradient.
using BackwardFn =
    std::function<void(const Tape& tape, const Tensor& grad_out, std::span<Tensor* const> input_grads)>;

/// Linear record of a forward computation, replayed in reverse by backward().
///
/// A tape is single-use: record a forward pass, call backward() once on a
/// scalar, discard. Parameter leaves push their gradients into the owning
/// ParameterStore entries.
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  Var constant(Tensor value);
  Var parameter(Parameter& param);

  /// Records an op. `backward` may be empty when no input needs a gradient.
  Var record(Tensor value, std::vector<Var> inputs, BackwardFn backward);

  const Tensor& value(std::size_t id) const { return nodes_[id].value; }
  const Tensor& value(Var v) const { return nodes_[v.id()].value; }
  bool needs_grad(Var v) const { return nodes_[v.id()].needs_grad; }
  std::size_t size() const noexcept { return nodes_.size(); }

  /// Accumulates d(loss)/d(parameter) into every reachable Parameter::grad.
  void backward(Var loss);

  /// Gradient of the last backward() with respect to `v` (empty if unreached).
  const Tensor& grad(Var v) const { return nodes_[v.id()].grad; }

 private:
  struct Node {
    Tensor value;
    Tensor grad;
    std::vector<std::size_t> inputs;
    BackwardFn backward;
    Parameter* param = nullptr;
    bool needs_grad = false;
  };

  std::vector<Node> nodes_;
  bool consumed_ = false;
};

inline const Tensor& Var::value() const { return tape_->value(id_); }

}  // namespace typegraph::numerics
