#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>

#include "typegraph/numerics/autodiff.hpp"
#include "typegraph/numerics/ops.hpp"
#include "typegraph/numerics/parameters.hpp"
#include "typegraph/numerics/rng.hpp"

namespace typegraph::model {

using numerics::Mode;
using numerics::Parameter;
using numerics::ParameterStore;
using numerics::Rng;
using numerics::Tape;
using numerics::Tensor;
using numerics::Var;

/// Puts each parameter on a tape once per forward pass, so tied weights share a leaf.
class Binder {
 public:
  explicit Binder(Tape& tape) : tape_(tape) {}
  Tape& tape() const noexcept { return tape_; }
  Var operator()(Parameter& p);

 private:
  Tape& tape_;
  std::unordered_map<Parameter*, Var> bound_;
};

/// y = x W (+ b). W is [in, out].
struct Linear {
  Parameter* weight = nullptr;
  Parameter* bias = nullptr;

  static Linear create(ParameterStore& store, const std::string& name, std::size_t in, std::size_t out, Rng& rng,
                       bool with_bias = true);
  Var apply(Binder& bind, Var x) const;
};

/// batch-norm -> linear -> dropout -> relu, H -> H.
struct FeedForwardBlock {
  Parameter* gamma = nullptr;
  Parameter* beta = nullptr;
  Parameter* running_mean = nullptr;
  Parameter* running_var = nullptr;
  Linear linear;

  static FeedForwardBlock create(ParameterStore& store, const std::string& name, std::size_t width, Rng& rng);
  /// `dropout_mask` is the precomputed mask (empty tensor = no dropout).
  Var apply(Binder& bind, Var x, Mode mode, const Tensor& dropout_mask) const;
};

/// Gate order: reset, update, candidate.
struct GruParams {
  Parameter* w_input = nullptr;
  Parameter* w_hidden = nullptr;
  Parameter* b_input = nullptr;
  Parameter* b_hidden = nullptr;

  static GruParams create(ParameterStore& store, const std::string& name, std::size_t input, std::size_t hidden,
                          Rng& rng);
  numerics::GruWeights bind(Binder& bind) const;
};

/// Mask for `rows x cols` in train mode at `rate` > 0, else an empty tensor.
Tensor maybe_dropout_mask(std::size_t rows, std::size_t cols, double rate, Mode mode, Rng& rng);

/// x itself when `mask` is empty, else x * mask.
Var apply_mask(Var x, const Tensor& mask);

}  // namespace typegraph::model
