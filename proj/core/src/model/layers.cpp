#include "typegraph/model/layers.hpp"

namespace typegraph::model {

namespace ops = numerics;

Var Binder::operator()(Parameter& p) {
  auto it = bound_.find(&p);
  if (it != bound_.end()) return it->second;
  Var v = tape_.parameter(p);
  bound_.emplace(&p, v);
  return v;
}

Linear Linear::create(ParameterStore& store, const std::string& name, std::size_t in, std::size_t out, Rng& rng,
                      bool with_bias) {
  Linear l;
  l.weight = &store.add(name + ".weight", numerics::glorot_uniform(in, out, rng));
  if (with_bias) l.bias = &store.add(name + ".bias", Tensor::matrix(1, out, 0.0));
  return l;
}

Var Linear::apply(Binder& bind, Var x) const {
  Var y = ops::matmul(x, bind(*weight));
  return bias ? ops::add_row(y, bind(*bias)) : y;
}

FeedForwardBlock FeedForwardBlock::create(ParameterStore& store, const std::string& name, std::size_t width,
                                          Rng& rng) {
  FeedForwardBlock b;
  b.gamma = &store.add(name + ".bn.gamma", Tensor::matrix(1, width, 1.0));
  b.beta = &store.add(name + ".bn.beta", Tensor::matrix(1, width, 0.0));
  b.running_mean = &store.add(name + ".bn.running_mean", Tensor::matrix(1, width, 0.0), false);
  b.running_var = &store.add(name + ".bn.running_var", Tensor::matrix(1, width, 1.0), false);
  b.linear = Linear::create(store, name + ".linear", width, width, rng);
  return b;
}

Var FeedForwardBlock::apply(Binder& bind, Var x, Mode mode, const Tensor& dropout_mask) const {
  ops::BatchNormParams bn{bind(*gamma), bind(*beta), running_mean, running_var};
  Var y = ops::batchnorm(x, bn, mode);
  y = linear.apply(bind, y);
  y = apply_mask(y, dropout_mask);
  return ops::relu(y);
}

GruParams GruParams::create(ParameterStore& store, const std::string& name, std::size_t input, std::size_t hidden,
                            Rng& rng) {
  GruParams g;
  g.w_input = &store.add(name + ".w_input", numerics::glorot_uniform(input, 3 * hidden, rng));
  g.w_hidden = &store.add(name + ".w_hidden", numerics::glorot_uniform(hidden, 3 * hidden, rng));
  g.b_input = &store.add(name + ".b_input", Tensor::matrix(1, 3 * hidden, 0.0));
  g.b_hidden = &store.add(name + ".b_hidden", Tensor::matrix(1, 3 * hidden, 0.0));
  return g;
}

numerics::GruWeights GruParams::bind(Binder& b) const {
  return {b(*w_input), b(*w_hidden), b(*b_input), b(*b_hidden)};
}

Tensor maybe_dropout_mask(std::size_t rows, std::size_t cols, double rate, Mode mode, Rng& rng) {
  if (mode != Mode::train || rate <= 0.0) return Tensor();
  return ops::dropout_mask(rows, cols, rate, rng);
}

Var apply_mask(Var x, const Tensor& mask) { return mask.empty() ? x : ops::dropout(x, mask); }

}  // namespace typegraph::model
