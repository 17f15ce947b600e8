#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "typegraph/numerics/autodiff.hpp"
#include "typegraph/numerics/rng.hpp"

namespace typegraph::numerics {

// Differentiable primitives. All operate on rank-2 values; shape mismatches
// throw ShapeError naming both shapes.

Var matmul(Var a, Var b);
Var add(Var a, Var b);
/// a + row, broadcasting a 1 x n row over every row of a.
Var add_row(Var a, Var row);
Var sub(Var a, Var b);
/// Elementwise product.
Var mul(Var a, Var b);
Var scale(Var a, double factor);
/// 1 - a
Var one_minus(Var a);
/// Elementwise product with a constant tensor (dropout masks, membership).
Var mul_const(Var a, const Tensor& mask);
/// Multiplies row i by weights[i].
Var scale_rows(Var a, std::span<const double> weights);

Var relu(Var a);
Var sigmoid(Var a);
Var tanh(Var a);

Var concat_cols(std::span<const Var> parts);
Var slice_cols(Var a, std::size_t begin, std::size_t end);

/// Row-wise log-softmax.
Var log_softmax(Var a);

/// out[i] = table[indices[i]], or a zero row when indices[i] < 0.
Var gather_rows(Var table, std::span<const int> indices);
Var embedding_lookup(Var table, std::span<const int> indices);
/// out[i] = sum of table rows listed in bags[i].
Var embedding_bag(Var table, const std::vector<std::vector<int>>& bags);
/// out[dst[e]] += x[src[e]] over all e; out has `out_rows` rows.
Var propagate(Var x, std::span<const int> src, std::span<const int> dst, std::size_t out_rows);

/// Sum of all elements as a 1 x 1 value.
Var sum(Var a);
/// Mean over rows with weight[i] != 0 of -log_probs(i, targets[i]) * weight[i].
/// Divides by the number of weighted rows; returns a constant 0 when there are none.
Var masked_nll(Var log_probs, std::span<const int> targets, std::span<const double> weights);

enum class Mode { train, eval };

struct BatchNormParams {
  Var gamma;
  Var beta;
  Parameter* running_mean = nullptr;
  Parameter* running_var = nullptr;
  double momentum = 0.1;
  double eps = 1e-5;
};

/// Per-feature normalization over the rows of x. Train mode normalizes with
/// batch statistics and updates the running estimates; eval mode uses them.
Var batchnorm(Var x, const BatchNormParams& p, Mode mode);

/// Inverted-dropout mask: each entry is 0 with probability `rate`, else 1/(1-rate).
Tensor dropout_mask(std::size_t rows, std::size_t cols, double rate, Rng& rng);
Var dropout(Var x, const Tensor& mask);

struct GruWeights {
  Var w_input;   // in x 3H, gate order: reset, update, candidate
  Var w_hidden;  // H x 3H
  Var b_input;   // 1 x 3H
  Var b_hidden;  // 1 x 3H
};

/// r = s(x Wir + bir + h Whr + bhr), z = s(x Wiz + biz + h Whz + bhz),
/// n = tanh(x Win + bin + r * (h Whn + bhn)), h' = (1 - z) * n + z * h.
Var gru_cell(Var input, Var state, const GruWeights& w);

}  // namespace typegraph::numerics
