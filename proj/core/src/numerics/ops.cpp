#include "typegraph/numerics/ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "typegraph/error.hpp"

namespace typegraph::numerics {
namespace {

Tape& same_tape(Var a, Var b, const char* op) {
  if (&a.tape() != &b.tape()) throw UsageError(std::string(op) + ": operands on different tapes");
  return a.tape();
}

void shape_error(const char* op, const Tensor& a, const Tensor& b) {
  throw ShapeError(std::string(op) + ": shape mismatch " + to_string(a.shape()) + " vs " + to_string(b.shape()));
}

template <typename F>
Tensor map(const Tensor& a, F f) {
  Tensor out(a.shape());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f(a[i]);
  return out;
}

}  // namespace

Var matmul(Var a, Var b) {
  Tape& tape = same_tape(a, b, "matmul");
  return tape.record(numerics::matmul(a.value(), b.value()), {a, b},
                     [ia = a.id(), ib = b.id()](const Tape& t, const Tensor& g, std::span<Tensor* const> grads) {
                       if (grads[0]) grads[0]->accumulate(matmul_nt(g, t.value(ib)));
                       if (grads[1]) grads[1]->accumulate(matmul_tn(t.value(ia), g));
                     });
}

Var add(Var a, Var b) {
  Tape& tape = same_tape(a, b, "add");
  if (a.shape() != b.shape()) shape_error("add", a.value(), b.value());
  Tensor out = a.value();
  out.accumulate(b.value());
  return tape.record(std::move(out), {a, b}, [](const Tape&, const Tensor& g, std::span<Tensor* const> grads) {
    for (Tensor* gr : grads)
      if (gr) gr->accumulate(g);
  });
}

Var add_row(Var a, Var row) {
  Tape& tape = same_tape(a, row, "add_row");
  const Tensor& av = a.value();
  const Tensor& rv = row.value();
  if (rv.rows() != 1 || rv.cols() != av.cols()) shape_error("add_row", av, rv);
  Tensor out = av;
  const std::size_t n = av.rows(), m = av.cols();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) += rv[j];
  return tape.record(std::move(out), {a, row}, [](const Tape&, const Tensor& g, std::span<Tensor* const> grads) {
    if (grads[0]) grads[0]->accumulate(g);
    if (grads[1]) {
      Tensor& gr = *grads[1];
      const std::size_t n = g.rows(), m = g.cols();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) gr[j] += g(i, j);
    }
  });
}

Var sub(Var a, Var b) {
  Tape& tape = same_tape(a, b, "sub");
  if (a.shape() != b.shape()) shape_error("sub", a.value(), b.value());
  Tensor out = a.value();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.value()[i];
  return tape.record(std::move(out), {a, b}, [](const Tape&, const Tensor& g, std::span<Tensor* const> grads) {
    if (grads[0]) grads[0]->accumulate(g);
    if (grads[1])
      for (std::size_t i = 0; i < g.size(); ++i) (*grads[1])[i] -= g[i];
  });
}

Var mul(Var a, Var b) {
  Tape& tape = same_tape(a, b, "mul");
  if (a.shape() != b.shape()) shape_error("mul", a.value(), b.value());
  Tensor out = a.value();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= b.value()[i];
  return tape.record(std::move(out), {a, b},
                     [ia = a.id(), ib = b.id()](const Tape& t, const Tensor& g, std::span<Tensor* const> grads) {
                       const Tensor& av = t.value(ia);
                       const Tensor& bv = t.value(ib);
                       if (grads[0])
                         for (std::size_t i = 0; i < g.size(); ++i) (*grads[0])[i] += g[i] * bv[i];
                       if (grads[1])
                         for (std::size_t i = 0; i < g.size(); ++i) (*grads[1])[i] += g[i] * av[i];
                     });
}

Var scale(Var a, double factor) {
  return a.tape().record(map(a.value(), [factor](double v) { return v * factor; }), {a},
                         [factor](const Tape&, const Tensor& g, std::span<Tensor* const> grads) {
                           for (std::size_t i = 0; i < g.size(); ++i) (*grads[0])[i] += factor * g[i];
                         });
}

Var one_minus(Var a) {
  return a.tape().record(map(a.value(), [](double v) { return 1.0 - v; }), {a},
                         [](const Tape&, const Tensor& g, std::span<Tensor* const> grads) {
                           for (std::size_t i = 0; i < g.size(); ++i) (*grads[0])[i] -= g[i];
                         });
}

Var mul_const(Var a, const Tensor& mask) {
  if (a.shape() != mask.shape()) shape_error("mul_const", a.value(), mask);
  Tensor out = a.value();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= mask[i];
  return a.tape().record(std::move(out), {a}, [mask](const Tape&, const Tensor& g, std::span<Tensor* const> grads) {
    for (std::size_t i = 0; i < g.size(); ++i) (*grads[0])[i] += g[i] * mask[i];
  });
}

Var scale_rows(Var a, std::span<const double> weights) {
  const Tensor& av = a.value();
  if (weights.size() != av.rows()) {
    throw ShapeError("scale_rows: " + std::to_string(weights.size()) + " weights for shape " + to_string(av.shape()));
  }
  std::vector<double> w(weights.begin(), weights.end());
  Tensor out = av;
  const std::size_t m = av.cols();
  for (std::size_t i = 0; i < av.rows(); ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) *= w[i];
  return a.tape().record(std::move(out), {a},
                         [w = std::move(w)](const Tape&, const Tensor& g, std::span<Tensor* const> grads) {
                           const std::size_t m = g.cols();
                           for (std::size_t i = 0; i < g.rows(); ++i)
                             for (std::size_t j = 0; j < m; ++j) (*grads[0])(i, j) += g(i, j) * w[i];
                         });
}

Var relu(Var a) {
  return a.tape().record(map(a.value(), [](double v) { return v > 0.0 ? v : 0.0; }), {a},
                         [ia = a.id()](const Tape& t, const Tensor& g, std::span<Tensor* const> grads) {
                           const Tensor& x = t.value(ia);
                           for (std::size_t i = 0; i < g.size(); ++i)
                             if (x[i] > 0.0) (*grads[0])[i] += g[i];
                         });
}

Var sigmoid(Var a) {
  Tensor out = map(a.value(), [](double v) {
    if (v >= 0.0) return 1.0 / (1.0 + std::exp(-v));
    const double e = std::exp(v);
    return e / (1.0 + e);
  });
  Tape& tape = a.tape();
  const std::size_t self = tape.size();
  return tape.record(std::move(out), {a}, [self](const Tape& t, const Tensor& g, std::span<Tensor* const> grads) {
    const Tensor& y = t.value(self);
    for (std::size_t i = 0; i < g.size(); ++i) (*grads[0])[i] += g[i] * y[i] * (1.0 - y[i]);
  });
}

Var tanh(Var a) {
  Tensor out = map(a.value(), [](double v) { return std::tanh(v); });
  Tape& tape = a.tape();
  const std::size_t self = tape.size();
  return tape.record(std::move(out), {a}, [self](const Tape& t, const Tensor& g, std::span<Tensor* const> grads) {
    const Tensor& y = t.value(self);
    for (std::size_t i = 0; i < g.size(); ++i) (*grads[0])[i] += g[i] * (1.0 - y[i] * y[i]);
  });
}

Var concat_cols(std::span<const Var> parts) {
  if (parts.empty()) throw ShapeError("concat_cols: no inputs");
  Tape& tape = parts.front().tape();
  const std::size_t n = parts.front().rows();
  std::vector<std::size_t> widths;
  std::size_t total = 0;
  for (const Var& p : parts) {
    if (&p.tape() != &tape) throw UsageError("concat_cols: operands on different tapes");
    if (p.rows() != n) shape_error("concat_cols", parts.front().value(), p.value());
    widths.push_back(p.cols());
    total += p.cols();
  }
  Tensor out = Tensor::matrix(n, total);
  std::size_t offset = 0;
  for (const Var& p : parts) {
    const Tensor& v = p.value();
    for (std::size_t i = 0; i < n; ++i) std::copy(v.row(i).begin(), v.row(i).end(), out.row(i).begin() + offset);
    offset += v.cols();
  }
  return tape.record(std::move(out), std::vector<Var>(parts.begin(), parts.end()),
                     [widths](const Tape&, const Tensor& g, std::span<Tensor* const> grads) {
                       std::size_t offset = 0;
                       for (std::size_t k = 0; k < widths.size(); ++k) {
                         if (grads[k]) {
                           Tensor& gr = *grads[k];
                           for (std::size_t i = 0; i < g.rows(); ++i)
                             for (std::size_t j = 0; j < widths[k]; ++j) gr(i, j) += g(i, offset + j);
                         }
                         offset += widths[k];
                       }
                     });
}

Var slice_cols(Var a, std::size_t begin, std::size_t end) {
  const Tensor& av = a.value();
  if (begin > end || end > av.cols()) {
    throw ShapeError("slice_cols: [" + std::to_string(begin) + ", " + std::to_string(end) + ") out of range for " +
                     to_string(av.shape()));
  }
  const std::size_t n = av.rows(), w = end - begin;
  Tensor out = Tensor::matrix(n, w);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < w; ++j) out(i, j) = av(i, begin + j);
  return a.tape().record(std::move(out), {a}, [begin, w](const Tape&, const Tensor& g, std::span<Tensor* const> grads) {
    Tensor& gr = *grads[0];
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < w; ++j) gr(i, begin + j) += g(i, j);
  });
}

Var log_softmax(Var a) {
  const Tensor& x = a.value();
  const std::size_t n = x.rows(), m = x.cols();
  Tensor out = Tensor::matrix(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    double mx = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < m; ++j) mx = std::max(mx, x(i, j));
    double s = 0.0;
    for (std::size_t j = 0; j < m; ++j) s += std::exp(x(i, j) - mx);
    const double lse = mx + std::log(s);
    for (std::size_t j = 0; j < m; ++j) out(i, j) = x(i, j) - lse;
  }
  Tape& tape = a.tape();
  const std::size_t self = tape.size();
  return tape.record(std::move(out), {a}, [self](const Tape& t, const Tensor& g, std::span<Tensor* const> grads) {
    const Tensor& y = t.value(self);
    Tensor& gr = *grads[0];
    for (std::size_t i = 0; i < g.rows(); ++i) {
      double gs = 0.0;
      for (std::size_t j = 0; j < g.cols(); ++j) gs += g(i, j);
      for (std::size_t j = 0; j < g.cols(); ++j) gr(i, j) += g(i, j) - std::exp(y(i, j)) * gs;
    }
  });
}

Var gather_rows(Var table, std::span<const int> indices) {
  const Tensor& tv = table.value();
  const std::size_t m = tv.cols();
  std::vector<int> idx(indices.begin(), indices.end());
  Tensor out = Tensor::matrix(idx.size(), m);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0) continue;
    if (static_cast<std::size_t>(idx[i]) >= tv.rows()) {
      throw ShapeError("gather_rows: index " + std::to_string(idx[i]) + " out of range for " + to_string(tv.shape()));
    }
    std::copy(tv.row(idx[i]).begin(), tv.row(idx[i]).end(), out.row(i).begin());
  }
  return table.tape().record(std::move(out), {table},
                             [idx = std::move(idx)](const Tape&, const Tensor& g, std::span<Tensor* const> grads) {
                               Tensor& gr = *grads[0];
                               const std::size_t m = g.cols();
                               for (std::size_t i = 0; i < idx.size(); ++i) {
                                 if (idx[i] < 0) continue;
                                 for (std::size_t j = 0; j < m; ++j) gr(idx[i], j) += g(i, j);
                               }
                             });
}

Var embedding_lookup(Var table, std::span<const int> indices) { return gather_rows(table, indices); }

Var embedding_bag(Var table, const std::vector<std::vector<int>>& bags) {
  const Tensor& tv = table.value();
  const std::size_t m = tv.cols();
  Tensor out = Tensor::matrix(bags.size(), m);
  for (std::size_t i = 0; i < bags.size(); ++i) {
    for (int k : bags[i]) {
      if (k < 0 || static_cast<std::size_t>(k) >= tv.rows()) {
        throw ShapeError("embedding_bag: index " + std::to_string(k) + " out of range for " + to_string(tv.shape()));
      }
      for (std::size_t j = 0; j < m; ++j) out(i, j) += tv(k, j);
    }
  }
  return table.tape().record(std::move(out), {table}, [bags](const Tape&, const Tensor& g, std::span<Tensor* const> grads) {
    Tensor& gr = *grads[0];
    const std::size_t m = g.cols();
    for (std::size_t i = 0; i < bags.size(); ++i)
      for (int k : bags[i])
        for (std::size_t j = 0; j < m; ++j) gr(k, j) += g(i, j);
  });
}

Var propagate(Var x, std::span<const int> src, std::span<const int> dst, std::size_t out_rows) {
  if (src.size() != dst.size()) throw ShapeError("propagate: src/dst length mismatch");
  const Tensor& xv = x.value();
  const std::size_t m = xv.cols();
  std::vector<int> s(src.begin(), src.end()), d(dst.begin(), dst.end());
  Tensor out = Tensor::matrix(out_rows, m);
  for (std::size_t e = 0; e < s.size(); ++e) {
    if (s[e] < 0 || static_cast<std::size_t>(s[e]) >= xv.rows() || d[e] < 0 ||
        static_cast<std::size_t>(d[e]) >= out_rows) {
      throw ShapeError("propagate: edge " + std::to_string(e) + " endpoint out of range");
    }
    const double* xs = xv.data().data() + static_cast<std::size_t>(s[e]) * m;
    double* od = out.data().data() + static_cast<std::size_t>(d[e]) * m;
    for (std::size_t j = 0; j < m; ++j) od[j] += xs[j];
  }
  return x.tape().record(std::move(out), {x},
                         [s = std::move(s), d = std::move(d)](const Tape&, const Tensor& g, std::span<Tensor* const> grads) {
                           Tensor& gr = *grads[0];
                           const std::size_t m = g.cols();
                           for (std::size_t e = 0; e < s.size(); ++e) {
                             const double* gd = g.data().data() + static_cast<std::size_t>(d[e]) * m;
                             double* gs = gr.data().data() + static_cast<std::size_t>(s[e]) * m;
                             for (std::size_t j = 0; j < m; ++j) gs[j] += gd[j];
                           }
                         });
}

Var sum(Var a) {
  double s = 0.0;
  for (double v : a.value().data()) s += v;
  return a.tape().record(Tensor::scalar(s), {a}, [](const Tape&, const Tensor& g, std::span<Tensor* const> grads) {
    for (double& v : grads[0]->data()) v += g[0];
  });
}

Var masked_nll(Var log_probs, std::span<const int> targets, std::span<const double> weights) {
  const Tensor& lp = log_probs.value();
  if (targets.size() != lp.rows() || weights.size() != lp.rows()) {
    throw ShapeError("masked_nll: " + std::to_string(targets.size()) + " targets for shape " + to_string(lp.shape()));
  }
  std::vector<int> tg(targets.begin(), targets.end());
  std::vector<double> w(weights.begin(), weights.end());
  std::size_t count = 0;
  double total = 0.0;
  for (std::size_t i = 0; i < tg.size(); ++i) {
    if (w[i] == 0.0) continue;
    if (tg[i] < 0 || static_cast<std::size_t>(tg[i]) >= lp.cols()) {
      throw ShapeError("masked_nll: target " + std::to_string(tg[i]) + " out of range");
    }
    ++count;
    total -= w[i] * lp(i, tg[i]);
  }
  if (count == 0) return log_probs.tape().constant(Tensor::scalar(0.0));
  const double inv = 1.0 / static_cast<double>(count);
  return log_probs.tape().record(
      Tensor::scalar(total * inv), {log_probs},
      [tg = std::move(tg), w = std::move(w), inv](const Tape&, const Tensor& g, std::span<Tensor* const> grads) {
        Tensor& gr = *grads[0];
        for (std::size_t i = 0; i < tg.size(); ++i)
          if (w[i] != 0.0) gr(i, tg[i]) -= g[0] * w[i] * inv;
      });
}

Var batchnorm(Var x, const BatchNormParams& p, Mode mode) {
  const Tensor& xv = x.value();
  const Tensor& gamma = p.gamma.value();
  const Tensor& beta = p.beta.value();
  const std::size_t n = xv.rows(), m = xv.cols();
  if (gamma.rows() != 1 || gamma.cols() != m) shape_error("batchnorm", xv, gamma);
  if (beta.shape() != gamma.shape()) shape_error("batchnorm", xv, beta);
  Tape& tape = x.tape();
  if (&p.gamma.tape() != &tape || &p.beta.tape() != &tape) throw UsageError("batchnorm: operands on different tapes");

  Tensor xhat = Tensor::matrix(n, m);
  Tensor inv_std = Tensor::matrix(1, m);
  if (mode == Mode::train && n > 0) {
    Tensor mean = Tensor::matrix(1, m), var = Tensor::matrix(1, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) mean[j] += xv(i, j);
    for (std::size_t j = 0; j < m; ++j) mean[j] /= static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const double d = xv(i, j) - mean[j];
        var[j] += d * d;
      }
    for (std::size_t j = 0; j < m; ++j) {
      var[j] /= static_cast<double>(n);
      inv_std[j] = 1.0 / std::sqrt(var[j] + p.eps);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) xhat(i, j) = (xv(i, j) - mean[j]) * inv_std[j];
    if (p.running_mean && p.running_var) {
      const double unbias = n > 1 ? static_cast<double>(n) / static_cast<double>(n - 1) : 1.0;
      for (std::size_t j = 0; j < m; ++j) {
        p.running_mean->value[j] = (1.0 - p.momentum) * p.running_mean->value[j] + p.momentum * mean[j];
        p.running_var->value[j] = (1.0 - p.momentum) * p.running_var->value[j] + p.momentum * var[j] * unbias;
      }
    }
  } else {
    if (!p.running_mean || !p.running_var) throw UsageError("batchnorm: eval mode needs running statistics");
    const Tensor& rm = p.running_mean->value;
    const Tensor& rv = p.running_var->value;
    for (std::size_t j = 0; j < m; ++j) inv_std[j] = 1.0 / std::sqrt(rv[j] + p.eps);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) xhat(i, j) = (xv(i, j) - rm[j]) * inv_std[j];
  }

  Tensor out = Tensor::matrix(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = gamma[j] * xhat(i, j) + beta[j];

  const bool batch_stats = mode == Mode::train;
  return tape.record(
      std::move(out), {x, p.gamma, p.beta},
      [xhat = std::move(xhat), inv_std = std::move(inv_std), ig = p.gamma.id(), batch_stats](
          const Tape& t, const Tensor& g, std::span<Tensor* const> grads) {
        const Tensor& gamma = t.value(ig);
        const std::size_t n = g.rows(), m = g.cols();
        if (grads[1] || grads[2]) {
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) {
              if (grads[1]) (*grads[1])[j] += g(i, j) * xhat(i, j);
              if (grads[2]) (*grads[2])[j] += g(i, j);
            }
        }
        if (!grads[0]) return;
        Tensor& gx = *grads[0];
        if (!batch_stats) {
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) gx(i, j) += g(i, j) * gamma[j] * inv_std[j];
          return;
        }
        const double dn = static_cast<double>(n);
        for (std::size_t j = 0; j < m; ++j) {
          double sum_d = 0.0, sum_dx = 0.0;
          for (std::size_t i = 0; i < n; ++i) {
            const double d = g(i, j) * gamma[j];
            sum_d += d;
            sum_dx += d * xhat(i, j);
          }
          for (std::size_t i = 0; i < n; ++i) {
            const double d = g(i, j) * gamma[j];
            gx(i, j) += inv_std[j] / dn * (dn * d - sum_d - xhat(i, j) * sum_dx);
          }
        }
      });
}

Tensor dropout_mask(std::size_t rows, std::size_t cols, double rate, Rng& rng) {
  if (rate < 0.0 || rate >= 1.0) throw UsageError("dropout rate must be in [0, 1), got " + std::to_string(rate));
  Tensor mask = Tensor::matrix(rows, cols, 1.0);
  if (rate == 0.0) return mask;
  const double keep = 1.0 - rate;
  for (double& v : mask.data()) v = rng.uniform() < rate ? 0.0 : 1.0 / keep;
  return mask;
}

Var dropout(Var x, const Tensor& mask) { return mul_const(x, mask); }

Var gru_cell(Var input, Var state, const GruWeights& w) {
  const std::size_t h = state.cols();
  if (w.w_hidden.rows() != h || w.w_hidden.cols() != 3 * h) shape_error("gru_cell", state.value(), w.w_hidden.value());
  if (w.w_input.cols() != 3 * h) shape_error("gru_cell", input.value(), w.w_input.value());
  Var gi = add_row(matmul(input, w.w_input), w.b_input);
  Var gh = add_row(matmul(state, w.w_hidden), w.b_hidden);
  Var r = sigmoid(add(slice_cols(gi, 0, h), slice_cols(gh, 0, h)));
  Var z = sigmoid(add(slice_cols(gi, h, 2 * h), slice_cols(gh, h, 2 * h)));
  Var n = tanh(add(slice_cols(gi, 2 * h, 3 * h), mul(r, slice_cols(gh, 2 * h, 3 * h))));
  return add(mul(one_minus(z), n), mul(z, state));
}

}  // namespace typegraph::numerics
