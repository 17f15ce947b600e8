#include "dense_oracle.hpp"

#include <cmath>

namespace typegraph::testing {

namespace {

double sigmoid(double v) { return 1.0 / (1.0 + std::exp(-v)); }

Dense add(const Dense& a, const Dense& b) {
  Dense out = a;
  for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] += b.v[i];
  return out;
}

}  // namespace

Dense adjacency(const graph::Batch& batch, std::size_t category) {
  const std::size_t n = batch.node_count;
  Dense a(n, n);
  const auto& e = batch.edges[category % graph::kEdgeCategoryCount];
  for (std::size_t k = 0; k < e.size(); ++k) {
    const auto u = static_cast<std::size_t>(category < 2 ? e.src[k] : e.dst[k]);
    const auto v = static_cast<std::size_t>(category < 2 ? e.dst[k] : e.src[k]);
    a.at(v, u) += 1.0;
  }
  return a;
}

Dense dense_linear(const Dense& x, const numerics::ParameterStore& store, const std::string& prefix) {
  Dense y = dense_mul(x, Dense(store.at(prefix + ".weight").value));
  if (const auto* b = store.find(prefix + ".bias")) {
    for (std::size_t i = 0; i < y.rows; ++i) {
      for (std::size_t j = 0; j < y.cols; ++j) y.at(i, j) += b->value.data()[j];
    }
  }
  return y;
}

Dense dense_gru(const Dense& x, const Dense& h, const numerics::ParameterStore& store, const std::string& prefix) {
  const Dense wi(store.at(prefix + ".w_input").value);
  const Dense wh(store.at(prefix + ".w_hidden").value);
  const Dense bi(store.at(prefix + ".b_input").value);
  const Dense bh(store.at(prefix + ".b_hidden").value);
  const std::size_t hs = h.cols;
  Dense out(h.rows, hs);
  for (std::size_t row = 0; row < h.rows; ++row) {
    for (std::size_t j = 0; j < hs; ++j) {
      double gi[3], gh[3];
      for (std::size_t g = 0; g < 3; ++g) {
        const std::size_t col = g * hs + j;
        gi[g] = bi.at(0, col);
        gh[g] = bh.at(0, col);
        for (std::size_t k = 0; k < x.cols; ++k) gi[g] += x.at(row, k) * wi.at(k, col);
        for (std::size_t k = 0; k < hs; ++k) gh[g] += h.at(row, k) * wh.at(k, col);
      }
      const double r = sigmoid(gi[0] + gh[0]);
      const double z = sigmoid(gi[1] + gh[1]);
      const double n = std::tanh(gi[2] + r * gh[2]);
      out.at(row, j) = (1.0 - z) * n + z * h.at(row, j);
    }
  }
  return out;
}

Dense oracle_gcn_layer(const model::TypeModel& m, const Dense& x, const graph::Batch& batch, int layer) {
  const auto& store = m.parameters();
  const std::string prefix = "gnn.gcn" + std::to_string(layer);
  Dense out = dense_linear(x, store, prefix + ".self");
  for (std::size_t c = 0; c < m.config().edge_categories(); ++c) {
    out = add(out, dense_linear(dense_mul(adjacency(batch, c), x), store, prefix + ".category" + std::to_string(c)));
  }
  for (double& v : out.v) v = std::max(0.0, v);
  return out;
}

Dense oracle_ggnn_step(const model::TypeModel& m, const Dense& x, const graph::Batch& batch, Dense* master) {
  const auto& store = m.parameters();
  const std::size_t n = batch.node_count;
  Dense message(n, x.cols);
  for (std::size_t c = 0; c < m.config().edge_categories(); ++c) {
    message = add(message,
                  dense_linear(dense_mul(adjacency(batch, c), x), store, "gnn.ggnn.category" + std::to_string(c)));
  }
  if (master) {
    // Extended graph: nodes 0..n-1 plus one master per graph at n + g.
    const std::size_t g_count = batch.graph_count();
    Dense to_master(g_count, n);
    Dense from_master(n, g_count);
    for (std::size_t v = 0; v < n; ++v) {
      const auto g = static_cast<std::size_t>(batch.node_graph[v]);
      to_master.at(g, v) = 1.0;
      from_master.at(v, g) = 1.0;
    }
    const Dense written = dense_linear(dense_mul(to_master, x), store, "gnn.master.write");
    *master = dense_gru(written, *master, store, "gnn.master.gru");
    message = add(message, dense_mul(from_master, dense_linear(*master, store, "gnn.master.read")));
  }
  return dense_gru(message, x, store, "gnn.ggnn.gru");
}

}  // namespace typegraph::testing
