#pragma once

#include <string>

#include "test_support.hpp"
#include "typegraph/graph/batch.hpp"
#include "typegraph/model/gnn.hpp"
#include "typegraph/numerics/parameters.hpp"

namespace typegraph::testing {

/// A[v][u] = number of category-c edges u -> v (c >= 2: reversed).
Dense adjacency(const graph::Batch& batch, std::size_t category);

/// x W + b for the store entries <prefix>.weight / <prefix>.bias (bias optional).
Dense dense_linear(const Dense& x, const numerics::ParameterStore& store, const std::string& prefix);

/// GRU cell written out gate by gate from <prefix>.{w_input,w_hidden,b_input,b_hidden}.
Dense dense_gru(const Dense& x, const Dense& h, const numerics::ParameterStore& store, const std::string& prefix);

/// relu( sum_c (A_c x) W_c + b_c + x W_self ) for GCN layer `layer`.
Dense oracle_gcn_layer(const model::TypeModel& m, const Dense& x, const graph::Batch& batch, int layer);

/// One GGNN step without dropout. With a master node, `master` [G, S] is
/// updated in place; the master of graph g is treated as an extra node with
/// an edge from and to every member.
Dense oracle_ggnn_step(const model::TypeModel& m, const Dense& x, const graph::Batch& batch, Dense* master);

}  // namespace typegraph::testing
