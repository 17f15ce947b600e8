#include "typegraph/training/batching.hpp"

namespace typegraph::training {

std::vector<std::vector<std::size_t>> plan_batches_in_order(std::span<const graph::ProgramGraph> graphs,
                                                            std::span<const std::size_t> indices,
                                                            const BatchLimits& limits) {
  std::vector<std::vector<std::size_t>> plan;
  std::vector<std::size_t> current;
  std::size_t nodes = 0;
  for (std::size_t i : indices) {
    const std::size_t n = graphs[i].nodes.size();
    if (!current.empty() && (current.size() + 1 > limits.max_graphs || nodes + n > limits.max_nodes)) {
      plan.push_back(std::move(current));
      current.clear();
      nodes = 0;
    }
    current.push_back(i);
    nodes += n;
  }
  if (!current.empty()) plan.push_back(std::move(current));
  return plan;
}

std::vector<std::vector<std::size_t>> plan_batches(std::span<const graph::ProgramGraph> graphs,
                                                   std::span<const std::size_t> indices, numerics::Rng& rng,
                                                   const BatchLimits& limits) {
  std::vector<std::size_t> order(indices.begin(), indices.end());
  rng.shuffle(std::span<std::size_t>(order));
  return plan_batches_in_order(graphs, order, limits);
}

std::vector<graph::Batch> make_batches(std::span<const graph::ProgramGraph> graphs,
                                       std::span<const std::size_t> indices, numerics::Rng& rng,
                                       const BatchLimits& limits) {
  std::vector<graph::Batch> batches;
  for (const auto& members : plan_batches(graphs, indices, rng, limits)) {
    batches.push_back(graph::make_batch(graphs, members));
  }
  return batches;
}

}  // namespace typegraph::training
