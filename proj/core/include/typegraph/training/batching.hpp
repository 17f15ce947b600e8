#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "typegraph/graph/batch.hpp"
#include "typegraph/numerics/rng.hpp"

namespace typegraph::training {

struct BatchLimits {
  std::size_t max_graphs = 50;
  std::size_t max_nodes = 20000;
};

/// Shuffles `indices` and fills batches greedily, closing a batch when the
/// next graph would exceed either limit. A graph larger than max_nodes gets
/// a batch of its own. Every index appears exactly once.
std::vector<std::vector<std::size_t>> plan_batches(std::span<const graph::ProgramGraph> graphs,
                                                   std::span<const std::size_t> indices, numerics::Rng& rng,
                                                   const BatchLimits& limits = {});

/// Same packing without shuffling (evaluation).
std::vector<std::vector<std::size_t>> plan_batches_in_order(std::span<const graph::ProgramGraph> graphs,
                                                            std::span<const std::size_t> indices,
                                                            const BatchLimits& limits = {});

std::vector<graph::Batch> make_batches(std::span<const graph::ProgramGraph> graphs,
                                       std::span<const std::size_t> indices, numerics::Rng& rng,
                                       const BatchLimits& limits = {});

}  // namespace typegraph::training
