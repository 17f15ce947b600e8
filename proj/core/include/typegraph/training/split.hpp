#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "typegraph/graph/program_graph.hpp"

namespace typegraph::training {

struct Split {
  std::vector<std::size_t> train;
  std::vector<std::size_t> validation;
  std::vector<std::string> train_repositories;
  std::vector<std::string> validation_repositories;
};

/// Shuffles the distinct repositories with `seed` and puts the first
/// round(fraction * n) of them (clamped to [1, n-1]) on the training side.
/// Graph indices on each side are ascending. Throws DataError for < 2 repositories.
Split split_by_repository(std::span<const graph::ProgramGraph> graphs, double fraction = 0.8, std::uint64_t seed = 0);

}  // namespace typegraph::training
