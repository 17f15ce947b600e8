#include "typegraph/training/split.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

#include "typegraph/error.hpp"
#include "typegraph/numerics/rng.hpp"

namespace typegraph::training {

Split split_by_repository(std::span<const graph::ProgramGraph> graphs, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0)) throw DataError("split fraction must be in (0, 1)");
  const std::set<std::string> distinct = [&] {
    std::set<std::string> s;
    for (const auto& g : graphs) s.insert(g.repository);
    return s;
  }();
  if (distinct.size() < 2) {
    throw DataError("need at least 2 repositories to split, found " + std::to_string(distinct.size()));
  }
  std::vector<std::string> repos(distinct.begin(), distinct.end());
  numerics::Rng rng(seed);
  rng.shuffle(std::span<std::string>(repos));

  const auto n = static_cast<long long>(repos.size());
  const long long n_train = std::clamp(std::llround(fraction * static_cast<double>(n)), 1LL, n - 1);
  Split split;
  split.train_repositories.assign(repos.begin(), repos.begin() + n_train);
  split.validation_repositories.assign(repos.begin() + n_train, repos.end());
  const std::unordered_set<std::string> train_set(split.train_repositories.begin(), split.train_repositories.end());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    (train_set.contains(graphs[i].repository) ? split.train : split.validation).push_back(i);
  }
  std::sort(split.train_repositories.begin(), split.train_repositories.end());
  std::sort(split.validation_repositories.begin(), split.validation_repositories.end());
  return split;
}

}  // namespace typegraph::training
