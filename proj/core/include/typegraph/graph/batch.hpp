#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "typegraph/graph/program_graph.hpp"

namespace typegraph::graph {

/// Edge endpoints of one category in batch-global node ids.
struct EdgeList {
  std::vector<int> src;
  std::vector<int> dst;
  std::size_t size() const noexcept { return src.size(); }
};

/// Several graphs merged into one disconnected graph.
struct Batch {
  std::size_t node_count = 0;
  std::vector<std::vector<int>> type_indices;
  /// Property index per node, -1 when absent.
  std::vector<int> property;
  std::vector<std::string> values;
  std::array<EdgeList, kEdgeCategoryCount> edges;
  /// Graph position (within this batch) of every node.
  std::vector<int> node_graph;
  /// First node of graph g is graph_offsets[g]; the last entry is node_count.
  std::vector<std::size_t> graph_offsets;
  /// Class index per node (LabelClass as int, 8 = unknown).
  std::vector<int> labels;
  std::vector<bool> explicit_flags;
  /// Indices of the member graphs in the caller's list.
  std::vector<std::size_t> source_graphs;

  std::size_t graph_count() const noexcept { return graph_offsets.empty() ? 0 : graph_offsets.size() - 1; }
  const EdgeList& category(EdgeCategory c) const { return edges[static_cast<std::size_t>(c)]; }
};

/// Merges the graphs at `indices` of `graphs`, offsetting node ids.
Batch make_batch(std::span<const ProgramGraph> graphs, std::span<const std::size_t> indices);

/// Batch holding a single graph.
Batch make_batch(const ProgramGraph& graph);

}  // namespace typegraph::graph
