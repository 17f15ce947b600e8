#include "typegraph/graph/batch.hpp"

namespace typegraph::graph {

Batch make_batch(std::span<const ProgramGraph> graphs, std::span<const std::size_t> indices) {
  Batch b;
  std::size_t total = 0;
  for (std::size_t i : indices) total += graphs[i].nodes.size();
  b.type_indices.reserve(total);
  b.property.reserve(total);
  b.values.reserve(total);
  b.node_graph.reserve(total);
  b.labels.reserve(total);
  b.explicit_flags.reserve(total);
  b.graph_offsets.push_back(0);

  for (std::size_t position = 0; position < indices.size(); ++position) {
    const ProgramGraph& g = graphs[indices[position]];
    const int offset = static_cast<int>(b.node_count);
    for (const GraphNode& n : g.nodes) {
      b.type_indices.push_back(n.type_indices);
      b.property.push_back(n.property_index.value_or(-1));
      b.values.push_back(n.value_chars);
      b.node_graph.push_back(static_cast<int>(position));
      b.labels.push_back(n.label.index());
      b.explicit_flags.push_back(n.label.explicit_);
    }
    for (const TypedEdge& e : g.edges) {
      EdgeList& list = b.edges[static_cast<std::size_t>(e.category)];
      list.src.push_back(e.src + offset);
      list.dst.push_back(e.dst + offset);
    }
    b.node_count += g.nodes.size();
    b.graph_offsets.push_back(b.node_count);
    b.source_graphs.push_back(indices[position]);
  }
  return b;
}

Batch make_batch(const ProgramGraph& graph) {
  const std::size_t index = 0;
  return make_batch(std::span<const ProgramGraph>(&graph, 1), std::span<const std::size_t>(&index, 1));
}

}  // namespace typegraph::graph
