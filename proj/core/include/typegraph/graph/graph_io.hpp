#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "typegraph/graph/program_graph.hpp"

namespace typegraph::graph {

/// One graph as a single JSON line (no trailing newline):
/// {"source","repo","nodes":[{"id","types","prop","value","label","explicit","span"}],"edges":[[src,type,dst]]}
std::string graph_to_json_line(const ProgramGraph& graph);

/// Inverse of graph_to_json_line. Throws ParseError / DataError on bad input.
ProgramGraph graph_from_json_line(std::string_view line, const Vocabularies& vocab);

void write_graphs_jsonl(std::ostream& out, const std::vector<ProgramGraph>& graphs);
std::vector<ProgramGraph> read_graphs_jsonl(std::istream& in, const Vocabularies& vocab);
std::vector<ProgramGraph> load_graphs_jsonl(const std::filesystem::path& file, const Vocabularies& vocab);

/// Reads a {"start:end": "class"} object. Values are validated later by assign_labels.
RuntimeLabels read_labels_file(const std::filesystem::path& file);

}  // namespace typegraph::graph
