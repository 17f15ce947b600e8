#include "typegraph/graph/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "typegraph/error.hpp"

namespace typegraph::graph {

std::string graph_to_json_line(const ProgramGraph& g) {
  Json j;
  j["source"] = g.source_path;
  j["repo"] = g.repository;
  Json nodes = Json::array();
  for (const GraphNode& n : g.nodes) {
    Json o;
    o["id"] = n.id;
    o["types"] = n.type_indices;
    o["prop"] = n.property_index ? Json(*n.property_index) : Json(nullptr);
    o["value"] = n.value_chars;
    o["label"] = std::string(label_name(n.label.variant));
    o["explicit"] = n.label.explicit_;
    o["span"] = Json::array({n.start, n.end});
    nodes.push_back(std::move(o));
  }
  j["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (const TypedEdge& e : g.edges) edges.push_back(Json::array({e.src, e.edge_type, e.dst}));
  j["edges"] = std::move(edges);
  return j.dump(-1, ' ', false, Json::error_handler_t::replace);
}

namespace {

int bounded_index(const Json& v, std::size_t limit, const char* what) {
  if (!v.is_number_integer()) throw DataError(std::string(what) + " is not an integer");
  const auto x = v.get<long long>();
  if (x < 0 || static_cast<std::size_t>(x) >= limit) {
    throw DataError(std::string(what) + " " + std::to_string(x) + " out of range");
  }
  return static_cast<int>(x);
}

}  // namespace

ProgramGraph graph_from_json_line(std::string_view line, const Vocabularies& vocab) {
  Json j;
  try {
    j = Json::parse(line.begin(), line.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed graph line: ") + e.what(), e.byte);
  }
  try {
    ProgramGraph g;
    g.source_path = j.at("source").get<std::string>();
    g.repository = j.at("repo").get<std::string>();
    const Json& nodes = j.at("nodes");
    g.nodes.reserve(nodes.size());
    for (const Json& o : nodes) {
      GraphNode n;
      n.id = o.at("id").get<int>();
      if (n.id != static_cast<int>(g.nodes.size())) throw DataError("node ids must be dense and ordered");
      for (const Json& t : o.at("types")) n.type_indices.push_back(bounded_index(t, vocab.node_types().size(), "type"));
      if (n.type_indices.empty()) throw DataError("node " + std::to_string(n.id) + " has no type");
      if (const Json& p = o.at("prop"); !p.is_null()) n.property_index = bounded_index(p, vocab.prop_types().size(), "prop");
      n.value_chars = o.at("value").get<std::string>();
      const auto cls = try_parse_label(o.at("label").get<std::string>());
      if (!cls) throw LabelError("invalid label '" + o.at("label").get<std::string>() + "'");
      n.label = Label{*cls, o.at("explicit").get<bool>()};
      if (auto s = o.find("span"); s != o.end()) {
        n.start = s->at(0).get<std::size_t>();
        n.end = s->at(1).get<std::size_t>();
      }
      g.nodes.push_back(std::move(n));
    }
    for (const Json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw DataError("edge must be [src, type, dst]");
      TypedEdge t;
      t.src = bounded_index(e[0], g.nodes.size(), "edge source");
      t.edge_type = bounded_index(e[1], vocab.edge_types().size(), "edge type");
      t.dst = bounded_index(e[2], g.nodes.size(), "edge target");
      t.category = vocab.category(t.edge_type);
      g.edges.push_back(t);
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("invalid graph record: ") + e.what());
  }
}

void write_graphs_jsonl(std::ostream& out, const std::vector<ProgramGraph>& graphs) {
  for (const auto& g : graphs) out << graph_to_json_line(g) << '\n';
}

std::vector<ProgramGraph> read_graphs_jsonl(std::istream& in, const Vocabularies& vocab) {
  std::vector<ProgramGraph> graphs;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      graphs.push_back(graph_from_json_line(line, vocab));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what(), e.byte_offset());
    } catch (const DataError& e) {
      throw DataError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return graphs;
}

std::vector<ProgramGraph> load_graphs_jsonl(const std::filesystem::path& file, const Vocabularies& vocab) {
  std::ifstream in(file);
  if (!in) throw DataError("cannot read " + file.string());
  return read_graphs_jsonl(in, vocab);
}

RuntimeLabels read_labels_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw DataError("cannot read " + file.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(file.string() + ": " + e.what(), e.byte);
  }
  if (!j.is_object()) throw DataError(file.string() + ": labels must be a JSON object");
  RuntimeLabels labels;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_string()) throw LabelError(file.string() + ": label for " + it.key() + " is not a string");
    labels.emplace(it.key(), it.value().get<std::string>());
  }
  return labels;
}

}  // namespace typegraph::graph
