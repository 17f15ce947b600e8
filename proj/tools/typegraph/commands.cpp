#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "corpus.hpp"
#include "typegraph/error.hpp"
#include "typegraph/graph/estree.hpp"
#include "typegraph/graph/graph_io.hpp"
#include "typegraph/model/gnn.hpp"
#include "typegraph/training/hp_search.hpp"
#include "typegraph/training/lr_finder.hpp"
#include "typegraph/training/split.hpp"
#include "typegraph/training/trainer.hpp"
#include "typegraph/util/format.hpp"

namespace typegraph::cli {

namespace fs = std::filesystem;
using graph::ProgramGraph;
using graph::Vocabularies;
using util::format_fixed;

namespace {

Vocabularies load_vocab(const std::optional<fs::path>& dir) { return Vocabularies::load(Vocabularies::locate(dir)); }

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  return out;
}

nlohmann::json read_json_file(const fs::path& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string(), std::string("not valid JSON: ") + e.what());
  }
}

model::ModelConfig resolve_config(const ModelOptions& m) {
  const model::Arch arch = model::parse_arch(m.arch);
  if (!m.config) return model::default_config(arch);
  nlohmann::json j = read_json_file(*m.config);
  if (j.is_object() && j.contains("arch") && model::parse_arch(j["arch"].get<std::string>()) != arch) {
    throw ConfigError("arch", "--arch " + m.arch + " disagrees with the config file");
  }
  return model::model_config_from_json(j, model::default_config(arch));
}

std::vector<ProgramGraph> load_graphs(const fs::path& file, const Vocabularies& vocab) {
  auto graphs = graph::load_graphs_jsonl(file, vocab);
  if (graphs.empty()) throw DataError(file.string() + " contains no graphs");
  return graphs;
}

struct FileOutcome {
  std::optional<ProgramGraph> graph;
  std::string error;
};

FileOutcome build_one(const CorpusFile& f, const Vocabularies& vocab) {
  FileOutcome out;
  try {
    const graph::AstDocument doc = graph::parse_estree(read_file(f.ast), vocab);
    graph::RuntimeLabels labels;
    if (f.labels) labels = graph::read_labels_file(*f.labels);
    out.graph = graph::build_graph(doc, vocab, &labels, f.source, f.repository);
  } catch (const ParseError& e) {
    out.error = std::string(e.what()) + " (byte " + std::to_string(e.byte_offset()) + ")";
  } catch (const Error& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace

int build_graphs(const BuildGraphsOptions& o) {
  const Vocabularies vocab = load_vocab(o.vocab_dir);
  const auto files = list_corpus(o.ast_dir, o.labels_dir);
  std::vector<FileOutcome> outcomes(files.size());
  const auto jobs = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(o.jobs), files.size()));
  if (jobs == 1) {
    for (std::size_t i = 0; i < files.size(); ++i) outcomes[i] = build_one(files[i], vocab);
  } else {
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < files.size(); i += jobs) outcomes[i] = build_one(files[i], vocab);
      });
    }
    for (auto& t : workers) t.join();
  }

  std::ofstream out = open_output(o.out);
  std::size_t kept = 0, rejected = 0, failed = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const FileOutcome& r = outcomes[i];
    if (!r.graph) {
      ++failed;
      std::cerr << "error: " << files[i].source << ": " << r.error << '\n';
      continue;
    }
    if (!graph::filter_graph(*r.graph)) {
      ++rejected;
      std::cout << "rejected " << files[i].source << ": " << r.graph->size() << " nodes (allowed "
                << graph::kMinGraphNodes << ".." << graph::kMaxGraphNodes << ")\n";
      continue;
    }
    out << graph::graph_to_json_line(*r.graph) << '\n';
    ++kept;
  }
  std::cout << "kept " << kept << ", rejected " << rejected << ", failed " << failed << '\n';
  return failed ? kDataError : kOk;
}

int train(const TrainOptions& o) {
  const Vocabularies vocab = load_vocab(o.vocab_dir);
  const model::ModelConfig config = resolve_config(o.model);
  const auto graphs = load_graphs(o.graphs, vocab);
  const auto split = training::split_by_repository(graphs, o.split, o.model.seed);

  numerics::Rng init(o.model.seed);
  model::TypeModel model(config, init);
  training::TrainConfig tc;
  tc.initial_lr = o.model.lr.value_or(model::default_learning_rate(config.arch));
  tc.max_epochs = o.epochs;
  tc.plateau_patience = o.patience;
  tc.seed = o.model.seed;

  std::optional<std::ofstream> log;
  if (o.metrics) log.emplace(open_output(*o.metrics));
  std::cout << "training " << model::arch_name(config.arch) << " on " << split.train.size() << " graphs ("
            << split.train_repositories.size() << " repositories), validating on " << split.validation.size()
            << '\n';
  const auto result = training::train(model, graphs, split.train, split.validation, tc,
                                      [](const training::EpochMetrics& m) {
                                        std::cout << "epoch " << m.epoch << "  lr " << m.lr << "  loss "
                                                  << format_fixed(m.train_loss, 4) << "  val_f1 "
                                                  << format_fixed(m.val_f1, 4) << '\n';
                                        return true;
                                      },
                                      log ? &*log : nullptr);

  nlohmann::json extra;
  extra["seed"] = o.model.seed;
  extra["initial_lr"] = tc.initial_lr;
  extra["best_epoch"] = result.best_epoch;
  extra["best_val_f1"] = result.best_val_f1;
  extra["status"] = training::status_name(result.status);
  if (o.out.has_parent_path()) fs::create_directories(o.out.parent_path());
  model.save(o.out, extra);
  std::cout << "best val_f1 " << format_fixed(result.best_val_f1, 4) << " at epoch " << result.best_epoch
            << "; checkpoint " << o.out.string() << '\n';
  if (result.status == training::TrainStatus::diverged) {
    std::cerr << "error: training diverged: " << result.message << " (kept the best checkpoint)\n";
    return kDiverged;
  }
  return kOk;
}

int evaluate(const EvaluateOptions& o) {
  const Vocabularies vocab = load_vocab(o.vocab_dir);
  const model::TypeModel model = model::TypeModel::load(o.checkpoint);
  const auto graphs = load_graphs(o.graphs, vocab);
  std::vector<std::size_t> all(graphs.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const auto report = training::evaluate(model, graphs, all);

  std::cout << "test F1 " << format_fixed(report.micro_f1, 4) << " over " << report.evaluated_nodes
            << " nodes (" << report.total_nodes << " total, " << report.labeled_nodes << " labeled, "
            << report.explicit_nodes << " explicit)\n";
  std::cout << std::left << std::setw(10) << "class" << std::right << std::setw(10) << "precision"
            << std::setw(10) << "recall" << std::setw(10) << "f1" << std::setw(10) << "support" << '\n';
  for (std::size_t c = 0; c < graph::kClassCount; ++c) {
    const auto& s = report.classes[c];
    std::cout << std::left << std::setw(10) << graph::label_name(static_cast<graph::LabelClass>(c)) << std::right
              << std::setw(10) << format_fixed(s.precision, 4) << std::setw(10) << format_fixed(s.recall, 4)
              << std::setw(10) << format_fixed(s.f1, 4) << std::setw(10) << s.support << '\n';
  }
  return kOk;
}

int predict(const PredictOptions& o) {
  const Vocabularies vocab = load_vocab(o.vocab_dir);
  const model::TypeModel model = model::TypeModel::load(o.checkpoint);
  const graph::AstDocument doc = graph::parse_estree(read_file(o.ast), vocab);
  graph::RuntimeLabels labels;
  if (o.labels) labels = graph::read_labels_file(*o.labels);
  const ProgramGraph g = graph::build_graph(doc, vocab, &labels, o.ast.generic_string(), "");
  const std::string source = o.source ? read_file(*o.source) : std::string();
  const numerics::Tensor probs = training::predict_probabilities(model, g);

  std::optional<std::ofstream> jsonl;
  if (o.jsonl) jsonl.emplace(open_output(*o.jsonl));
  std::cout << std::left << std::setw(12) << "span" << std::setw(20) << "token" << std::setw(11) << "predicted"
            << std::setw(8) << "p" << "gold\n";
  for (const graph::GraphNode& n : g.nodes) {
    if (!doc.node(n.id).is_leaf()) continue;
    std::string token = n.value_chars;
    if (!source.empty() && n.end <= source.size()) token = source.substr(n.start, n.end - n.start);
    std::size_t best = 0;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < graph::kClassCount; ++c) {
      p[std::string(graph::label_name(static_cast<graph::LabelClass>(c)))] = probs(static_cast<std::size_t>(n.id), c);
      if (probs(static_cast<std::size_t>(n.id), c) > probs(static_cast<std::size_t>(n.id), best)) best = c;
    }
    const std::string predicted(graph::label_name(static_cast<graph::LabelClass>(best)));
    const std::string gold = n.label.known() ? std::string(graph::label_name(n.label.variant)) : "";
    if (jsonl) {
      nlohmann::ordered_json r;
      r["source_path"] = g.source_path;
      r["span"] = {n.start, n.end};
      r["token"] = token;
      r["predicted"] = predicted;
      r["probabilities"] = p;
      r["gold"] = gold.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(gold);
      *jsonl << r.dump(-1, ' ', false, nlohmann::ordered_json::error_handler_t::replace) << '\n';
    }
    std::cout << std::left << std::setw(12) << (std::to_string(n.start) + ":" + std::to_string(n.end))
              << std::setw(20) << token << std::setw(11) << predicted << std::setw(8)
              << format_fixed(probs(static_cast<std::size_t>(n.id), best), 3) << gold << '\n';
  }
  return kOk;
}

int lr_find(const LrFindOptions& o) {
  const Vocabularies vocab = load_vocab(o.vocab_dir);
  const model::ModelConfig config = resolve_config(o.model);
  const auto graphs = load_graphs(o.graphs, vocab);
  std::vector<std::size_t> all(graphs.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  numerics::Rng init(o.model.seed);
  model::TypeModel model(config, init);
  training::LrFinderConfig fc;
  fc.lr_min = o.lr_min;
  fc.lr_max = o.lr_max;
  fc.epochs = o.epochs;
  fc.seed = o.model.seed;
  const auto result = training::lr_finder(model, graphs, all, fc);
  std::ofstream out = open_output(o.out);
  training::write_lr_curve_csv(out, result);
  std::cout << result.points.size() << " of " << result.planned_lrs.size() << " planned steps"
            << (result.diverged ? " (stopped at a non-finite loss)" : "") << "; curve written to " << o.out.string()
            << '\n';
  return kOk;
}

namespace {

template <typename T>
void read_axis(const nlohmann::json& j, const char* key, std::vector<T>& axis) {
  if (!j.contains(key)) return;
  try {
    axis = j.at(key).get<std::vector<T>>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(key, "must be a list");
  }
}

training::SearchSpace read_space(const fs::path& path) {
  const nlohmann::json j = read_json_file(path);
  if (!j.is_object()) throw ConfigError("space", "must be a JSON object");
  static const char* const kKeys[] = {"hidden_size", "enc_blocks", "dropout", "n_layers", "dec_blocks",
                                      "master_size", "master_dropout", "master_probability"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
      throw ConfigError(key, "unknown search-space axis");
    }
  }
  training::SearchSpace s;
  read_axis(j, "hidden_size", s.hidden_sizes);
  read_axis(j, "enc_blocks", s.enc_blocks);
  read_axis(j, "dropout", s.dropouts);
  read_axis(j, "n_layers", s.n_layers);
  read_axis(j, "dec_blocks", s.dec_blocks);
  read_axis(j, "master_size", s.master_sizes);
  read_axis(j, "master_dropout", s.master_dropouts);
  if (j.contains("master_probability")) {
    if (!j.at("master_probability").is_number()) throw ConfigError("master_probability", "must be a number");
    s.master_probability = j.at("master_probability").get<double>();
  }
  s.validate();
  return s;
}

}  // namespace

int hp_search(const HpSearchOptions& o) {
  const Vocabularies vocab = load_vocab(o.vocab_dir);
  const auto graphs = load_graphs(o.graphs, vocab);
  const auto split = training::split_by_repository(graphs, o.split, o.seed);
  training::SearchConfig sc;
  sc.arch = model::parse_arch(o.arch);
  sc.n_configs = o.n_configs;
  sc.max_epochs = o.max_epochs;
  sc.workers = o.workers;
  sc.seed = o.seed;
  sc.train.initial_lr = o.lr.value_or(model::default_learning_rate(sc.arch));
  const training::SearchSpace space = o.space ? read_space(*o.space) : training::SearchSpace{};

  const auto result = training::hp_search(graphs, split.train, split.validation, space, sc);
  std::ofstream out = open_output(o.out);
  training::write_trial_table(out, result);
  std::size_t early = 0;
  for (const auto& t : result.trials) early += t.stop_epoch < sc.max_epochs ? 1 : 0;
  std::cout << result.trials.size() << " trials, " << early << " stopped before epoch " << sc.max_epochs << ", "
            << result.total_epochs << " epochs in total\n";
  const auto& best = result.trials[static_cast<std::size_t>(result.ranking.front())];
  std::cout << "best trial " << best.trial << ": val_f1 " << format_fixed(best.best_f1, 4) << ' '
            << model::to_json(best.config).dump() << '\n';
  return kOk;
}

}  // namespace typegraph::cli
