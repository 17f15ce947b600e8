#include <iostream>
#include <new>

#include "CLI11.hpp"
#include "commands.hpp"
#include "typegraph/error.hpp"

using namespace typegraph;
using namespace typegraph::cli;

namespace {

void add_vocab_option(CLI::App* cmd, std::optional<std::filesystem::path>& target) {
  cmd->add_option("--vocab-dir", target, "Directory with nodeTypes.txt, propTypes.txt, edgeTypes.txt");
}

void add_model_options(CLI::App* cmd, ModelOptions& m) {
  cmd->add_option("--arch", m.arch, "gcn or ggnn")->check(CLI::IsMember({"gcn", "ggnn"}, CLI::ignore_case));
  cmd->add_option("--config", m.config, "Model configuration JSON (missing fields use the defaults)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--seed", m.seed, "Random seed");
  cmd->add_option("--lr", m.lr, "Initial learning rate (default: the default for --arch)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Program-graph type prediction for JavaScript"};
  app.require_subcommand(1);

  BuildGraphsOptions build;
  auto* cmd_build = app.add_subcommand("build-graphs", "Convert ESTree JSON files into graph JSONL");
  cmd_build->add_option("--ast-dir", build.ast_dir, "<repo>/<file>.json tree")->required();
  cmd_build->add_option("--labels-dir", build.labels_dir, "Runtime labels mirroring --ast-dir");
  cmd_build->add_option("--out", build.out, "Output graph JSONL")->required();
  cmd_build->add_option("--jobs", build.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_vocab_option(cmd_build, build.vocab_dir);

  TrainOptions tr;
  auto* cmd_train = app.add_subcommand("train", "Train a model and write a checkpoint");
  cmd_train->add_option("--graphs", tr.graphs, "Graph JSONL")->required()->check(CLI::ExistingFile);
  add_model_options(cmd_train, tr.model);
  cmd_train->add_option("--out", tr.out, "Checkpoint path")->required();
  cmd_train->add_option("--metrics", tr.metrics, "Metrics log (JSON lines)");
  cmd_train->add_option("--epochs", tr.epochs, "Maximum epochs")->check(CLI::PositiveNumber);
  cmd_train->add_option("--patience", tr.patience, "Plateau patience in epochs")->check(CLI::PositiveNumber);
  cmd_train->add_option("--split", tr.split, "Training fraction of repositories")->check(CLI::Range(0.0, 1.0));
  add_vocab_option(cmd_train, tr.vocab_dir);

  EvaluateOptions ev;
  auto* cmd_eval = app.add_subcommand("evaluate", "Test-mode F1 and per-class scores");
  cmd_eval->add_option("--graphs", ev.graphs, "Graph JSONL")->required()->check(CLI::ExistingFile);
  cmd_eval->add_option("--ckpt", ev.checkpoint, "Checkpoint")->required()->check(CLI::ExistingFile);
  add_vocab_option(cmd_eval, ev.vocab_dir);

  PredictOptions pr;
  auto* cmd_predict = app.add_subcommand("predict", "Per-token predictions for one ESTree file");
  cmd_predict->add_option("--ast", pr.ast, "ESTree JSON file")->required()->check(CLI::ExistingFile);
  cmd_predict->add_option("--ckpt", pr.checkpoint, "Checkpoint")->required()->check(CLI::ExistingFile);
  cmd_predict->add_option("--labels", pr.labels, "Runtime labels, reported as gold")->check(CLI::ExistingFile);
  cmd_predict->add_option("--source", pr.source, "JavaScript source, for token text")->check(CLI::ExistingFile);
  cmd_predict->add_option("--jsonl", pr.jsonl, "Write prediction records here");
  add_vocab_option(cmd_predict, pr.vocab_dir);

  LrFindOptions lf;
  auto* cmd_lr = app.add_subcommand("lr-find", "Learning-rate range test");
  cmd_lr->add_option("--graphs", lf.graphs, "Graph JSONL")->required()->check(CLI::ExistingFile);
  add_model_options(cmd_lr, lf.model);
  cmd_lr->add_option("--out", lf.out, "Output CSV")->required();
  cmd_lr->add_option("--lr-min", lf.lr_min, "Smallest learning rate");
  cmd_lr->add_option("--lr-max", lf.lr_max, "Largest learning rate");
  cmd_lr->add_option("--epochs", lf.epochs, "Epochs to sweep over")->check(CLI::PositiveNumber);
  add_vocab_option(cmd_lr, lf.vocab_dir);

  HpSearchOptions hp;
  auto* cmd_hp = app.add_subcommand("hp-search", "Asynchronous successive-halving search");
  cmd_hp->add_option("--graphs", hp.graphs, "Graph JSONL")->required()->check(CLI::ExistingFile);
  cmd_hp->add_option("--arch", hp.arch, "gcn or ggnn")->check(CLI::IsMember({"gcn", "ggnn"}, CLI::ignore_case));
  cmd_hp->add_option("--space", hp.space, "Search space JSON (subset of the default grid)")->check(CLI::ExistingFile);
  cmd_hp->add_option("--out", hp.out, "Trial table CSV")->required();
  cmd_hp->add_option("--n-configs", hp.n_configs, "Configurations to sample")->check(CLI::PositiveNumber);
  cmd_hp->add_option("--max-epochs", hp.max_epochs, "Epoch budget per trial")->check(CLI::PositiveNumber);
  cmd_hp->add_option("--workers", hp.workers, "Concurrent trials")->check(CLI::PositiveNumber);
  cmd_hp->add_option("--seed", hp.seed, "Random seed");
  cmd_hp->add_option("--lr", hp.lr, "Initial learning rate for every trial");
  cmd_hp->add_option("--split", hp.split, "Training fraction of repositories")->check(CLI::Range(0.0, 1.0));
  add_vocab_option(cmd_hp, hp.vocab_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*cmd_build) return build_graphs(build);
    if (*cmd_train) return train(tr);
    if (*cmd_eval) return evaluate(ev);
    if (*cmd_predict) return predict(pr);
    if (*cmd_lr) return lr_find(lf);
    if (*cmd_hp) return hp_search(hp);
  } catch (const ConfigError& e) {
    std::cerr << "error: invalid configuration: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const VocabularyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDiverged;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kDataError;
  }
  return kUsage;
}
