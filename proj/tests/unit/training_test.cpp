#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "test_support.hpp"
#include "typegraph/error.hpp"
#include "typegraph/training/batching.hpp"
#include "typegraph/training/hp_search.hpp"
#include "typegraph/training/lr_finder.hpp"
#include "typegraph/training/metrics.hpp"
#include "typegraph/training/optim.hpp"
#include "typegraph/training/split.hpp"
#include "typegraph/training/trainer.hpp"

namespace typegraph::training {
namespace {

using graph::ProgramGraph;
using model::Arch;
using model::ModelConfig;
using model::TypeModel;
using numerics::Rng;
using numerics::Tensor;

std::vector<ProgramGraph> sized_graphs(const std::vector<std::size_t>& sizes, std::size_t repos = 1) {
  std::vector<ProgramGraph> graphs;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    ProgramGraph g;
    g.nodes.resize(sizes[i]);
    g.repository = "repo" + std::to_string(i % repos);
    graphs.push_back(std::move(g));
  }
  return graphs;
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

const std::vector<ProgramGraph>& overfit_corpus() {
  static const auto graphs = testing::load_corpus("corpus/overfit20");
  return graphs;
}

// --- split ----------------------------------------------------------------

TEST(Split, TenRepositoriesGiveEightAndTwo) {
  const auto graphs = sized_graphs(std::vector<std::size_t>(37, 5), 10);
  const Split s = split_by_repository(graphs, 0.8, 3);
  EXPECT_EQ(s.train_repositories.size(), 8u);
  EXPECT_EQ(s.validation_repositories.size(), 2u);
  std::set<std::string> train_repos, val_repos;
  for (std::size_t i : s.train) train_repos.insert(graphs[i].repository);
  for (std::size_t i : s.validation) val_repos.insert(graphs[i].repository);
  for (const auto& r : val_repos) EXPECT_FALSE(train_repos.count(r)) << r;
  EXPECT_EQ(s.train.size() + s.validation.size(), graphs.size());
  EXPECT_TRUE(std::is_sorted(s.train.begin(), s.train.end()));
  EXPECT_TRUE(std::is_sorted(s.validation.begin(), s.validation.end()));
}

TEST(Split, FiveRepositoriesRoundToFourAndOne) {
  const auto graphs = sized_graphs(std::vector<std::size_t>(5, 5), 5);
  const Split s = split_by_repository(graphs, 0.8, 0);
  EXPECT_EQ(s.train.size(), 4u);
  EXPECT_EQ(s.validation.size(), 1u);
}

TEST(Split, DeterministicForASeed) {
  const auto graphs = sized_graphs(std::vector<std::size_t>(40, 5), 10);
  const Split a = split_by_repository(graphs, 0.8, 11);
  const Split b = split_by_repository(graphs, 0.8, 11);
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.validation_repositories, b.validation_repositories);
}

TEST(Split, NeedsTwoRepositories) {
  EXPECT_THROW(split_by_repository(sized_graphs({5, 5, 5}, 1)), DataError);
  const Split s = split_by_repository(sized_graphs({5, 5}, 2), 0.99);
  EXPECT_EQ(s.validation.size(), 1u);
}

// --- batching -------------------------------------------------------------

TEST(Batching, GraphCapSplitsOneHundredTwenty) {
  const auto graphs = sized_graphs(std::vector<std::size_t>(120, 10));
  Rng rng(1);
  const auto plan = plan_batches(graphs, iota(120), rng);
  ASSERT_EQ(plan.size(), 3u);
  EXPECT_EQ(plan[0].size(), 50u);
  EXPECT_EQ(plan[1].size(), 50u);
  EXPECT_EQ(plan[2].size(), 20u);
}

TEST(Batching, LargeGraphSitsAlone) {
  Rng rng(2);
  const auto single = sized_graphs({19516});
  EXPECT_EQ(plan_batches(single, iota(1), rng), (std::vector<std::vector<std::size_t>>{{0}}));
  // Every other graph would push the batch past 20,000 nodes.
  const auto graphs = sized_graphs({600, 19516, 700, 500, 900});
  const auto plan = plan_batches(graphs, iota(5), rng);
  std::vector<int> seen(5, 0);
  for (const auto& b : plan) {
    std::size_t nodes = 0;
    for (std::size_t i : b) {
      ++seen[i];
      nodes += graphs[i].size();
    }
    EXPECT_LE(nodes, 20000u);
    if (std::find(b.begin(), b.end(), 1u) != b.end()) EXPECT_EQ(b.size(), 1u);
  }
  EXPECT_EQ(seen, std::vector<int>(5, 1));
}

TEST(Batching, NodeCapAndEmptyInput) {
  const auto graphs = sized_graphs(std::vector<std::size_t>(10, 7000));
  Rng rng(3);
  for (const auto& b : plan_batches(graphs, iota(10), rng)) EXPECT_LE(b.size(), 2u);
  EXPECT_TRUE(plan_batches(graphs, {}, rng).empty());
  EXPECT_TRUE(make_batches(graphs, {}, rng).empty());
}

TEST(Batching, ShuffleDependsOnSeedOnly) {
  const auto graphs = sized_graphs(std::vector<std::size_t>(80, 10));
  Rng a(4), b(4), c(5);
  EXPECT_EQ(plan_batches(graphs, iota(80), a), plan_batches(graphs, iota(80), b));
  EXPECT_NE(plan_batches(graphs, iota(80), a), plan_batches(graphs, iota(80), c));
}

TEST(Batching, MergedEdgesStayInsideTheirGraph) {
  Rng g(6);
  std::vector<ProgramGraph> graphs;
  for (int i = 0; i < 5; ++i) graphs.push_back(testing::random_graph(4 + static_cast<std::size_t>(i), 9, g));
  const auto batch = graph::make_batch(graphs, iota(5));
  EXPECT_EQ(batch.graph_count(), 5u);
  for (const auto& list : batch.edges) {
    for (std::size_t e = 0; e < list.size(); ++e) {
      EXPECT_EQ(batch.node_graph[static_cast<std::size_t>(list.src[e])],
                batch.node_graph[static_cast<std::size_t>(list.dst[e])]);
    }
  }
}

// --- Adam -----------------------------------------------------------------

TEST(Adam, FirstStepIsLrTimesSign) {
  numerics::ParameterStore store;
  auto& p = store.add("w", Tensor::from_rows({{1.0, 1.0, 1.0}}));
  p.grad = Tensor::from_rows({{1e6, -1e6, 0.0}});
  Adam adam(store);
  adam.step(0.01);
  EXPECT_NEAR(p.value[0], 1.0 - 0.01, 1e-12);
  EXPECT_NEAR(p.value[1], 1.0 + 0.01, 1e-12);
  EXPECT_EQ(p.value[2], 1.0);
}

TEST(Adam, ZeroGradientsLeaveParameters) {
  numerics::ParameterStore store;
  auto& p = store.add("w", Tensor::from_rows({{0.3, -0.7}}));
  const Tensor before = p.value;
  p.grad = Tensor::matrix(1, 2);
  Adam adam(store);
  for (int i = 0; i < 5; ++i) adam.step(0.1);
  EXPECT_EQ(p.value, before);
}

TEST(Adam, QuadraticBowlConverges) {
  numerics::ParameterStore store;
  auto& p = store.add("w", Tensor::from_rows({{1.0, -2.0, 0.5}}));
  Adam adam(store);
  int steps = 0;
  auto loss = [&] {
    double s = 0.0;
    for (double v : p.value.data()) s += v * v;
    return s;
  };
  while (loss() >= 1e-6 && steps < 5000) {
    p.grad = p.value;
    for (double& g : p.grad.data()) g *= 2.0;
    adam.step(0.01);
    ++steps;
  }
  EXPECT_LT(loss(), 1e-6);
  EXPECT_LE(steps, 5000);
}

TEST(Adam, NonFiniteGradientAbortsWithoutUpdating) {
  numerics::ParameterStore store;
  auto& a = store.add("first", Tensor::from_rows({{1.0}}));
  auto& b = store.add("second", Tensor::from_rows({{2.0}}));
  a.grad = Tensor::from_rows({{0.5}});
  b.grad = Tensor::from_rows({{NAN}});
  Adam adam(store);
  try {
    adam.step(0.1);
    FAIL();
  } catch (const NumericError& e) {
    EXPECT_NE(std::string(e.what()).find("second"), std::string::npos);
  }
  EXPECT_EQ(a.value[0], 1.0);
  EXPECT_EQ(b.value[0], 2.0);
}

// --- plateau scheduler ----------------------------------------------------

TEST(Plateau, ConstantScoreCutsLrAfterPatience) {
  PlateauScheduler s(0.01, 0.1, 5, 1e-4);
  EXPECT_FALSE(s.observe(0.5));
  for (int i = 0; i < 4; ++i) EXPECT_FALSE(s.observe(0.5));
  EXPECT_TRUE(s.observe(0.5));
  EXPECT_EQ(s.lr(), 0.01 * 0.1);
  EXPECT_EQ(s.reductions(), 1);
}

TEST(Plateau, ImprovementBelowThresholdDoesNotCount) {
  PlateauScheduler s(1.0, 0.1, 2, 1e-4);
  s.observe(0.5);
  s.observe(0.50005);
  EXPECT_TRUE(s.observe(0.50009));
  s.observe(0.7);
  EXPECT_EQ(s.best(), 0.7);
  EXPECT_FALSE(s.observe(0.7));
  EXPECT_TRUE(s.observe(0.7));
  EXPECT_EQ(s.lr(), std::pow(0.1, 2));
}

// --- metrics --------------------------------------------------------------

TEST(Metrics, MicroF1IsAccuracyOnSingleLabels) {
  const std::vector<int> gold{0, 1, 2, 3, 4, 5, 6, 7, 0, 1};
  std::vector<int> pred = gold;
  const std::vector<bool> plain(10, false);
  EXPECT_EQ(micro_f1(pred, gold, plain), 1.0);
  pred[0] = 1;
  pred[4] = 3;
  pred[9] = 2;
  EXPECT_DOUBLE_EQ(micro_f1(pred, gold, plain), 0.7);
}

TEST(Metrics, UnknownAndExplicitNodesAreExcluded) {
  const std::vector<int> gold{8, 1, 2, 3};
  const std::vector<int> pred{0, 0, 2, 3};
  EXPECT_DOUBLE_EQ(micro_f1(pred, gold, {false, true, false, false}), 1.0);
  EXPECT_THROW(micro_f1(pred, std::vector<int>{8, 1, 8, 8}, {false, true, false, false}), DataError);
  Confusion c;
  c.add_nodes(pred, gold, {false, true, false, false}, true);
  EXPECT_EQ(c.total(), 3u);
  EXPECT_EQ(c.correct(), 2u);
}

TEST(Metrics, ValidationAveragesBatchesTestPools) {
  Confusion a, b, empty;
  for (int i = 0; i < 4; ++i) a.add(1, 1);  // 4/4
  b.add(0, 1);                              // 0/1
  const std::vector<Confusion> batches{a, b, empty};
  EXPECT_DOUBLE_EQ(combine_batch_scores(batches, F1Mode::validation), 0.5);
  EXPECT_DOUBLE_EQ(combine_batch_scores(batches, F1Mode::test), 0.8);
}

TEST(Metrics, ClassScores) {
  Confusion c;
  c.add(0, 0);
  c.add(0, 1);
  c.add(1, 1);
  const auto obj = c.class_scores(graph::LabelClass::object);
  EXPECT_DOUBLE_EQ(obj.precision, 0.5);
  EXPECT_DOUBLE_EQ(obj.recall, 1.0);
  EXPECT_EQ(c.class_scores(graph::LabelClass::string).support, 2u);
  EXPECT_EQ(c.class_scores(graph::LabelClass::null).support, 0u);
  EXPECT_EQ(c.class_scores(graph::LabelClass::null).f1, 0.0);
}

TEST(Metrics, ArgmaxNeverPicksUnknown) {
  const Tensor lp = Tensor::from_rows({{-3, -1, -2, -9, -9, -9, -9, -9}, {-9, -9, -9, -9, -9, -9, -9, -0.1}});
  EXPECT_EQ(argmax_predictions(lp), (std::vector<int>{1, 7}));
}

// --- evaluation -----------------------------------------------------------

TEST(Evaluate, TestScoreIgnoresBatchComposition) {
  const auto& graphs = overfit_corpus();
  Rng rng(1);
  TypeModel m(ModelConfig{.hidden_size = 8, .n_layers = 2}, rng);
  const auto all = iota(graphs.size());
  const auto one = evaluate(m, graphs, all, BatchLimits{1, 20000});
  const auto many = evaluate(m, graphs, all, BatchLimits{50, 20000});
  EXPECT_EQ(one.micro_f1, many.micro_f1);
  EXPECT_EQ(one.evaluated_nodes, many.evaluated_nodes);
  EXPECT_EQ(one.labeled_nodes, one.evaluated_nodes + one.explicit_nodes);
}

TEST(Evaluate, BatchLossIsWeightedMeanOfGraphLosses) {
  const auto& graphs = overfit_corpus();
  Rng rng(1);
  TypeModel m(ModelConfig{.hidden_size = 8, .n_layers = 2}, rng);
  const std::vector<std::size_t> idx{0, 3, 5, 9};
  numerics::Tape tape;
  Rng f(0);
  const auto batch = graph::make_batch(graphs, idx);
  const double batch_loss = model::masked_loss(m.forward(tape, batch, numerics::Mode::eval, f), batch).value.value()[0];
  double weighted = 0.0;
  std::size_t eligible = 0;
  for (std::size_t i : idx) {
    numerics::Tape t;
    Rng r(0);
    const auto single = graph::make_batch(graphs[i]);
    const auto l = model::masked_loss(m.forward(t, single, numerics::Mode::eval, r), single);
    if (l.no_eligible_nodes) continue;
    weighted += l.value.value()[0] * static_cast<double>(l.eligible_nodes);
    eligible += l.eligible_nodes;
  }
  EXPECT_NEAR(batch_loss, weighted / static_cast<double>(eligible), 1e-10);
}

TEST(Evaluate, PredictProbabilitiesAreDistributions) {
  Rng rng(1);
  TypeModel m(ModelConfig{.hidden_size = 8, .n_layers = 2}, rng);
  const Tensor p = predict_probabilities(m, overfit_corpus()[2]);
  ASSERT_EQ(p.cols(), 8u);
  for (std::size_t r = 0; r < p.rows(); ++r) {
    double s = 0.0;
    for (double v : p.row(r)) s += v;
    EXPECT_NEAR(s, 1.0, 1e-9);
  }
}

// --- learning-rate finder -------------------------------------------------

TEST(LrFinder, GeometricScheduleOverEightEpochs) {
  const auto& graphs = overfit_corpus();
  Rng rng(1);
  TypeModel m(ModelConfig{.hidden_size = 8, .n_layers = 1}, rng);
  const numerics::ParameterStore before = m.parameters();
  LrFinderConfig cfg;
  cfg.lr_min = 1e-4;
  cfg.lr_max = 1e-1;
  cfg.limits.max_graphs = 5;
  const auto r = lr_finder(m, graphs, iota(graphs.size()), cfg);
  ASSERT_EQ(r.batches_per_epoch.size(), 8u);
  EXPECT_EQ(r.planned_lrs.size(), 8u * 4u);
  EXPECT_DOUBLE_EQ(r.planned_lrs.front(), 1e-4);
  EXPECT_NEAR(r.planned_lrs.back(), 1e-1, 1e-15);
  for (std::size_t i = 2; i < r.planned_lrs.size(); ++i) {
    EXPECT_NEAR(r.planned_lrs[i] / r.planned_lrs[i - 1], r.planned_lrs[1] / r.planned_lrs[0], 1e-12);
  }
  EXPECT_EQ(r.points.size(), r.planned_lrs.size());
  for (std::size_t i = 0; i < m.parameters().size(); ++i) EXPECT_EQ(m.parameters()[i].value, before[i].value);
  std::ostringstream csv;
  write_lr_curve_csv(csv, r);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')), "step,epoch,lr,loss");
}

TEST(LrFinder, LossRisesAtAbsurdRates) {
  const auto& graphs = overfit_corpus();
  Rng rng(1);
  TypeModel m(ModelConfig{.hidden_size = 8, .n_layers = 2}, rng);
  LrFinderConfig cfg;
  cfg.lr_min = 1e-4;
  cfg.lr_max = 1e4;
  cfg.limits.max_graphs = 5;
  const auto r = lr_finder(m, graphs, iota(graphs.size()), cfg);
  double lowest = INFINITY;
  for (const auto& p : r.points) {
    if (std::isfinite(p.loss)) lowest = std::min(lowest, p.loss);
  }
  const double last = r.points.back().loss;
  EXPECT_TRUE(r.diverged || last > 2.0 * lowest) << "last " << last << " lowest " << lowest;
}

// --- training loop --------------------------------------------------------

TrainConfig quick_config() {
  TrainConfig tc;
  tc.initial_lr = 0.01;
  tc.max_epochs = 4;
  tc.seed = 5;
  tc.log_wall_time = false;
  return tc;
}

TEST(Train, FixedSeedGivesIdenticalMetricsLog) {
  const auto& graphs = overfit_corpus();
  const Split split = split_by_repository(graphs, 0.8, 0);
  auto run = [&] {
    Rng rng(2);
    TypeModel m(ModelConfig{.hidden_size = 8, .n_layers = 2, .dropout = 0.2}, rng);
    std::ostringstream log;
    train(m, graphs, split.train, split.validation, quick_config(), {}, &log);
    return log.str();
  };
  const std::string a = run();
  EXPECT_EQ(a, run());
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 4);
  EXPECT_NE(a.find("\"val_f1\""), std::string::npos);
  EXPECT_EQ(a.find("wall_ms"), std::string::npos);
}

TEST(Train, RestoresBestEpochAndStopsOnRequest) {
  const auto& graphs = overfit_corpus();
  const auto all = iota(graphs.size());
  Rng rng(2);
  TypeModel m(ModelConfig{.hidden_size = 8, .n_layers = 2}, rng);
  TrainConfig tc = quick_config();
  tc.max_epochs = 6;
  const auto r = train(m, graphs, all, all, tc, [](const EpochMetrics& e) { return e.epoch < 5; });
  EXPECT_EQ(r.status, TrainStatus::stopped);
  ASSERT_EQ(r.history.size(), 5u);
  const auto best = std::max_element(r.history.begin(), r.history.end(),
                                     [](const auto& a, const auto& b) { return a.val_f1 < b.val_f1; });
  EXPECT_EQ(r.best_val_f1, best->val_f1);
  EXPECT_EQ(r.best_epoch, best->epoch);
  const auto plan = plan_batches_in_order(graphs, all, tc.limits);
  EXPECT_DOUBLE_EQ(validation_f1(m, graphs, plan), r.best_val_f1);
}

TEST(Train, DivergenceIsReported) {
  const auto& graphs = overfit_corpus();
  const auto all = iota(graphs.size());
  Rng rng(2);
  TypeModel m(ModelConfig{.hidden_size = 8, .n_layers = 2}, rng);
  TrainConfig tc = quick_config();
  tc.initial_lr = 1e300;
  tc.max_epochs = 10;
  const auto r = train(m, graphs, all, all, tc);
  EXPECT_EQ(r.status, TrainStatus::diverged);
  EXPECT_FALSE(r.message.empty());
  for (const auto& p : m.parameters()) EXPECT_TRUE(p->value.all_finite()) << p->name;
}

// --- hyper-parameter search -----------------------------------------------

TEST(HpSearch, RungsForDefaultSettings) {
  EXPECT_EQ(asha_rungs(3, 4, 50), (std::vector<int>{3, 12, 50}));
  EXPECT_EQ(asha_rungs(1, 3, 12), (std::vector<int>{1, 3, 12}));
  EXPECT_EQ(asha_rungs(5, 4, 5), (std::vector<int>{5}));
}

TEST(HpSearch, SpaceValidationAndSampling) {
  SearchSpace space;
  EXPECT_NO_THROW(space.validate());
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto gcn = space.sample(Arch::gcn, rng);
    EXPECT_FALSE(gcn.master.has_value());
    EXPECT_NO_THROW(gcn.validate());
    EXPECT_NO_THROW(space.sample(Arch::ggnn, rng).validate());
  }
  space.n_layers = {};
  EXPECT_THROW(space.validate(), ConfigError);
  SearchSpace wide;
  wide.n_layers = {11};
  EXPECT_THROW(wide.validate(), ConfigError);
}

TEST(HpSearch, SingleConfigIsPlainTraining) {
  const auto& graphs = overfit_corpus();
  const Split split = split_by_repository(graphs, 0.8, 0);
  SearchSpace space;
  space.hidden_sizes = {8};
  space.n_layers = {1};
  space.master_probability = 0.0;
  SearchConfig sc;
  sc.n_configs = 1;
  sc.max_epochs = 4;
  sc.min_epochs = 1;
  sc.train = quick_config();
  const auto r = hp_search(graphs, split.train, split.validation, space, sc);
  ASSERT_EQ(r.trials.size(), 1u);
  EXPECT_EQ(r.trials[0].status, TrialStatus::completed);
  EXPECT_EQ(r.trials[0].stop_epoch, 4);
  EXPECT_EQ(r.trials[0].val_f1.size(), 4u);
  EXPECT_EQ(r.total_epochs, 4u);
}

TEST(HpSearch, NeverRunsPastMaxEpochs) {
  const auto& graphs = overfit_corpus();
  const Split split = split_by_repository(graphs, 0.8, 0);
  SearchSpace space;
  space.hidden_sizes = {8};
  space.n_layers = {1, 2};
  space.enc_blocks = {0, 1};
  space.dec_blocks = {0, 1};
  SearchConfig sc;
  sc.n_configs = 6;
  sc.max_epochs = 9;
  sc.min_epochs = 1;
  sc.reduction_factor = 3;
  sc.train = quick_config();
  const auto r = hp_search(graphs, split.train, split.validation, space, sc);
  std::size_t epochs = 0;
  for (const auto& t : r.trials) {
    EXPECT_LE(t.stop_epoch, 9);
    EXPECT_EQ(t.val_f1.size(), static_cast<std::size_t>(t.stop_epoch));
    epochs += t.val_f1.size();
  }
  EXPECT_EQ(epochs, r.total_epochs);
  EXPECT_LT(r.total_epochs, 6u * 9u);
  ASSERT_EQ(r.ranking.size(), 6u);
  for (std::size_t i = 1; i < r.ranking.size(); ++i) {
    EXPECT_GE(r.trials[static_cast<std::size_t>(r.ranking[i - 1])].best_f1,
              r.trials[static_cast<std::size_t>(r.ranking[i])].best_f1);
  }
  std::ostringstream table;
  write_trial_table(table, r);
  const std::string text = table.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 7);
}

}  // namespace
}  // namespace typegraph::training
