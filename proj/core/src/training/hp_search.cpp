#include "typegraph/training/hp_search.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <thread>

#include "typegraph/error.hpp"
#include "typegraph/model/gnn.hpp"
#include "typegraph/util/format.hpp"

namespace typegraph::training {

namespace {

template <typename T>
const T& pick(const std::vector<T>& axis, numerics::Rng& rng) {
  return axis[rng.below(axis.size())];
}

template <typename T>
void require_axis(const std::vector<T>& axis, const char* name) {
  if (axis.empty()) throw ConfigError(name, "search axis is empty");
}

// Per-rung results visible to decisions, keyed by rung epoch: (score, trial).
using RungRecords = std::map<int, std::vector<std::pair<double, int>>>;

bool promote(const RungRecords& visible, int rung, double score, int trial, int factor) {
  std::size_t better = 0;
  std::size_t n = 1;
  if (auto it = visible.find(rung); it != visible.end()) {
    for (const auto& [other_score, other_trial] : it->second) {
      ++n;
      if (other_score > score || (other_score == score && other_trial < trial)) ++better;
    }
  }
  const std::size_t keep = (n + static_cast<std::size_t>(factor) - 1) / static_cast<std::size_t>(factor);
  return better + 1 <= keep;
}

}  // namespace

void SearchSpace::validate() const {
  require_axis(hidden_sizes, "hidden_size");
  require_axis(enc_blocks, "enc_blocks");
  require_axis(dropouts, "dropout");
  require_axis(n_layers, "n_layers");
  require_axis(dec_blocks, "dec_blocks");
  if (master_probability < 0.0 || master_probability > 1.0) {
    throw ConfigError("master_probability", "must be in [0, 1]");
  }
  if (master_probability > 0.0) {
    require_axis(master_sizes, "master.size");
    require_axis(master_dropouts, "master.dropout");
  }
  auto check = [](auto&& set) {
    model::ModelConfig probe;
    set(probe);
    probe.validate();
  };
  for (auto h : hidden_sizes) check([&](auto& c) { c.hidden_size = h; });
  for (auto e : enc_blocks) check([&](auto& c) { c.enc_blocks = e; });
  for (auto d : dropouts) check([&](auto& c) { c.dropout = d; });
  for (auto l : n_layers) check([&](auto& c) { c.n_layers = l; });
  for (auto d : dec_blocks) check([&](auto& c) { c.dec_blocks = d; });
  if (master_probability > 0.0) {
    for (auto s : master_sizes) check([&](auto& c) { c.master = model::MasterConfig{s, 0.0}; });
    for (auto d : master_dropouts) check([&](auto& c) { c.master = model::MasterConfig{20, d}; });
  }
}

model::ModelConfig SearchSpace::sample(model::Arch arch, numerics::Rng& rng) const {
  model::ModelConfig c;
  c.arch = arch;
  c.hidden_size = pick(hidden_sizes, rng);
  c.enc_blocks = pick(enc_blocks, rng);
  c.dropout = pick(dropouts, rng);
  c.n_layers = pick(n_layers, rng);
  c.dec_blocks = pick(dec_blocks, rng);
  if (arch == model::Arch::ggnn && master_probability > 0.0 && rng.bernoulli(master_probability)) {
    c.master = model::MasterConfig{pick(master_sizes, rng), pick(master_dropouts, rng)};
  }
  return c;
}

std::vector<int> asha_rungs(int min_epochs, int reduction_factor, int max_epochs) {
  if (min_epochs < 1 || reduction_factor < 2 || max_epochs < 1) {
    throw ConfigError("rungs", "need min_epochs >= 1, reduction_factor >= 2, max_epochs >= 1");
  }
  std::vector<int> rungs;
  for (long long r = min_epochs; r * reduction_factor <= max_epochs; r *= reduction_factor) {
    rungs.push_back(static_cast<int>(r));
  }
  if (rungs.empty() || rungs.back() != max_epochs) rungs.push_back(max_epochs);
  return rungs;
}

const char* trial_status_name(TrialStatus s) noexcept {
  switch (s) {
    case TrialStatus::completed: return "completed";
    case TrialStatus::stopped: return "stopped";
    case TrialStatus::diverged: return "diverged";
    case TrialStatus::failed: return "failed";
  }
  return "unknown";
}

SearchResult hp_search(std::span<const graph::ProgramGraph> graphs, std::span<const std::size_t> train_indices,
                       std::span<const std::size_t> validation_indices, const SearchSpace& space,
                       const SearchConfig& config) {
  space.validate();
  if (config.n_configs < 1) throw ConfigError("n_configs", "must be at least 1");
  if (config.max_epochs < 1) throw ConfigError("max_epochs", "must be at least 1");
  if (config.workers < 1) throw ConfigError("workers", "must be at least 1");

  SearchResult result;
  result.rungs = asha_rungs(std::min(config.min_epochs, config.max_epochs), config.reduction_factor,
                            config.max_epochs);

  numerics::Rng rng(config.seed);
  std::vector<std::uint64_t> seeds;
  for (int i = 0; i < config.n_configs; ++i) {
    TrialRecord t;
    t.trial = i;
    t.config = space.sample(config.arch, rng);
    result.trials.push_back(std::move(t));
    seeds.push_back(rng.next());
  }

  RungRecords recorded;
  auto run_trial = [&](TrialRecord& trial, std::uint64_t seed, const RungRecords& visible) {
    try {
      numerics::Rng init(seed);
      model::TypeModel model(trial.config, init);
      TrainConfig tc = config.train;
      tc.max_epochs = config.max_epochs;
      tc.seed = seed ^ 0x5bd1e995ULL;
      tc.log_wall_time = false;
      double best = 0.0;
      const TrainResult r = train(model, graphs, train_indices, validation_indices, tc,
                                  [&](const EpochMetrics& m) {
                                    trial.val_f1.push_back(m.val_f1);
                                    best = std::max(best, m.val_f1);
                                    if (m.epoch >= config.max_epochs) return true;
                                    if (std::find(result.rungs.begin(), result.rungs.end(), m.epoch) ==
                                        result.rungs.end()) {
                                      return true;
                                    }
                                    return promote(visible, m.epoch, best, trial.trial, config.reduction_factor);
                                  });
      trial.best_f1 = r.best_val_f1;
      trial.stop_epoch = static_cast<int>(r.history.size());
      trial.status = r.status == TrainStatus::stopped    ? TrialStatus::stopped
                     : r.status == TrainStatus::diverged ? TrialStatus::diverged
                                                         : TrialStatus::completed;
      if (r.status == TrainStatus::diverged) trial.error = r.message;
    } catch (const std::exception& e) {
      trial.status = TrialStatus::failed;
      trial.error = e.what();
      trial.stop_epoch = static_cast<int>(trial.val_f1.size());
    }
  };

  const auto workers = static_cast<std::size_t>(config.workers);
  for (std::size_t wave = 0; wave < result.trials.size(); wave += workers) {
    const std::size_t end = std::min(result.trials.size(), wave + workers);
    const RungRecords visible = recorded;
    if (end - wave == 1) {
      run_trial(result.trials[wave], seeds[wave], visible);
    } else {
      std::vector<std::thread> threads;
      for (std::size_t i = wave; i < end; ++i) {
        threads.emplace_back([&, i] { run_trial(result.trials[i], seeds[i], visible); });
      }
      for (auto& t : threads) t.join();
    }
    for (std::size_t i = wave; i < end; ++i) {
      const TrialRecord& t = result.trials[i];
      double best = 0.0;
      for (std::size_t e = 0; e < t.val_f1.size(); ++e) {
        best = std::max(best, t.val_f1[e]);
        const int epoch = static_cast<int>(e) + 1;
        if (std::find(result.rungs.begin(), result.rungs.end(), epoch) != result.rungs.end()) {
          recorded[epoch].emplace_back(best, t.trial);
        }
      }
      result.total_epochs += t.val_f1.size();
    }
  }

  for (const auto& t : result.trials) result.ranking.push_back(t.trial);
  std::stable_sort(result.ranking.begin(), result.ranking.end(), [&](int a, int b) {
    return result.trials[static_cast<std::size_t>(a)].best_f1 > result.trials[static_cast<std::size_t>(b)].best_f1;
  });
  return result;
}

void write_trial_table(std::ostream& out, const SearchResult& result) {
  out << "trial,arch,hidden_size,enc_blocks,dec_blocks,n_layers,dropout,master_size,master_dropout,best_f1,"
         "stop_epoch,status,val_f1\n";
  for (const auto& t : result.trials) {
    const auto& c = t.config;
    out << t.trial << ',' << model::arch_name(c.arch) << ',' << c.hidden_size << ',' << c.enc_blocks << ','
        << c.dec_blocks << ',' << c.n_layers << ',' << util::format_double(c.dropout) << ','
        << (c.master ? std::to_string(c.master->size) : std::string()) << ','
        << (c.master ? util::format_double(c.master->dropout) : std::string()) << ','
        << util::format_double(t.best_f1) << ',' << t.stop_epoch << ',' << trial_status_name(t.status) << ',';
    for (std::size_t e = 0; e < t.val_f1.size(); ++e) {
      if (e) out << ';';
      out << util::format_double(t.val_f1[e]);
    }
    out << '\n';
  }
}

}  // namespace typegraph::training
