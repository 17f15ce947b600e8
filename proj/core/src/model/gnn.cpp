#include "typegraph/model/gnn.hpp"

#include "typegraph/error.hpp"
#include "typegraph/graph/label.hpp"
#include "typegraph/graph/vocabulary.hpp"
#include "typegraph/numerics/checkpoint.hpp"

namespace typegraph::model {

namespace ops = numerics;

TypeModel::TypeModel(const ModelConfig& config, Rng& rng) : config_(config) {
  config_.validate();
  const std::size_t h = config_.hidden_size;
  const std::size_t categories = config_.edge_categories();
  encoder_ = Encoder(params_, config_, rng);

  if (config_.arch == Arch::gcn) {
    for (int l = 0; l < config_.n_layers; ++l) {
      const std::string prefix = "gnn.gcn" + std::to_string(l);
      std::vector<Linear> per_category;
      for (std::size_t c = 0; c < categories; ++c) {
        per_category.push_back(Linear::create(params_, prefix + ".category" + std::to_string(c), h, h, rng));
      }
      gcn_category_.push_back(std::move(per_category));
      gcn_self_.push_back(Linear::create(params_, prefix + ".self", h, h, rng, false));
    }
  } else {
    for (std::size_t c = 0; c < categories; ++c) {
      ggnn_category_.push_back(Linear::create(params_, "gnn.ggnn.category" + std::to_string(c), h, h, rng));
    }
    ggnn_gru_ = GruParams::create(params_, "gnn.ggnn.gru", h, h, rng);
    if (config_.master) {
      const std::size_t s = config_.master->size;
      master_write_ = Linear::create(params_, "gnn.master.write", h, s, rng, false);
      master_gru_ = GruParams::create(params_, "gnn.master.gru", s, s, rng);
      master_read_ = Linear::create(params_, "gnn.master.read", s, h, rng, false);
    }
  }

  for (int b = 0; b < config_.dec_blocks; ++b) {
    decoder_blocks_.push_back(FeedForwardBlock::create(params_, "decoder.block" + std::to_string(b), h, rng));
  }
  output_ = Linear::create(params_, "decoder.output", h, graph::kClassCount, rng);
}

ForwardMasks TypeModel::sample_masks(const graph::Batch& batch, Mode mode, Rng& rng) const {
  ForwardMasks m;
  const std::size_t n = batch.node_count;
  const std::size_t h = config_.hidden_size;
  if (config_.arch == Arch::gcn) {
    for (int l = 0; l < config_.n_layers; ++l) {
      std::vector<Tensor> per_category;
      for (std::size_t c = 0; c < config_.edge_categories(); ++c) {
        per_category.push_back(maybe_dropout_mask(n, h, config_.dropout, mode, rng));
      }
      m.gcn.push_back(std::move(per_category));
    }
    return m;
  }
  m.ggnn_message = maybe_dropout_mask(n, h, config_.dropout, mode, rng);
  m.ggnn_node = maybe_dropout_mask(n, h, config_.dropout, mode, rng);
  if (config_.master) {
    m.membership.assign(n, 1.0);
    if (mode == Mode::train && config_.master->dropout > 0.0) {
      for (double& v : m.membership) v = rng.bernoulli(1.0 - config_.master->dropout) ? 1.0 : 0.0;
    }
  }
  return m;
}

Var TypeModel::aggregate(Var x, const graph::Batch& batch, std::size_t category) {
  const graph::EdgeList& e = batch.edges[category % graph::kEdgeCategoryCount];
  if (category < graph::kEdgeCategoryCount) return ops::propagate(x, e.src, e.dst, batch.node_count);
  return ops::propagate(x, e.dst, e.src, batch.node_count);
}

Var TypeModel::gcn_layer(Binder& bind, Var x, const graph::Batch& batch, int layer,
                         const std::vector<Tensor>& masks) const {
  const auto l = static_cast<std::size_t>(layer);
  Var out = gcn_self_.at(l).apply(bind, x);
  for (std::size_t c = 0; c < gcn_category_.at(l).size(); ++c) {
    Var message = gcn_category_[l][c].apply(bind, aggregate(x, batch, c));
    out = ops::add(out, apply_mask(message, c < masks.size() ? masks[c] : Tensor()));
  }
  return ops::relu(out);
}

Var TypeModel::master_exchange(Binder& bind, Var x, const graph::Batch& batch, std::span<const double> membership,
                               Var& master) const {
  std::vector<int> members;
  std::vector<int> member_graph;
  std::vector<int> read_index(batch.node_count, -1);
  for (std::size_t i = 0; i < batch.node_count; ++i) {
    if (membership[i] != 0.0) {
      members.push_back(static_cast<int>(i));
      member_graph.push_back(batch.node_graph[i]);
      read_index[i] = batch.node_graph[i];
    }
  }
  Var written = ops::propagate(x, members, member_graph, batch.graph_count());
  master = ops::gru_cell(master_write_.apply(bind, written), master, master_gru_.bind(bind));
  return master_read_.apply(bind, ops::gather_rows(master, read_index));
}

Var TypeModel::ggnn_step(Binder& bind, Var x, const graph::Batch& batch, const ForwardMasks& masks,
                         std::optional<Var>& master) const {
  Var message = ggnn_category_.front().apply(bind, aggregate(x, batch, 0));
  for (std::size_t c = 1; c < ggnn_category_.size(); ++c) {
    message = ops::add(message, ggnn_category_[c].apply(bind, aggregate(x, batch, c)));
  }
  if (config_.master) {
    if (!master) throw UsageError("ggnn_step: master state missing");
    message = ops::add(message, master_exchange(bind, x, batch, masks.membership, *master));
  }
  return ops::gru_cell(apply_mask(message, masks.ggnn_message), apply_mask(x, masks.ggnn_node),
                       ggnn_gru_.bind(bind));
}

Var TypeModel::decode(Binder& bind, Var x, Mode mode, Rng& rng) const {
  for (const auto& block : decoder_blocks_) {
    x = block.apply(bind, x, mode, maybe_dropout_mask(x.rows(), config_.hidden_size, config_.dropout, mode, rng));
  }
  return ops::log_softmax(output_.apply(bind, x));
}

Var TypeModel::forward(Tape& tape, const graph::Batch& batch, Mode mode, Rng& rng, ForwardTrace* trace) const {
  if (batch.node_count == 0) throw UsageError("forward on an empty batch");
  Binder bind(tape);
  Var x = encoder_.encode(bind, batch, mode, rng);
  const ForwardMasks masks = sample_masks(batch, mode, rng);
  if (config_.arch == Arch::gcn) {
    for (int l = 0; l < config_.n_layers; ++l) x = gcn_layer(bind, x, batch, l, masks.gcn[static_cast<std::size_t>(l)]);
  } else {
    std::optional<Var> master;
    if (config_.master) master = tape.constant(Tensor::matrix(batch.graph_count(), config_.master->size, 0.0));
    for (int t = 0; t < config_.n_layers; ++t) {
      if (trace) {
        trace->step_message_masks.push_back(masks.ggnn_message);
        trace->step_node_masks.push_back(masks.ggnn_node);
      }
      x = ggnn_step(bind, x, batch, masks, master);
    }
  }
  if (trace) trace->masks = masks;
  return decode(bind, x, mode, rng);
}

std::size_t TypeModel::message_passing_parameter_count() const { return params_.trainable_scalar_count("gnn."); }

nlohmann::json TypeModel::checkpoint_metadata() const {
  nlohmann::json j;
  j["kind"] = "typegraph-model";
  j["config"] = to_json(config_);
  j["vocabulary"] = {{"node_types", graph::kNodeTypeCount},
                     {"prop_types", graph::kPropTypeCount},
                     {"edge_types", graph::kEdgeTypeCount},
                     {"chars", graph::CharVocabulary::kSize},
                     {"classes", graph::kClassCount}};
  return j;
}

void TypeModel::save(const std::filesystem::path& path, const nlohmann::json& extra) const {
  nlohmann::json meta = checkpoint_metadata();
  if (!extra.empty()) meta["extra"] = extra;
  numerics::save_checkpoint(path, meta, params_);
}

TypeModel TypeModel::load(const std::filesystem::path& path, nlohmann::json* metadata) {
  numerics::Checkpoint ck = numerics::load_checkpoint(path);
  const nlohmann::json& meta = ck.metadata;
  if (!meta.is_object() || meta.value("kind", "") != "typegraph-model") {
    throw CheckpointError(path.string() + " is not a typegraph model checkpoint");
  }
  ModelConfig config;
  try {
    config = model_config_from_json(meta.at("config"));
  } catch (const Error& e) {
    throw CheckpointError(std::string("checkpoint config invalid: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw CheckpointError(std::string("checkpoint config invalid: ") + e.what());
  }
  Rng rng(0);
  TypeModel model(config, rng);
  const nlohmann::json expected = model.checkpoint_metadata().at("vocabulary");
  if (!meta.contains("vocabulary") || meta.at("vocabulary") != expected) {
    throw CheckpointError("checkpoint vocabulary sizes " + meta.value("vocabulary", nlohmann::json()).dump() +
                          " do not match this build " + expected.dump() + " (version mismatch)");
  }
  if (ck.parameters.size() != model.params_.size()) {
    throw CheckpointError("checkpoint has " + std::to_string(ck.parameters.size()) + " parameters, model expects " +
                          std::to_string(model.params_.size()));
  }
  for (const auto& p : model.params_) {
    const Parameter* stored = ck.parameters.find(p->name);
    if (!stored) throw CheckpointError("checkpoint lacks parameter '" + p->name + "'");
    if (stored->value.shape() != p->value.shape()) {
      throw CheckpointError("parameter '" + p->name + "' has shape " + numerics::to_string(stored->value.shape()) +
                            ", expected " + numerics::to_string(p->value.shape()));
    }
    p->value = stored->value;
  }
  if (metadata) *metadata = meta;
  return model;
}

LossResult masked_loss(Var log_probs, const graph::Batch& batch) {
  std::vector<int> targets(batch.node_count, 0);
  std::vector<double> weights(batch.node_count, 0.0);
  LossResult r;
  for (std::size_t i = 0; i < batch.node_count; ++i) {
    if (batch.labels[i] != static_cast<int>(graph::LabelClass::unknown)) {
      targets[i] = batch.labels[i];
      weights[i] = 1.0;
      ++r.eligible_nodes;
    }
  }
  r.value = ops::masked_nll(log_probs, targets, weights);
  r.no_eligible_nodes = r.eligible_nodes == 0;
  return r;
}

}  // namespace typegraph::model
