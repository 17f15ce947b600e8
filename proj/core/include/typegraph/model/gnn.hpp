#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "typegraph/graph/batch.hpp"
#include "typegraph/model/encoder.hpp"
#include "typegraph/model/layers.hpp"
#include "typegraph/model/model_config.hpp"

namespace typegraph::model {

/// Dropout masks drawn for one forward pass. Empty tensors mean "keep all".
struct ForwardMasks {
  /// GCN: per layer, per edge category, [N, H].
  std::vector<std::vector<Tensor>> gcn;
  /// GGNN: shared by every step, [N, H] each.
  Tensor ggnn_message;
  Tensor ggnn_node;
  /// Master-node membership per node (1 member, 0 not).
  std::vector<double> membership;
};

/// What a forward pass actually used, for inspection in tests.
struct ForwardTrace {
  ForwardMasks masks;
  /// GGNN: the message / node masks seen at each step.
  std::vector<Tensor> step_message_masks;
  std::vector<Tensor> step_node_masks;
};

struct LossResult {
  Var value;
  std::size_t eligible_nodes = 0;
  /// Set when no node had a known label; value is then a constant 0.
  bool no_eligible_nodes = false;
};

/// Encoder, GCN or GGNN message passing, and decoder.
class TypeModel {
 public:
  /// Validates the config (ConfigError) and initializes all parameters from `rng`.
  TypeModel(const ModelConfig& config, Rng& rng);
  // Layers hold pointers into params_, so copies would alias the original.
  TypeModel(const TypeModel&) = delete;
  TypeModel& operator=(const TypeModel&) = delete;
  TypeModel(TypeModel&&) noexcept = default;
  TypeModel& operator=(TypeModel&&) noexcept = default;

  const ModelConfig& config() const noexcept { return config_; }
  ParameterStore& parameters() noexcept { return params_; }
  const ParameterStore& parameters() const noexcept { return params_; }
  const Encoder& encoder() const noexcept { return encoder_; }

  /// Log-probabilities [N, 8].
  Var forward(Tape& tape, const graph::Batch& batch, Mode mode, Rng& rng, ForwardTrace* trace = nullptr) const;

  ForwardMasks sample_masks(const graph::Batch& batch, Mode mode, Rng& rng) const;

  /// Sum of x[src] into row dst over the edges of category c (c >= 2: reversed).
  static Var aggregate(Var x, const graph::Batch& batch, std::size_t category);

  Var gcn_layer(Binder& bind, Var x, const graph::Batch& batch, int layer, const std::vector<Tensor>& masks) const;
  /// One GGNN update. `master` (when configured) is updated in place.
  Var ggnn_step(Binder& bind, Var x, const graph::Batch& batch, const ForwardMasks& masks,
                std::optional<Var>& master) const;
  /// Writes members into the master state and returns the per-node read term [N, H].
  Var master_exchange(Binder& bind, Var x, const graph::Batch& batch, std::span<const double> membership,
                      Var& master) const;
  Var decode(Binder& bind, Var x, Mode mode, Rng& rng) const;

  /// Trainable scalars in the message-passing stage only.
  std::size_t message_passing_parameter_count() const;

  nlohmann::json checkpoint_metadata() const;
  void save(const std::filesystem::path& path, const nlohmann::json& extra = nlohmann::json::object()) const;
  /// Throws CheckpointError when the stored vocabulary sizes or parameters do not match.
  static TypeModel load(const std::filesystem::path& path, nlohmann::json* metadata = nullptr);

 private:
  ModelConfig config_;
  ParameterStore params_;
  Encoder encoder_;
  std::vector<std::vector<Linear>> gcn_category_;  // [layer][category]
  std::vector<Linear> gcn_self_;
  std::vector<Linear> ggnn_category_;
  GruParams ggnn_gru_;
  Linear master_write_;
  Linear master_read_;
  GruParams master_gru_;
  std::vector<FeedForwardBlock> decoder_blocks_;
  Linear output_;
};

/// Mean NLL over nodes whose label is known (explicit nodes included).
LossResult masked_loss(Var log_probs, const graph::Batch& batch);

}  // namespace typegraph::model
