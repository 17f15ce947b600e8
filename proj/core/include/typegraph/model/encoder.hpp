#pragma once

#include <span>
#include <string>
#include <vector>

#include "typegraph/graph/batch.hpp"
#include "typegraph/model/layers.hpp"
#include "typegraph/model/model_config.hpp"

namespace typegraph::model {

/// Node features -> initial node states [N, H].
///
/// types: sum of rows of a 144 x H table; property: one-hot(107) through a
/// linear layer (bias only when absent); value: 16 characters through a
/// 104 x H lookup table and a GRU from a zero state. The three are
/// concatenated, projected 3H -> H, then run through enc_blocks FF blocks.
class Encoder {
 public:
  Encoder() = default;
  Encoder(ParameterStore& store, const ModelConfig& config, Rng& rng);

  /// Throws UsageError for a node with no type.
  Var embed_types(Binder& bind, const std::vector<std::vector<int>>& type_indices) const;
  /// property[i] = -1 means no property.
  Var embed_property(Binder& bind, std::span<const int> property) const;
  /// Identical strings are run through the GRU once.
  Var embed_strings(Binder& bind, std::span<const std::string> values) const;

  Var encode(Binder& bind, const graph::Batch& batch, Mode mode, Rng& rng) const;

 private:
  std::size_t hidden_ = 0;
  double dropout_ = 0.0;
  Parameter* type_table_ = nullptr;
  Linear property_;
  Parameter* char_table_ = nullptr;
  GruParams char_gru_;
  Linear projection_;
  std::vector<FeedForwardBlock> blocks_;
};

}  // namespace typegraph::model
