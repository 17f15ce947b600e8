#include "typegraph/model/encoder.hpp"

#include <unordered_map>

#include "typegraph/error.hpp"
#include "typegraph/graph/vocabulary.hpp"

namespace typegraph::model {

namespace ops = numerics;
using graph::CharVocabulary;

Encoder::Encoder(ParameterStore& store, const ModelConfig& config, Rng& rng)
    : hidden_(config.hidden_size), dropout_(config.dropout) {
  const std::size_t h = hidden_;
  type_table_ = &store.add("encoder.type_embedding", numerics::glorot_uniform(graph::kNodeTypeCount, h, rng));
  property_ = Linear::create(store, "encoder.property", graph::kPropTypeCount, h, rng);
  char_table_ = &store.add("encoder.char_embedding", numerics::glorot_uniform(CharVocabulary::kSize, h, rng));
  char_gru_ = GruParams::create(store, "encoder.char_gru", h, h, rng);
  projection_ = Linear::create(store, "encoder.projection", 3 * h, h, rng);
  for (int b = 0; b < config.enc_blocks; ++b) {
    blocks_.push_back(FeedForwardBlock::create(store, "encoder.block" + std::to_string(b), h, rng));
  }
}

Var Encoder::embed_types(Binder& bind, const std::vector<std::vector<int>>& type_indices) const {
  for (std::size_t i = 0; i < type_indices.size(); ++i) {
    if (type_indices[i].empty()) throw UsageError("node " + std::to_string(i) + " has no type");
  }
  return ops::embedding_bag(bind(*type_table_), type_indices);
}

Var Encoder::embed_property(Binder& bind, std::span<const int> property) const {
  for (int p : property) {
    if (p >= static_cast<int>(graph::kPropTypeCount)) throw UsageError("property index out of range");
  }
  Var rows = ops::gather_rows(bind(*property_.weight), property);
  return ops::add_row(rows, bind(*property_.bias));
}

Var Encoder::embed_strings(Binder& bind, std::span<const std::string> values) const {
  std::unordered_map<std::string_view, int> unique_index;
  std::vector<std::string_view> unique;
  std::vector<int> node_to_unique;
  node_to_unique.reserve(values.size());
  for (const auto& v : values) {
    auto [it, inserted] = unique_index.emplace(v, static_cast<int>(unique.size()));
    if (inserted) unique.push_back(v);
    node_to_unique.push_back(it->second);
  }
  std::vector<std::vector<int>> encoded;
  encoded.reserve(unique.size());
  for (auto s : unique) encoded.push_back(CharVocabulary::encode(s));

  Tape& tape = bind.tape();
  const numerics::GruWeights w = char_gru_.bind(bind);
  Var table = bind(*char_table_);
  Var state = tape.constant(Tensor::matrix(unique.size(), hidden_, 0.0));
  std::vector<int> column(unique.size());
  for (std::size_t t = 0; t < CharVocabulary::kStringLength; ++t) {
    for (std::size_t u = 0; u < unique.size(); ++u) column[u] = encoded[u][t];
    state = ops::gru_cell(ops::embedding_lookup(table, column), state, w);
  }
  return ops::gather_rows(state, node_to_unique);
}

Var Encoder::encode(Binder& bind, const graph::Batch& batch, Mode mode, Rng& rng) const {
  const Var parts[] = {embed_types(bind, batch.type_indices), embed_property(bind, batch.property),
                       embed_strings(bind, batch.values)};
  Var x = projection_.apply(bind, ops::concat_cols(parts));
  for (const auto& block : blocks_) {
    x = block.apply(bind, x, mode, maybe_dropout_mask(x.rows(), hidden_, dropout_, mode, rng));
  }
  return x;
}

}  // namespace typegraph::model
