#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace typegraph::model {

enum class Arch { gcn, ggnn };

std::string_view arch_name(Arch a) noexcept;
/// "gcn" or "ggnn" (case-insensitive); throws ConfigError("arch") otherwise.
Arch parse_arch(std::string_view name);

struct MasterConfig {
  std::size_t size = 20;
  double dropout = 0.0;
  bool operator==(const MasterConfig&) const = default;
};

struct ModelConfig {
  Arch arch = Arch::ggnn;
  std::size_t hidden_size = 128;
  int enc_blocks = 1;
  int dec_blocks = 1;
  int n_layers = 5;
  double dropout = 0.0;
  std::optional<MasterConfig> master;
  /// Adds reversed copies of every edge category with their own weights.
  bool backward_edges = false;

  /// Throws ConfigError naming the first offending field.
  void validate() const;

  std::size_t edge_categories() const noexcept { return backward_edges ? 4 : 2; }

  bool operator==(const ModelConfig&) const = default;
};

/// No encoding block, hidden 64, dropout 0.1, 7 layers, 1 decoding block.
ModelConfig default_gcn_config();
/// 1 encoding block, hidden 128, no dropout, 5 layers, no master, 1 decoding block.
ModelConfig default_ggnn_config();
ModelConfig default_config(Arch arch);
/// Learning rates picked with the finder: 0.0004 (GCN), 0.001 (GGNN).
double default_learning_rate(Arch arch) noexcept;

nlohmann::json to_json(const ModelConfig& config);
/// Missing keys keep the defaults of `base`; unknown keys are rejected.
ModelConfig model_config_from_json(const nlohmann::json& j, const ModelConfig& base);
ModelConfig model_config_from_json(const nlohmann::json& j);

}  // namespace typegraph::model
