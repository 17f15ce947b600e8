#include "typegraph/model/model_config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "typegraph/error.hpp"

namespace typegraph::model {

std::string_view arch_name(Arch a) noexcept { return a == Arch::gcn ? "gcn" : "ggnn"; }

Arch parse_arch(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "gcn") return Arch::gcn;
  if (lower == "ggnn") return Arch::ggnn;
  throw ConfigError("arch", "expected gcn or ggnn, got '" + std::string(name) + "'");
}

namespace {

bool in_unit_range(double x, double hi) { return std::isfinite(x) && x >= 0.0 && x <= hi; }

}  // namespace

void ModelConfig::validate() const {
  if (hidden_size < 1) throw ConfigError("hidden_size", "must be at least 1");
  if (enc_blocks < 0 || enc_blocks > 3) throw ConfigError("enc_blocks", "must be in 0..3");
  if (dec_blocks < 0 || dec_blocks > 3) throw ConfigError("dec_blocks", "must be in 0..3");
  if (n_layers < 1 || n_layers > 10) throw ConfigError("n_layers", "must be in 1..10, got " + std::to_string(n_layers));
  if (!in_unit_range(dropout, 0.5)) throw ConfigError("dropout", "must be in [0, 0.5]");
  if (master) {
    if (arch != Arch::ggnn) throw ConfigError("master", "a master node is only supported by ggnn");
    if (master->size < 20 || master->size > 200 || master->size % 20 != 0) {
      throw ConfigError("master.size", "must be one of 20, 40, ..., 200");
    }
    if (!in_unit_range(master->dropout, 0.5)) throw ConfigError("master.dropout", "must be in [0, 0.5]");
  }
}

ModelConfig default_gcn_config() {
  ModelConfig c;
  c.arch = Arch::gcn;
  c.enc_blocks = 0;
  c.hidden_size = 64;
  c.dropout = 0.1;
  c.n_layers = 7;
  c.dec_blocks = 1;
  return c;
}

ModelConfig default_ggnn_config() {
  ModelConfig c;
  c.arch = Arch::ggnn;
  c.enc_blocks = 1;
  c.hidden_size = 128;
  c.dropout = 0.0;
  c.n_layers = 5;
  c.dec_blocks = 1;
  return c;
}

ModelConfig default_config(Arch arch) { return arch == Arch::gcn ? default_gcn_config() : default_ggnn_config(); }

double default_learning_rate(Arch arch) noexcept { return arch == Arch::gcn ? 0.0004 : 0.001; }

nlohmann::json to_json(const ModelConfig& c) {
  nlohmann::json j;
  j["arch"] = std::string(arch_name(c.arch));
  j["hidden_size"] = c.hidden_size;
  j["enc_blocks"] = c.enc_blocks;
  j["dec_blocks"] = c.dec_blocks;
  j["n_layers"] = c.n_layers;
  j["dropout"] = c.dropout;
  if (c.master) {
    j["master"] = {{"size", c.master->size}, {"dropout", c.master->dropout}};
  } else {
    j["master"] = nullptr;
  }
  j["backward_edges"] = c.backward_edges;
  return j;
}

namespace {

template <typename T>
T field(const nlohmann::json& j, const char* name) {
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(name, "has the wrong type");
  }
}

}  // namespace

ModelConfig model_config_from_json(const nlohmann::json& j, const ModelConfig& base) {
  if (!j.is_object()) throw ConfigError("config", "must be a JSON object");
  ModelConfig c = base;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key == "arch") {
      c.arch = parse_arch(field<std::string>(j, "arch"));
    } else if (key == "hidden_size") {
      const auto h = field<long long>(j, "hidden_size");
      if (h < 1) throw ConfigError("hidden_size", "must be at least 1");
      c.hidden_size = static_cast<std::size_t>(h);
    } else if (key == "enc_blocks") {
      c.enc_blocks = field<int>(j, "enc_blocks");
    } else if (key == "dec_blocks") {
      c.dec_blocks = field<int>(j, "dec_blocks");
    } else if (key == "n_layers") {
      c.n_layers = field<int>(j, "n_layers");
    } else if (key == "dropout") {
      c.dropout = field<double>(j, "dropout");
    } else if (key == "master") {
      if (it->is_null()) {
        c.master.reset();
      } else {
        if (!it->is_object()) throw ConfigError("master", "must be an object or null");
        MasterConfig m;
        if (it->contains("size")) {
          const auto s = field<long long>(*it, "size");
          if (s < 0) throw ConfigError("master.size", "must be one of 20, 40, ..., 200");
          m.size = static_cast<std::size_t>(s);
        }
        if (it->contains("dropout")) m.dropout = field<double>(*it, "dropout");
        c.master = m;
      }
    } else if (key == "backward_edges") {
      c.backward_edges = field<bool>(j, "backward_edges");
    } else {
      throw ConfigError(key, "unknown configuration field");
    }
  }
  c.validate();
  return c;
}

ModelConfig model_config_from_json(const nlohmann::json& j) {
  Arch arch = Arch::ggnn;
  if (j.is_object() && j.contains("arch")) arch = parse_arch(field<std::string>(j, "arch"));
  return model_config_from_json(j, default_config(arch));
}

}  // namespace typegraph::model
