#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include <nlohmann/json.hpp>

#include "typegraph/numerics/parameters.hpp"

namespace typegraph::numerics {

inline constexpr std::uint32_t kCheckpointFormatVersion = 1;

/// Binary checkpoint container, little-endian throughout:
///
///   char[8]  magic "TYPEGRPH"
///   u32      format version
///   u64      metadata length, then that many bytes of UTF-8 JSON
///            (the model configuration and vocabulary sizes)
///   u32      parameter count, then per parameter:
///            u32 name length, name bytes, u8 trainable,
///            u32 rank, u64 dims[rank], f64 data[product(dims)]
struct Checkpoint {
  std::uint32_t format_version = kCheckpointFormatVersion;
  nlohmann::json metadata;
  ParameterStore parameters;
};

void write_checkpoint(std::ostream& out, const nlohmann::json& metadata, const ParameterStore& params);
void save_checkpoint(const std::filesystem::path& path, const nlohmann::json& metadata, const ParameterStore& params);

/// Throws CheckpointError on a bad magic, unsupported version or truncation.
Checkpoint read_checkpoint(std::istream& in);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace typegraph::numerics
