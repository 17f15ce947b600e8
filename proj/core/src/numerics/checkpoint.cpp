#include "typegraph/numerics/checkpoint.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>

#include "typegraph/error.hpp"

namespace typegraph::numerics {
namespace {

constexpr std::array<char, 8> kMagic{'T', 'Y', 'P', 'E', 'G', 'R', 'P', 'H'};

template <typename T>
void put(std::ostream& out, T value) {
  std::array<char, sizeof(T)> bytes{};
  std::memcpy(bytes.data(), &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  out.write(bytes.data(), bytes.size());
}

template <typename T>
T get(std::istream& in) {
  std::array<char, sizeof(T)> bytes{};
  if (!in.read(bytes.data(), bytes.size())) throw CheckpointError("checkpoint truncated");
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  T value;
  std::memcpy(&value, bytes.data(), sizeof(T));
  return value;
}

std::string get_string(std::istream& in, std::uint64_t length) {
  if (length > (1ULL << 32)) throw CheckpointError("checkpoint string length implausible");
  std::string s(length, '\0');
  if (!in.read(s.data(), static_cast<std::streamsize>(length))) throw CheckpointError("checkpoint truncated");
  return s;
}

}  // namespace

void write_checkpoint(std::ostream& out, const nlohmann::json& metadata, const ParameterStore& params) {
  out.write(kMagic.data(), kMagic.size());
  put<std::uint32_t>(out, kCheckpointFormatVersion);
  const std::string meta = metadata.dump();
  put<std::uint64_t>(out, meta.size());
  out.write(meta.data(), static_cast<std::streamsize>(meta.size()));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(params.size()));
  for (const auto& p : params) {
    put<std::uint32_t>(out, static_cast<std::uint32_t>(p->name.size()));
    out.write(p->name.data(), static_cast<std::streamsize>(p->name.size()));
    put<std::uint8_t>(out, p->trainable ? 1 : 0);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(p->value.rank()));
    for (std::size_t d : p->value.shape()) put<std::uint64_t>(out, d);
    for (double v : p->value.data()) put<double>(out, v);
  }
  if (!out) throw CheckpointError("failed writing checkpoint");
}

void save_checkpoint(const std::filesystem::path& path, const nlohmann::json& metadata, const ParameterStore& params) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CheckpointError("cannot open checkpoint for writing: " + path.string());
  write_checkpoint(out, metadata, params);
}

Checkpoint read_checkpoint(std::istream& in) {
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) throw CheckpointError("not a typegraph checkpoint");
  Checkpoint ck;
  ck.format_version = get<std::uint32_t>(in);
  if (ck.format_version != kCheckpointFormatVersion) {
    throw CheckpointError("unsupported checkpoint format version " + std::to_string(ck.format_version) +
                          " (expected " + std::to_string(kCheckpointFormatVersion) + ")");
  }
  const std::string meta = get_string(in, get<std::uint64_t>(in));
  try {
    ck.metadata = nlohmann::json::parse(meta);
  } catch (const nlohmann::json::exception& e) {
    throw CheckpointError(std::string("checkpoint metadata is not valid JSON: ") + e.what());
  }
  const auto count = get<std::uint32_t>(in);
  for (std::uint32_t k = 0; k < count; ++k) {
    std::string name = get_string(in, get<std::uint32_t>(in));
    const bool trainable = get<std::uint8_t>(in) != 0;
    const auto rank = get<std::uint32_t>(in);
    if (rank > 8) throw CheckpointError("parameter '" + name + "' has implausible rank");
    Shape shape(rank);
    for (auto& d : shape) d = static_cast<std::size_t>(get<std::uint64_t>(in));
    Tensor value(shape);
    for (double& v : value.data()) v = get<double>(in);
    ck.parameters.add(name, std::move(value), trainable);
  }
  return ck;
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("cannot open checkpoint: " + path.string());
  return read_checkpoint(in);
}

}  // namespace typegraph::numerics
