#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "typegraph/numerics/rng.hpp"
#include "typegraph/numerics/tensor.hpp"

namespace typegraph::numerics {

/// A named tensor and its gradient accumulator.
///
/// Non-trainable entries (batch-norm running statistics) live in the same
/// store so that checkpoints capture them, but the optimizer skips them.
struct Parameter {
  std::string name;
  Tensor value;
  Tensor grad;
  bool trainable = true;
};

/// Ordered map from parameter path to Parameter. Addresses are stable.
class ParameterStore {
 public:
  ParameterStore() = default;
  ParameterStore(const ParameterStore& other);
  ParameterStore& operator=(const ParameterStore& other);
  ParameterStore(ParameterStore&&) noexcept = default;
  ParameterStore& operator=(ParameterStore&&) noexcept = default;

  /// Registers a new entry. Throws UsageError on a duplicate name.
  Parameter& add(const std::string& name, Tensor init, bool trainable = true);

  Parameter& at(const std::string& name);
  const Parameter& at(const std::string& name) const;
  Parameter* find(const std::string& name);
  const Parameter* find(const std::string& name) const;

  std::size_t size() const noexcept { return entries_.size(); }
  Parameter& operator[](std::size_t i) { return *entries_[i]; }
  const Parameter& operator[](std::size_t i) const { return *entries_[i]; }

  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }
  auto begin() const { return entries_.cbegin(); }
  auto end() const { return entries_.cend(); }

  void zero_grad();

  /// Scalar count over trainable entries, optionally restricted to a name prefix.
  std::size_t trainable_scalar_count(const std::string& prefix = "") const;

  /// Copies values (not gradients) from `other`; names and shapes must match.
  void copy_values_from(const ParameterStore& other);

 private:
  std::vector<std::unique_ptr<Parameter>> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// uniform(-a, a) with a = sqrt(6 / (fan_in + fan_out)).
Tensor glorot_uniform(std::size_t fan_in, std::size_t fan_out, Rng& rng);

}  // namespace typegraph::numerics
