#include "typegraph/numerics/parameters.hpp"

#include <cmath>

#include "typegraph/error.hpp"

namespace typegraph::numerics {

ParameterStore::ParameterStore(const ParameterStore& other) : index_(other.index_) {
  entries_.reserve(other.entries_.size());
  for (const auto& p : other.entries_) entries_.push_back(std::make_unique<Parameter>(*p));
}

ParameterStore& ParameterStore::operator=(const ParameterStore& other) {
  if (this != &other) {
    ParameterStore copy(other);
    *this = std::move(copy);
  }
  return *this;
}

Parameter& ParameterStore::add(const std::string& name, Tensor init, bool trainable) {
  if (index_.contains(name)) throw UsageError("duplicate parameter name '" + name + "'");
  auto p = std::make_unique<Parameter>();
  p->name = name;
  p->grad = Tensor(init.shape(), 0.0);
  p->value = std::move(init);
  p->trainable = trainable;
  index_.emplace(name, entries_.size());
  entries_.push_back(std::move(p));
  return *entries_.back();
}

Parameter& ParameterStore::at(const std::string& name) {
  if (auto* p = find(name)) return *p;
  throw UsageError("unknown parameter '" + name + "'");
}

const Parameter& ParameterStore::at(const std::string& name) const {
  if (const auto* p = find(name)) return *p;
  throw UsageError("unknown parameter '" + name + "'");
}

Parameter* ParameterStore::find(const std::string& name) {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : entries_[it->second].get();
}

const Parameter* ParameterStore::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : entries_[it->second].get();
}

void ParameterStore::zero_grad() {
  for (auto& p : entries_) p->grad.fill(0.0);
}

std::size_t ParameterStore::trainable_scalar_count(const std::string& prefix) const {
  std::size_t n = 0;
  for (const auto& p : entries_) {
    if (p->trainable && p->name.starts_with(prefix)) n += p->value.size();
  }
  return n;
}

void ParameterStore::copy_values_from(const ParameterStore& other) {
  for (auto& p : entries_) {
    const Parameter& src = other.at(p->name);
    require_same_shape(p->value, src.value, p->name.c_str());
    p->value = src.value;
  }
}

Tensor glorot_uniform(std::size_t fan_in, std::size_t fan_out, Rng& rng) {
  const double a = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
  Tensor t = Tensor::matrix(fan_in, fan_out);
  for (double& v : t.data()) v = rng.uniform(-a, a);
  return t;
}

}  // namespace typegraph::numerics
