#include "snp/system.hpp"

#include <algorithm>
#include <set>

namespace snp {

std::optional<std::string> Rule::defect() const {
  if (consume < 1) return "consume must be >= 1";
  if (produce > 0 && consume < produce) return "consume must be >= produce";
  if (produce == 0 && delay > 0) return "forgetting rules cannot be delayed";
  return std::nullopt;
}

bool Neuron::has_delay() const noexcept {
  return std::any_of(rules.begin(), rules.end(), [](const Rule& r) { return r.delay > 0; });
}

SnpSystem::SnpSystem(std::string name, std::vector<Neuron> neurons, std::vector<Synapse> synapses,
                     std::string output)
    : name_(std::move(name)), neurons_(std::move(neurons)), output_(std::move(output)) {
  for (std::size_t i = 0; i < neurons_.size(); ++i) index_.try_emplace(neurons_[i].id, i);

  std::set<Synapse> seen;
  for (auto& s : synapses) {
    if (seen.insert(s).second) synapses_.push_back(std::move(s));
  }

  targets_.resize(neurons_.size());
  for (const auto& s : synapses_) {
    auto from = index_of(s.from);
    auto to = index_of(s.to);
    if (from && to) targets_[*from].push_back(*to);
  }
  output_index_ = index_of(output_);
}

std::optional<std::size_t> SnpSystem::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool SnpSystem::has_delays() const noexcept {
  return std::any_of(neurons_.begin(), neurons_.end(),
                     [](const Neuron& n) { return n.has_delay(); });
}

bool SnpSystem::operator==(const SnpSystem& other) const {
  if (name_ != other.name_ || neurons_ != other.neurons_ || output_ != other.output_) return false;
  std::set<Synapse> a(synapses_.begin(), synapses_.end());
  std::set<Synapse> b(other.synapses_.begin(), other.synapses_.end());
  return a == b;
}

std::vector<ValidationIssue> validate(const SnpSystem& system) {
  using Kind = ValidationIssue::Kind;
  std::vector<ValidationIssue> issues;

  std::set<std::string> ids;
  for (const auto& neuron : system.neurons()) {
    if (!ids.insert(neuron.id).second) issues.push_back({Kind::DuplicateNeuron, neuron.id, {}});
    for (std::size_t r = 0; r < neuron.rules.size(); ++r) {
      if (auto defect = neuron.rules[r].defect()) {
        issues.push_back({Kind::InvalidRule, neuron.id, "rule " + std::to_string(r) + ": " + *defect});
      }
    }
  }

  for (const auto& s : system.synapses()) {
    if (s.from == s.to) {
      issues.push_back({Kind::SelfLoop, s.from, {}});
      continue;
    }
    for (const auto* end : {&s.from, &s.to}) {
      if (!ids.count(*end)) {
        issues.push_back({Kind::DanglingSynapse, s.from + " -> " + s.to, "unknown neuron " + *end});
      }
    }
  }

  if (!system.output_index()) issues.push_back({Kind::UnknownOutput, system.output(), {}});
  return issues;
}

}  // namespace snp
