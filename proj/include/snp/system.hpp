#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "snp/errors.hpp"
#include "snp/spike_regex.hpp"

namespace snp {

/// E/a^c -> a^b;d
struct Rule {
  SpikeRegex guard = SpikeRegex::plus();
  Count consume = 1;
  Count produce = 1;
  Count delay = 0;

  bool is_forgetting() const noexcept { return produce == 0; }

  /// Describes the first violated rule invariant, if any.
  std::optional<std::string> defect() const;

  bool operator==(const Rule&) const = default;
};

struct Neuron {
  std::string id;
  Count initial_spikes = 0;
  std::vector<Rule> rules;

  bool has_delay() const noexcept;

  bool operator==(const Neuron&) const = default;
};

struct Synapse {
  std::string from;
  std::string to;

  auto operator<=>(const Synapse&) const = default;
};

/// Immutable neuron/synapse graph with a designated output neuron.
///
/// Construction never fails on structural defects (self-loops, dangling
/// endpoints, unknown output); those are reported by validate(). The engine
/// ignores dangling synapses. Duplicate synapses are collapsed, keeping the
/// first occurrence's position.
class SnpSystem {
 public:
  SnpSystem() = default;
  SnpSystem(std::string name, std::vector<Neuron> neurons, std::vector<Synapse> synapses,
            std::string output);

  const std::string& name() const noexcept { return name_; }
  std::span<const Neuron> neurons() const noexcept { return neurons_; }
  std::span<const Synapse> synapses() const noexcept { return synapses_; }
  const std::string& output() const noexcept { return output_; }

  std::size_t size() const noexcept { return neurons_.size(); }
  const Neuron& neuron(std::size_t index) const { return neurons_.at(index); }

  std::optional<std::size_t> index_of(std::string_view id) const;
  std::optional<std::size_t> output_index() const noexcept { return output_index_; }

  /// Indices of neurons reached by a synapse from neuron `index`.
  std::span<const std::size_t> targets(std::size_t index) const { return targets_.at(index); }

  bool has_delays() const noexcept;

  /// Structural equality: same name, neuron list, output and synapse set.
  bool operator==(const SnpSystem& other) const;

 private:
  std::string name_;
  std::vector<Neuron> neurons_;
  std::vector<Synapse> synapses_;
  std::string output_;

  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> targets_;
  std::optional<std::size_t> output_index_;
};

/// Structural issues of a system; empty means well-formed.
std::vector<ValidationIssue> validate(const SnpSystem& system);

}  // namespace snp
