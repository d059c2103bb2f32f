#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "snp/system.hpp"

namespace snp {

/// One entry n/t of a configuration vector, plus the emission held back by a
/// closed neuron. `pending_emission` is set iff `closed_remaining >= 1`.
struct NeuronState {
  Count spikes = 0;
  Count closed_remaining = 0;
  std::optional<Count> pending_emission;

  bool is_open() const noexcept { return closed_remaining == 0; }

  bool operator==(const NeuronState&) const = default;
};

/// C_k = <n_1/t_1, ..., n_m/t_m, n_e>
struct Configuration {
  std::vector<NeuronState> states;
  Count environment = 0;
  Count tick = 0;

  /// Equality ignoring the tick.
  bool same_state(const Configuration& other) const noexcept {
    return states == other.states && environment == other.environment;
  }

  bool operator==(const Configuration&) const = default;
};

struct Halted {
  Count at = 0;
  bool operator==(const Halted&) const = default;
};

struct BudgetExhausted {
  bool operator==(const BudgetExhausted&) const = default;
};

using Outcome = std::variant<Halted, BudgetExhausted>;

struct Trace {
  std::vector<Configuration> configurations;
  Outcome outcome = BudgetExhausted{};

  std::optional<Count> halted_at() const noexcept;
  const Configuration& final_configuration() const { return configurations.back(); }
};

/// Every neuron holds its initial spikes, all open, empty environment.
Configuration initial_configuration(const SnpSystem& system);

/// Rules of `neuron` applicable in `state`. Always empty while closed.
std::vector<std::size_t> enabled_rules(const Neuron& neuron, const NeuronState& state);

/// Advances one tick. Within a tick:
///   1. closed counters drop by one; a counter reaching 0 reopens the neuron
///      and releases its pending emission;
///   2. every neuron open at the start of the tick applies its enabled rule,
///      judged on its start-of-tick spike count. Delay 0 emits now, delay d
///      closes the neuron for d ticks;
///   3. emissions reach every target that is open after 1-2; closed targets
///      lose them. The output neuron also emits into the environment.
///
/// Throws NondeterministicChoice if a neuron has two enabled rules, and
/// std::invalid_argument if `config` does not fit `system`.
Configuration step(const SnpSystem& system, const Configuration& config);

/// All neurons open, nothing pending, no rule enabled anywhere.
bool is_halting(const SnpSystem& system, const Configuration& config);

/// Simulates from the initial configuration until the first halting
/// configuration or until `max_steps` ticks have been taken.
Trace run(const SnpSystem& system, Count max_steps);

}  // namespace snp
