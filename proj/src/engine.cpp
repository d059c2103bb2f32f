#include "snp/engine.hpp"

#include <stdexcept>
#include <utility>

namespace snp {

std::optional<Count> Trace::halted_at() const noexcept {
  if (const auto* h = std::get_if<Halted>(&outcome)) return h->at;
  return std::nullopt;
}

Configuration initial_configuration(const SnpSystem& system) {
  Configuration config;
  config.states.reserve(system.size());
  for (const auto& neuron : system.neurons()) config.states.push_back({neuron.initial_spikes, 0, {}});
  return config;
}

std::vector<std::size_t> enabled_rules(const Neuron& neuron, const NeuronState& state) {
  std::vector<std::size_t> out;
  if (!state.is_open()) return out;
  for (std::size_t r = 0; r < neuron.rules.size(); ++r) {
    const auto& rule = neuron.rules[r];
    if (state.spikes >= rule.consume && rule.guard.matches(state.spikes)) out.push_back(r);
  }
  return out;
}

Configuration step(const SnpSystem& system, const Configuration& config) {
  if (config.states.size() != system.size()) {
    throw std::invalid_argument("configuration has " + std::to_string(config.states.size()) +
                                " neurons, system has " + std::to_string(system.size()));
  }

  Configuration next = config;
  next.tick = config.tick + 1;

  // (neuron index, spikes emitted) delivered in phase 3
  std::vector<std::pair<std::size_t, Count>> pool;

  for (std::size_t i = 0; i < next.states.size(); ++i) {
    auto& state = next.states[i];
    if (state.closed_remaining == 0) continue;
    if (--state.closed_remaining == 0) {
      pool.emplace_back(i, state.pending_emission.value_or(0));
      state.pending_emission.reset();
    }
  }

  for (std::size_t i = 0; i < system.size(); ++i) {
    const auto& before = config.states[i];
    if (!before.is_open()) continue;
    const auto& neuron = system.neuron(i);
    const auto enabled = enabled_rules(neuron, before);
    if (enabled.empty()) continue;
    if (enabled.size() > 1) throw NondeterministicChoice(neuron.id, next.tick);

    const auto& rule = neuron.rules[enabled.front()];
    auto& state = next.states[i];
    state.spikes -= rule.consume;
    if (rule.delay == 0) {
      if (rule.produce > 0) pool.emplace_back(i, rule.produce);
    } else {
      state.closed_remaining = rule.delay;
      state.pending_emission = rule.produce;
    }
  }

  const auto out = system.output_index();
  for (const auto& [source, spikes] : pool) {
    for (auto target : system.targets(source)) {
      auto& state = next.states[target];
      if (state.is_open()) state.spikes += spikes;
    }
    if (out && *out == source) next.environment += spikes;
  }
  return next;
}

bool is_halting(const SnpSystem& system, const Configuration& config) {
  for (std::size_t i = 0; i < system.size(); ++i) {
    const auto& state = config.states.at(i);
    if (!state.is_open() || state.pending_emission) return false;
    if (!enabled_rules(system.neuron(i), state).empty()) return false;
  }
  return true;
}

Trace run(const SnpSystem& system, Count max_steps) {
  Trace trace;
  trace.configurations.push_back(initial_configuration(system));
  if (is_halting(system, trace.configurations.back())) {
    trace.outcome = Halted{0};
    return trace;
  }
  for (Count k = 0; k < max_steps; ++k) {
    trace.configurations.push_back(step(system, trace.configurations.back()));
    const auto& current = trace.configurations.back();
    if (is_halting(system, current)) {
      trace.outcome = Halted{current.tick};
      return trace;
    }
  }
  trace.outcome = BudgetExhausted{};
  return trace;
}

}  // namespace snp
