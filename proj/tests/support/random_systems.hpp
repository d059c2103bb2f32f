#pragma once

#include <random>
#include <string>
#include <vector>

#include "snp/checker.hpp"
#include "snp/system.hpp"

namespace snp::testing {

/// Structurally valid system with arbitrary (possibly nondeterministic)
/// rules; meant for syntax-level properties, not for simulation.
inline SnpSystem random_system(std::mt19937_64& rng, const std::string& name) {
  auto pick = [&](Count lo, Count hi) { return std::uniform_int_distribution<Count>(lo, hi)(rng); };
  const Count n = pick(1, 7);
  std::vector<Neuron> neurons;
  for (Count i = 0; i < n; ++i) {
    Neuron neuron{(pick(0, 1) ? "n" : "") + std::to_string(i) + (pick(0, 3) == 0 ? "-x'" : ""), pick(0, 3), {}};
    for (Count r = 0, rules = pick(0, 2); r < rules; ++r) {
      std::vector<RegexTerm> terms;
      for (Count t = 0, m = pick(1, 3); t < m; ++t) terms.push_back({pick(0, 9), pick(0, 4)});
      const Count consume = pick(1, 4);
      const Count produce = pick(0, consume);
      neuron.rules.push_back(Rule{SpikeRegex(terms), consume, produce, produce ? pick(0, 5) : 0});
    }
    neurons.push_back(std::move(neuron));
  }
  std::vector<Synapse> synapses;
  for (Count e = 0, m = pick(0, 2 * n); e < m; ++e) {
    const auto a = pick(0, n - 1), b = pick(0, n - 1);
    if (a != b) synapses.push_back({neurons[a].id, neurons[b].id});
  }
  const auto out = neurons[pick(0, n - 1)].id;
  return SnpSystem(name, std::move(neurons), std::move(synapses), out);
}

/// One to four routing constructs with delays in 1..8.
inline std::vector<RoutingInstance> random_composition(std::mt19937_64& rng) {
  auto pick = [&](Count lo, Count hi) { return std::uniform_int_distribution<Count>(lo, hi)(rng); };
  std::vector<RoutingInstance> parts;
  for (Count i = 0, n = pick(1, 4); i < n; ++i) {
    switch (pick(0, 3)) {
      case 0: {
        Sequential s;
        for (Count k = 0, m = pick(1, 3); k < m; ++k) s.delays.push_back(pick(1, 8));
        parts.emplace_back(s);
        break;
      }
      case 1:
        parts.emplace_back(Iteration{pick(1, 8), pick(0, 1) ? Placement::First : Placement::Second});
        break;
      case 2:
        parts.emplace_back(Join{pick(1, 8)});
        break;
      default: {
        Split s;
        const auto shape = pick(0, 2);
        if (shape != 1) s.d_left = pick(1, 8);
        if (shape != 0) s.d_right = pick(1, 8);
        parts.emplace_back(s);
        break;
      }
    }
  }
  return parts;
}

}  // namespace snp::testing
