#include "snp/checker.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace snp {

namespace {

Rule relay(Count delay = 0) { return Rule{SpikeRegex::plus(), 1, 1, delay}; }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_delay(Count d, const char* what) {
  if (d < 1) throw std::invalid_argument(std::string(what) + ": delays must be >= 1");
}

SnpSystem generate_sequential(const Sequential& seq) {
  if (seq.delays.empty()) throw std::invalid_argument("sequential routing needs at least one delay");
  std::vector<Neuron> neurons{{"11", 1, {relay()}}};
  std::vector<Synapse> synapses;
  for (std::size_t k = 0; k < seq.delays.size(); ++k) {
    require_delay(seq.delays[k], "sequential");
    neurons.push_back({std::to_string(12 + k), 0, {relay(seq.delays[k])}});
    synapses.push_back({neurons[k].id, neurons[k + 1].id});
  }
  const auto out = neurons.back().id;
  return SnpSystem("sequential", std::move(neurons), std::move(synapses), out);
}

SnpSystem generate_iteration(const Iteration& it) {
  require_delay(it.d, "iteration");
  const bool first = it.delay_on == Placement::First;
  std::vector<Neuron> neurons{{"11", 1, {relay(first ? it.d : 0)}},
                              {"12", 0, {relay(first ? 0 : it.d)}}};
  return SnpSystem("iteration", std::move(neurons), {{"11", "12"}, {"12", "11"}}, "12");
}

SnpSystem generate_join(const Join& join) {
  require_delay(join.d, "join");
  std::vector<Neuron> neurons{{"11", 1, {relay()}},
                              {"12", 1, {relay()}},
                              {"13", 0, {Rule{SpikeRegex::repeated(2), 2, 1, join.d}}}};
  return SnpSystem("join", std::move(neurons), {{"11", "13"}, {"12", "13"}}, "13");
}

SnpSystem generate_split(const Split& split) {
  if (!split.d_left && !split.d_right) throw std::invalid_argument("split routing needs a delayed branch");
  if (split.d_left) require_delay(*split.d_left, "split");
  if (split.d_right) require_delay(*split.d_right, "split");
  std::vector<Neuron> neurons{{"3", 1, {relay()}},
                              {"4", 0, {relay(split.d_left.value_or(0))}},
                              {"5", 0, {relay(split.d_right.value_or(0))}},
                              {"o", 0, {relay()}}};
  return SnpSystem("split", std::move(neurons), {{"3", "4"}, {"3", "5"}, {"4", "o"}, {"5", "o"}},
                   "o");
}

}  // namespace

std::string describe(const RoutingInstance& instance) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const Sequential& s) {
                   os << "Sequential{";
                   for (std::size_t i = 0; i < s.delays.size(); ++i) os << (i ? "," : "") << s.delays[i];
                   os << '}';
                 },
                 [&](const Iteration& i) {
                   os << "Iteration{d=" << i.d
                      << ", on=" << (i.delay_on == Placement::First ? "first" : "second") << '}';
                 },
                 [&](const Join& j) { os << "Join{d=" << j.d << '}'; },
                 [&](const Split& s) {
                   auto opt = [](const std::optional<Count>& d) {
                     return d ? std::to_string(*d) : std::string("-");
                   };
                   os << "Split{left=" << opt(s.d_left) << ", right=" << opt(s.d_right) << '}';
                 },
             },
             instance);
  return os.str();
}

SnpSystem generate(const RoutingInstance& instance) {
  return std::visit(overloaded{
                        [](const Sequential& s) { return generate_sequential(s); },
                        [](const Iteration& i) { return generate_iteration(i); },
                        [](const Join& j) { return generate_join(j); },
                        [](const Split& s) { return generate_split(s); },
                    },
                    instance);
}

SnpSystem compose(const std::vector<RoutingInstance>& parts) {
  if (parts.empty()) throw std::invalid_argument("composition needs at least one construct");
  std::vector<Neuron> neurons;
  std::vector<Synapse> synapses;
  std::string previous_output;

  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto part = generate(parts[i]);
    const auto prefix = "c" + std::to_string(i + 1) + ".";
    for (auto neuron : part.neurons()) {
      const bool entry = neuron.initial_spikes > 0;
      neuron.id = prefix + neuron.id;
      if (i > 0 && entry) {
        neuron.initial_spikes = 0;
        synapses.push_back({previous_output, neuron.id});
      }
      neurons.push_back(std::move(neuron));
    }
    for (const auto& s : part.synapses()) synapses.push_back({prefix + s.from, prefix + s.to});
    previous_output = prefix + part.output();
  }
  return SnpSystem("composition", std::move(neurons), std::move(synapses), previous_output);
}

std::vector<Count> env_trajectory(const SnpSystem& system, Count bound) {
  const auto trace = run(system, bound);
  std::vector<Count> env;
  env.reserve(trace.configurations.size());
  for (const auto& c : trace.configurations) env.push_back(c.environment);
  return env;
}

CoSimulationError::CoSimulationError(Side side, const std::string& cause)
    : Error(std::string(side == Side::Source ? "source" : "target") + " system: " + cause),
      side_(side) {}

bool Verdict::passed() const noexcept {
  if (source_halt && target_halt) return r1_holds && r2_holds;
  if (!source_halt && !target_halt) return !first_divergence && trajectory_equal_through == bound;
  return false;
}

Verdict co_simulate(const SnpSystem& source, const SnpSystem& target, Count bound) {
  auto simulate = [bound](const SnpSystem& system, Side side) {
    try {
      return run(system, bound);
    } catch (const NondeterministicChoice& e) {
      throw CoSimulationError(side, e.what());
    }
  };
  const auto src = simulate(source, Side::Source);
  const auto tgt = simulate(target, Side::Target);

  Verdict v;
  v.bound = bound;
  v.source_halt = src.halted_at();
  v.target_halt = tgt.halted_at();
  if (v.source_halt) v.source_env_at_halt = src.final_configuration().environment;
  if (v.target_halt) v.target_env_at_halt = tgt.final_configuration().environment;
  if (v.halting_comparable()) {
    v.r1_holds = *v.source_halt == *v.target_halt;
    v.r2_holds = v.source_env_at_halt == v.target_env_at_halt;
  }

  auto env_at = [](const Trace& t, Count tick) {
    const auto& cs = t.configurations;
    return tick < cs.size() ? cs[tick].environment : cs.back().environment;
  };
  v.trajectory_equal_through = bound;
  for (Count k = 0; k <= bound; ++k) {
    const auto a = env_at(src, k);
    const auto b = env_at(tgt, k);
    if (a != b) {
      v.first_divergence = Divergence{k, a, b};
      v.trajectory_equal_through = k == 0 ? 0 : k - 1;
      break;
    }
  }
  return v;
}

Count total_delay(const SnpSystem& system) {
  Count sum = 0;
  for (const auto& neuron : system.neurons()) {
    Count d = 0;
    for (const auto& r : neuron.rules) d = std::max(d, r.delay);
    sum += d;
  }
  return sum;
}

bool check_observation1(const TransformResult& result) {
  const Count feeders = result.feeder_ids.size();
  if (result.added_count < feeders) return false;
  return result.added_count - feeders == total_delay(result.normalized_source);
}

std::string format_verdict(const Verdict& v) {
  auto halt = [](const std::optional<Count>& t) {
    return t ? "halted at " + std::to_string(*t) : std::string("running");
  };
  auto mark = [](bool ok) { return ok ? "holds" : "fails"; };
  std::ostringstream os;
  os << "source: " << halt(v.source_halt);
  if (v.source_halt) os << ", environment " << v.source_env_at_halt;
  os << "\ntarget: " << halt(v.target_halt);
  if (v.target_halt) os << ", environment " << v.target_env_at_halt;
  os << '\n';
  if (v.halting_comparable()) {
    os << "R1' (same halting time): " << mark(v.r1_holds) << '\n';
    os << "R2' (same environment at halt): " << mark(v.r2_holds) << '\n';
  } else {
    os << "R1'/R2': not applicable (no common halt within " << v.bound << " ticks)\n";
  }
  os << "environment trajectories equal through tick " << v.trajectory_equal_through << " of "
     << v.bound << '\n';
  if (v.first_divergence) {
    os << "first divergence at tick " << v.first_divergence->tick << ": source "
       << v.first_divergence->source_env << ", target " << v.first_divergence->target_env << '\n';
  }
  os << "verdict: " << (v.passed() ? "equivalent" : "NOT equivalent") << '\n';
  return os.str();
}

}  // namespace snp
