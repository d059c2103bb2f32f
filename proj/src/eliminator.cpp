#include "snp/eliminator.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>

namespace snp {

IdAllocator::IdAllocator(const SnpSystem& system) {
  for (const auto& n : system.neurons()) used_.insert(n.id);
}

void IdAllocator::reserve(std::string id) { used_.insert(std::move(id)); }

std::string IdAllocator::fresh(std::string_view wanted) {
  std::string id(wanted);
  while (taken(id)) id += '\'';
  used_.insert(id);
  return id;
}

std::vector<std::string> GadgetPlan::entry_ids() const {
  if (multiplier_ids.empty()) return {drain_id};
  return multiplier_ids;
}

Gadget build_gadget(const std::string& source_id, Count j, Count d, IdAllocator& alloc) {
  if (d == 0) throw InvalidDelay("neuron " + source_id + ": delay 0 needs no gadget");
  if (j == 0) throw std::invalid_argument("gadget block size must be >= 1");

  Gadget g;
  g.plan.source_id = source_id;
  g.plan.j = j;
  g.plan.d = d;
  for (Count i = 1; i < d; ++i) {
    g.plan.multiplier_ids.push_back(alloc.fresh(source_id + "-" + std::to_string(i)));
  }
  g.plan.drain_id = alloc.fresh(source_id + "-" + std::to_string(d));
  g.plan.exit_id = alloc.fresh(source_id + "-x");

  const auto block = SpikeRegex::repeated(j);
  for (const auto& id : g.plan.multiplier_ids) {
    g.neurons.push_back({id, 0, {Rule{block, j, j, 0}}});
    g.synapses.push_back({id, g.plan.drain_id});
  }
  g.neurons.push_back({g.plan.drain_id, 0, {Rule{block, j, 1, 0}}});

  const Count gather = std::max<Count>(d - 1, 1);
  g.neurons.push_back({g.plan.exit_id, 0, {Rule{SpikeRegex::repeated(gather), gather, 1, 0}}});
  g.synapses.push_back({g.plan.drain_id, g.plan.exit_id});
  return g;
}

NormalizedSystem normalize_initial(const SnpSystem& system) {
  IdAllocator alloc(system);
  NormalizedSystem out;
  std::vector<Neuron> neurons;
  std::vector<Synapse> synapses(system.synapses().begin(), system.synapses().end());

  for (const auto& neuron : system.neurons()) {
    if (neuron.initial_spikes == 0 || !neuron.has_delay()) {
      neurons.push_back(neuron);
      continue;
    }
    const Count n = neuron.initial_spikes;
    const auto feeder = alloc.fresh(neuron.id + "'");
    neurons.push_back({feeder, n, {Rule{SpikeRegex::repeated(n), n, n, 0}}});
    auto moved = neuron;
    moved.initial_spikes = 0;
    neurons.push_back(std::move(moved));
    synapses.push_back({feeder, neuron.id});
    out.feeder_ids.push_back(feeder);
  }
  out.system = SnpSystem(system.name(), std::move(neurons), std::move(synapses), system.output());
  return out;
}

std::string to_string(Provenance::Role role) {
  switch (role) {
    case Provenance::Role::Copied: return "copied";
    case Provenance::Role::Feeder: return "feeder";
    case Provenance::Role::Multiplier: return "multiplier";
    case Provenance::Role::Drain: return "drain";
    case Provenance::Role::Exit: return "exit";
  }
  return "unknown";
}

std::string describe(const Provenance& p) {
  switch (p.role) {
    case Provenance::Role::Copied: return "copy of " + p.source;
    case Provenance::Role::Feeder: return "feeder " + p.source;
    case Provenance::Role::Multiplier: return p.source + " mult " + std::to_string(p.index);
    case Provenance::Role::Drain: return p.source + " drain";
    case Provenance::Role::Exit: return p.source + " exit";
  }
  return p.source;
}

namespace {

// j of a delayed neuron the gadget can replace
Count gadget_block(const Neuron& neuron) {
  if (neuron.rules.size() != 1) {
    throw UnsupportedDelayedRule(neuron.id, "delayed neurons must own exactly one rule");
  }
  const auto& rule = neuron.rules.front();
  const Count j = rule.guard.repeated_block();
  if (j == 0) throw UnsupportedDelayedRule(neuron.id, "guard must have the form (a^j)+");
  if (rule.consume != j) throw UnsupportedDelayedRule(neuron.id, "rule must consume a^j for guard (a^j)+");
  if (rule.produce != 1) throw UnsupportedDelayedRule(neuron.id, "delayed rule must produce exactly one spike");
  return j;
}

// Flags delayed neurons that may see more than one input batch; the gadget
// only tracks the original tick-for-tick for a single batch.
std::vector<std::string> pipelining_warnings(const SnpSystem& system) {
  const auto n = system.size();
  std::vector<std::vector<std::size_t>> preds(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (auto v : system.targets(u)) preds[v].push_back(u);
  }

  auto reaches = [&](std::size_t from, std::size_t to) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack(system.targets(from).begin(), system.targets(from).end());
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      if (x == to) return true;
      if (seen[x]) continue;
      seen[x] = true;
      for (auto y : system.targets(x)) stack.push_back(y);
    }
    return false;
  };
  std::vector<bool> on_cycle(n);
  for (std::size_t v = 0; v < n; ++v) on_cycle[v] = reaches(v, v);

  // cycle_fed[v]: some ancestor of v (or v) lies on a cycle
  std::vector<bool> cycle_fed(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (!on_cycle[v]) continue;
    cycle_fed[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (reaches(v, w)) cycle_fed[w] = true;
    }
  }

  constexpr Count kUnbounded = std::numeric_limits<Count>::max();
  std::vector<std::optional<Count>> inflow(n);
  auto saturating_add = [](Count a, Count b) { return a > kUnbounded - b ? kUnbounded : a + b; };
  std::function<Count(std::size_t)> bound_in = [&](std::size_t v) -> Count {
    if (cycle_fed[v]) return kUnbounded;
    if (inflow[v]) return *inflow[v];
    Count total = system.neuron(v).initial_spikes;
    for (auto u : preds[v]) {
      const auto& rules = system.neuron(u).rules;
      if (rules.empty()) continue;
      Count min_consume = kUnbounded, max_produce = 0;
      for (const auto& r : rules) {
        min_consume = std::min(min_consume, std::max<Count>(r.consume, 1));
        max_produce = std::max(max_produce, r.produce);
      }
      const Count in_u = bound_in(u);
      const Count firings = in_u == kUnbounded ? kUnbounded : in_u / min_consume;
      const Count emitted =
          (firings == kUnbounded && max_produce > 0) ? kUnbounded : firings * max_produce;
      total = saturating_add(total, emitted);
    }
    inflow[v] = total;
    return total;
  };

  std::vector<std::string> warnings;
  for (std::size_t v = 0; v < n; ++v) {
    const auto& neuron = system.neuron(v);
    if (!neuron.has_delay()) continue;
    if (cycle_fed[v]) {
      warnings.push_back("neuron " + neuron.id +
                         " is fed through a cycle; single-batch routing is not guaranteed");
      continue;
    }
    const Count consume = neuron.rules.front().consume;
    const Count in = bound_in(v);
    if (in > consume) {
      warnings.push_back("neuron " + neuron.id + " may receive up to " + std::to_string(in) +
                         " spikes; gadget timing is only guaranteed for one batch of " +
                         std::to_string(consume));
    }
  }
  return warnings;
}

}  // namespace

TransformResult eliminate_delays(const SnpSystem& system) {
  if (auto issues = validate(system); !issues.empty()) throw ValidationError(std::move(issues));
  for (const auto& neuron : system.neurons()) {
    if (neuron.has_delay()) gadget_block(neuron);
  }

  TransformResult result;
  auto normalized = normalize_initial(system);
  result.normalized_source = std::move(normalized.system);
  result.feeder_ids = std::move(normalized.feeder_ids);
  const auto& source = result.normalized_source;
  result.warnings = pipelining_warnings(source);

  IdAllocator alloc(source);
  std::vector<Neuron> neurons;
  std::vector<Synapse> synapses;
  std::map<std::string, const GadgetPlan*> plan_of;

  const auto is_feeder = [&](const std::string& id) {
    return std::find(result.feeder_ids.begin(), result.feeder_ids.end(), id) !=
           result.feeder_ids.end();
  };

  for (const auto& neuron : source.neurons()) {
    if (!neuron.has_delay()) {
      neurons.push_back(neuron);
      result.provenance[neuron.id] = {neuron.id,
                                      is_feeder(neuron.id) ? Provenance::Role::Feeder
                                                           : Provenance::Role::Copied,
                                      0};
      continue;
    }
    const auto& rule = neuron.rules.front();
    auto gadget = build_gadget(neuron.id, gadget_block(neuron), rule.delay, alloc);
    for (std::size_t i = 0; i < gadget.plan.multiplier_ids.size(); ++i) {
      result.provenance[gadget.plan.multiplier_ids[i]] = {neuron.id, Provenance::Role::Multiplier,
                                                          i + 1};
    }
    result.provenance[gadget.plan.drain_id] = {neuron.id, Provenance::Role::Drain, 0};
    result.provenance[gadget.plan.exit_id] = {neuron.id, Provenance::Role::Exit, 0};
    for (auto& n : gadget.neurons) neurons.push_back(std::move(n));
    for (auto& s : gadget.synapses) synapses.push_back(std::move(s));
    result.gadgets.push_back(std::move(gadget.plan));
  }
  for (const auto& plan : result.gadgets) plan_of[plan.source_id] = &plan;

  for (const auto& s : source.synapses()) {
    auto from_it = plan_of.find(s.from);
    const std::string from = from_it == plan_of.end() ? s.from : from_it->second->exit_id;
    auto to_it = plan_of.find(s.to);
    if (to_it == plan_of.end()) {
      synapses.push_back({from, s.to});
    } else {
      for (auto& entry : to_it->second->entry_ids()) synapses.push_back({from, std::move(entry)});
    }
  }

  auto out_it = plan_of.find(source.output());
  std::string output = out_it == plan_of.end() ? source.output() : out_it->second->exit_id;

  result.target = SnpSystem(source.name(), std::move(neurons), std::move(synapses), std::move(output));
  result.added_count = result.target.size() - system.size();
  return result;
}

}  // namespace snp
