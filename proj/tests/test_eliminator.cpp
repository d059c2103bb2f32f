#include "doctest.h"

#include <algorithm>
#include <set>

#include "snp/checker.hpp"
#include "snp/eliminator.hpp"
#include "snp/engine.hpp"
#include "support/oracles.hpp"

using namespace snp;
using snp::testing::relay;

namespace {

const Rule& only_rule(const SnpSystem& sys, const std::string& id) {
  return sys.neuron(*sys.index_of(id)).rules.at(0);
}

std::set<Synapse> synapse_set(const SnpSystem& sys) {
  return {sys.synapses().begin(), sys.synapses().end()};
}

// Undo the rewrite using provenance only: gadget internals vanish, exits
// and entries collapse back onto the neuron they replaced.
std::set<Synapse> restored_synapses(const TransformResult& r) {
  std::set<Synapse> out;
  for (const auto& s : r.target.synapses()) {
    const auto& from = r.provenance.at(s.from);
    const auto& to = r.provenance.at(s.to);
    const bool from_ok = from.role == Provenance::Role::Copied || from.role == Provenance::Role::Feeder ||
                         from.role == Provenance::Role::Exit;
    const bool to_ok = to.role == Provenance::Role::Copied || to.role == Provenance::Role::Feeder ||
                       to.role == Provenance::Role::Multiplier ||
                       (to.role == Provenance::Role::Drain &&
                        std::any_of(r.gadgets.begin(), r.gadgets.end(), [&](const GadgetPlan& g) {
                          return g.drain_id == s.to && g.multiplier_ids.empty();
                        }));
    if (!from_ok || !to_ok) continue;
    if (from.source == to.source) continue;  // gadget-internal
    out.insert({from.source, to.source});
  }
  return out;
}

}  // namespace

TEST_CASE("build_gadget j=1 d=3") {
  IdAllocator alloc;
  const auto g = build_gadget("12", 1, 3, alloc);
  CHECK(g.plan.multiplier_ids == std::vector<std::string>{"12-1", "12-2"});
  CHECK(g.plan.drain_id == "12-3");
  CHECK(g.plan.exit_id == "12-x");
  REQUIRE(g.neurons.size() == 4);
  for (int i = 0; i < 3; ++i) CHECK(g.neurons[i].rules[0] == relay());
  CHECK(g.neurons[3].rules[0] == Rule{SpikeRegex::repeated(2), 2, 1, 0});
  CHECK(g.synapses.size() == 3);
  CHECK(g.plan.entry_ids() == g.plan.multiplier_ids);
}

TEST_CASE("build_gadget j=2 d=3") {
  IdAllocator alloc;
  const auto g = build_gadget("13", 2, 3, alloc);
  REQUIRE(g.neurons.size() == 4);
  const Rule doubler{SpikeRegex::repeated(2), 2, 2, 0};
  const Rule pair_to_one{SpikeRegex::repeated(2), 2, 1, 0};
  CHECK(g.neurons[0].rules[0] == doubler);
  CHECK(g.neurons[1].rules[0] == doubler);
  CHECK(g.neurons[2].rules[0] == pair_to_one);
  CHECK(g.neurons[3].rules[0] == pair_to_one);
}

TEST_CASE("build_gadget j=1 d=1 is a two-neuron chain") {
  IdAllocator alloc;
  const auto g = build_gadget("5", 1, 1, alloc);
  CHECK(g.plan.multiplier_ids.empty());
  REQUIRE(g.neurons.size() == 2);
  CHECK(g.neurons[0].rules[0] == relay());
  CHECK(g.neurons[1].rules[0] == relay());
  CHECK(g.plan.entry_ids() == std::vector<std::string>{"5-1"});
  CHECK(g.synapses == std::vector<Synapse>{{"5-1", "5-x"}});
}

TEST_CASE("build_gadget rejects delay 0 and avoids taken ids") {
  IdAllocator alloc;
  CHECK_THROWS_AS(build_gadget("1", 1, 0, alloc), InvalidDelay);
  alloc.reserve("7-x");
  alloc.reserve("7-1");
  const auto g = build_gadget("7", 1, 2, alloc);
  CHECK(g.plan.multiplier_ids == std::vector<std::string>{"7-1'"});
  CHECK(g.plan.exit_id == "7-x'");
}

TEST_CASE("normalize_initial") {
  SUBCASE("no delayed spike holder: unchanged") {
    const auto seq = generate(Sequential{{3}});
    const auto n = normalize_initial(seq);
    CHECK(n.feeder_ids.empty());
    CHECK(n.system == seq);
  }
  SUBCASE("delayed spike holder gets one feeder and halts one tick later") {
    const SnpSystem sys("head", {{"11", 1, {relay(2)}}, {"12", 0, {relay()}}}, {{"11", "12"}}, "12");
    const auto n = normalize_initial(sys);
    REQUIRE(n.feeder_ids == std::vector<std::string>{"11'"});
    CHECK(n.system.size() == 3);
    CHECK(n.system.neuron(0).id == "11'");
    CHECK(n.system.neuron(0).initial_spikes == 1);
    CHECK(n.system.neuron(0).rules[0] == relay());
    CHECK(n.system.neuron(1).initial_spikes == 0);
    const auto before = run(sys, 50);
    const auto after = run(n.system, 50);
    REQUIRE(before.halted_at());
    CHECK(after.halted_at() == *before.halted_at() + 1);
    CHECK(after.final_configuration().environment == before.final_configuration().environment);
  }
  SUBCASE("iteration with the delay on the spike holder shifts the period by one tick") {
    const auto it = generate(Iteration{3, Placement::First});
    const auto n = normalize_initial(it);
    CHECK(n.feeder_ids.size() == 1);
    const auto a = env_trajectory(it, 60);
    const auto b = env_trajectory(n.system, 61);
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == b[k + 1]);
  }
  SUBCASE("two delayed spike holders get two feeders") {
    const SnpSystem sys("two",
                        {{"a", 1, {relay(2)}}, {"b", 1, {relay(1)}}, {"c", 0, {Rule{SpikeRegex::repeated(2), 2, 1, 0}}}},
                        {{"a", "c"}, {"b", "c"}}, "c");
    const auto n = normalize_initial(sys);
    CHECK(n.feeder_ids.size() == 2);
    const auto r = eliminate_delays(sys);
    const auto v = co_simulate(r.normalized_source, r.target, 100);
    CHECK(v.passed());
  }
}

TEST_CASE("eliminate_delays on the routing constructs") {
  SUBCASE("sequential d=3: 2 -> 5 neurons") {
    const auto r = eliminate_delays(generate(Sequential{{3}}));
    CHECK(r.target.size() == 5);
    CHECK(r.added_count == 3);
    CHECK(r.target.output() == "12-x");
  }
  SUBCASE("sequential d1=2 d2=3: 3 -> 8 neurons") {
    const auto r = eliminate_delays(generate(Sequential{{2, 3}}));
    CHECK(r.target.size() == 8);
    CHECK(r.added_count == 5);
    // the first gadget's exit feeds both entries of the second gadget
    const auto syn = synapse_set(r.target);
    CHECK(syn.count({"12-x", "13-1"}) == 1);
    CHECK(syn.count({"12-x", "13-2"}) == 1);
  }
  SUBCASE("join d=3: 3 -> 6 neurons") {
    const auto r = eliminate_delays(generate(Join{3}));
    CHECK(r.target.size() == 6);
    CHECK(only_rule(r.target, "13-1") == Rule{SpikeRegex::repeated(2), 2, 2, 0});
    CHECK(only_rule(r.target, "13-3") == Rule{SpikeRegex::repeated(2), 2, 1, 0});
    CHECK(only_rule(r.target, "13-x") == Rule{SpikeRegex::repeated(2), 2, 1, 0});
  }
  SUBCASE("no delays: identity") {
    const SnpSystem sys("plain", {{"1", 1, {relay()}}, {"2", 0, {relay()}}}, {{"1", "2"}}, "2");
    const auto r = eliminate_delays(sys);
    CHECK(r.added_count == 0);
    CHECK(r.target == sys);
    CHECK(r.gadgets.empty());
  }
}

TEST_CASE("eliminate_delays structural properties") {
  const std::vector<RoutingInstance> instances{
      Sequential{{1}},       Sequential{{4}},  Sequential{{2, 5}}, Sequential{{1, 1, 3}},
      Iteration{3, Placement::First}, Iteration{2, Placement::Second}, Join{1}, Join{6},
      Split{3, std::nullopt}, Split{std::nullopt, 2}, Split{2, 7}};
  for (const auto& inst : instances) {
    CAPTURE(describe(inst));
    const auto source = generate(inst);
    const auto r = eliminate_delays(source);

    for (const auto& n : r.target.neurons()) {
      for (const auto& rule : n.rules) CHECK(rule.delay == 0);
    }
    CHECK(validate(r.target).empty());
    CHECK(r.target.size() == r.normalized_source.size() + total_delay(r.normalized_source));
    CHECK(check_observation1(r));

    // every normalized source neuron is either copied once or replaced once
    for (const auto& n : r.normalized_source.neurons()) {
      const auto copies = std::count_if(r.provenance.begin(), r.provenance.end(), [&](const auto& kv) {
        return kv.second.source == n.id &&
               (kv.second.role == Provenance::Role::Copied || kv.second.role == Provenance::Role::Feeder);
      });
      const auto gadgets = std::count_if(r.gadgets.begin(), r.gadgets.end(),
                                         [&](const GadgetPlan& g) { return g.source_id == n.id; });
      CHECK(copies + gadgets == 1);
    }

    // entry fan-out: each in-synapse of a replaced neuron becomes
    // max(d - 1, 1) synapses
    for (const auto& g : r.gadgets) {
      const auto in_degree = std::count_if(r.normalized_source.synapses().begin(),
                                           r.normalized_source.synapses().end(),
                                           [&](const Synapse& s) { return s.to == g.source_id; });
      Count entering = 0;
      for (const auto& s : r.target.synapses()) {
        const auto& p = r.provenance.at(s.from);
        const bool internal = p.source == g.source_id && p.role != Provenance::Role::Copied &&
                              p.role != Provenance::Role::Feeder;
        const auto entries = g.entry_ids();
        if (!internal && std::find(entries.begin(), entries.end(), s.to) != entries.end()) ++entering;
      }
      CHECK(entering == static_cast<Count>(in_degree) * std::max<Count>(g.d - 1, 1));
    }

    // locality: collapsing gadgets gives back the normalized source graph
    CHECK(restored_synapses(r) == synapse_set(r.normalized_source));
  }
}

TEST_CASE("eliminate_delays rejects what it cannot rewrite") {
  SUBCASE("delayed rule producing two spikes") {
    const SnpSystem sys("b2", {{"1", 2, {relay()}}, {"2", 0, {Rule{SpikeRegex::plus(), 2, 2, 1}}}}, {{"1", "2"}}, "2");
    try {
      (void)eliminate_delays(sys);
      FAIL("expected UnsupportedDelayedRule");
    } catch (const UnsupportedDelayedRule& e) {
      CHECK(e.neuron_id() == "2");
    }
  }
  SUBCASE("guard that is not (a^j)+") {
    const SnpSystem sys("g", {{"1", 1, {relay()}}, {"2", 0, {Rule{SpikeRegex::exactly(1), 1, 1, 2}}}}, {{"1", "2"}}, "2");
    CHECK_THROWS_AS(eliminate_delays(sys), UnsupportedDelayedRule);
  }
  SUBCASE("consumption differs from the block") {
    const SnpSystem sys("c", {{"1", 1, {relay()}}, {"2", 0, {Rule{SpikeRegex::repeated(2), 1, 1, 2}}}}, {{"1", "2"}}, "2");
    CHECK_THROWS_AS(eliminate_delays(sys), UnsupportedDelayedRule);
  }
  SUBCASE("delayed neuron with a second rule") {
    const SnpSystem sys("two", {{"1", 1, {relay()}}, {"2", 0, {relay(2), Rule{SpikeRegex::exactly(5), 5, 0, 0}}}},
                        {{"1", "2"}}, "2");
    CHECK_THROWS_AS(eliminate_delays(sys), UnsupportedDelayedRule);
  }
  SUBCASE("structurally invalid input") {
    const SnpSystem sys("loop", {{"1", 1, {relay()}}}, {{"1", "1"}}, "1");
    CHECK_THROWS_AS(eliminate_delays(sys), ValidationError);
  }
}

TEST_CASE("pipelining warnings") {
  CHECK(eliminate_delays(generate(Sequential{{3, 2}})).warnings.empty());
  CHECK(eliminate_delays(generate(Join{3})).warnings.empty());
  CHECK(eliminate_delays(generate(Split{3, 4})).warnings.empty());
  // the loop feeds the delayed neuron repeatedly
  CHECK(eliminate_delays(generate(Iteration{3, Placement::Second})).warnings.size() == 1);
  // two spikes reach a neuron that consumes one at a time
  const SnpSystem burst("burst", {{"1", 2, {relay()}}, {"2", 0, {relay(2)}}}, {{"1", "2"}}, "2");
  CHECK(eliminate_delays(burst).warnings.size() == 1);
}
