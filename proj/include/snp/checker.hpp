#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "snp/eliminator.hpp"
#include "snp/engine.hpp"
#include "snp/system.hpp"

namespace snp {

// Routing constructs. Every delay present is >= 1.

/// 11 -> 12 -> ... chain; the head holds one spike, neuron k+1 carries the
/// k-th delay and the last one is the output.
struct Sequential {
  std::vector<Count> delays;
};

enum class Placement { First, Second };

/// Two-neuron loop 11 <-> 12 with output 12. `First` puts the delay on the
/// spike-holding neuron 11, `Second` on 12.
struct Iteration {
  Count d = 1;
  Placement delay_on = Placement::Second;
};

/// 11 and 12 each hold a spike and feed 13: (a^2)+/a^2 -> a;d, the output.
struct Join {
  Count d = 1;
};

/// 3 -> {4, 5} -> o, with optional delays on 4 and 5; o: a+/a -> a is output.
struct Split {
  std::optional<Count> d_left;
  std::optional<Count> d_right;
};

using RoutingInstance = std::variant<Sequential, Iteration, Join, Split>;

std::string describe(const RoutingInstance& instance);

/// Builds the delayed system for a construct. Throws std::invalid_argument
/// when the instance breaks its invariants.
SnpSystem generate(const RoutingInstance& instance);

/// Chains constructs: the output of construct i gets a synapse to every
/// spike-holding neuron of construct i+1, and only the first construct keeps
/// its initial spikes. Neuron ids are prefixed "c<i>.".
SnpSystem compose(const std::vector<RoutingInstance>& parts);

/// Environment count after each tick, for ticks 0..min(bound, halt).
std::vector<Count> env_trajectory(const SnpSystem& system, Count bound);

enum class Side { Source, Target };

/// Engine failure during co-simulation, tagged with the failing system.
class CoSimulationError : public Error {
 public:
  CoSimulationError(Side side, const std::string& cause);
  Side side() const noexcept { return side_; }

 private:
  Side side_;
};

struct Divergence {
  Count tick = 0;
  Count source_env = 0;
  Count target_env = 0;

  bool operator==(const Divergence&) const = default;
};

struct Verdict {
  Count bound = 0;
  std::optional<Count> source_halt;
  std::optional<Count> target_halt;
  bool r1_holds = false;  // same halting tick
  bool r2_holds = false;  // same environment count at halt
  Count source_env_at_halt = 0;
  Count target_env_at_halt = 0;
  Count trajectory_equal_through = 0;
  std::optional<Divergence> first_divergence;

  /// Both systems halted within the bound, so R1/R2 can be judged.
  bool halting_comparable() const noexcept { return source_halt && target_halt; }

  /// R1 and R2 when both halt; otherwise both must run the whole window with
  /// pointwise equal environment trajectories.
  bool passed() const noexcept;
};

/// Runs both systems for up to `bound` ticks and compares halting tick,
/// environment at halt and the environment trajectory over [0, bound]. A
/// halted system keeps its final environment for the rest of the window.
Verdict co_simulate(const SnpSystem& source, const SnpSystem& target, Count bound = 200);

/// Added neurons, net of feeders, equal the sum of the delays of the
/// normalized source's delayed neurons.
bool check_observation1(const TransformResult& result);

/// Sum of rule delays over neurons that carry one.
Count total_delay(const SnpSystem& system);

std::string format_verdict(const Verdict& verdict);

}  // namespace snp
