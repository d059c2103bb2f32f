#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "snp/system.hpp"

namespace snp {

/// Hands out neuron ids not yet used by a system.
class IdAllocator {
 public:
  IdAllocator() = default;
  explicit IdAllocator(const SnpSystem& system);

  void reserve(std::string id);
  bool taken(const std::string& id) const { return used_.count(id) != 0; }

  /// Returns `wanted` if free, otherwise `wanted` with primes appended until
  /// it is. The result is reserved.
  std::string fresh(std::string_view wanted);

 private:
  std::set<std::string> used_;
};

/// Replacement plan for a delayed neuron firing (a^j)+/a^j -> a;d.
struct GadgetPlan {
  std::string source_id;
  Count j = 1;
  Count d = 1;
  std::vector<std::string> multiplier_ids;  // d - 1 of them; none when d == 1
  std::string drain_id;
  std::string exit_id;

  /// Neurons receiving the replaced neuron's incoming synapses.
  std::vector<std::string> entry_ids() const;
};

struct Gadget {
  GadgetPlan plan;
  std::vector<Neuron> neurons;  // multipliers, drain, exit
  std::vector<Synapse> synapses;
};

/// Builds the delay-free subnet that reproduces one firing of
/// (a^j)+/a^j -> a;d. For d >= 2:
///
///   multipliers  (a^j)+/a^j -> a^j       copy the incoming batch d-1 times
///   drain        (a^j)+/a^j -> a         emits once per tick for d-1 ticks
///   exit         (a^{d-1})+/a^{d-1} -> a fires once all d-1 spikes arrived
///
/// For d = 1 the drain feeds an a+/a -> a exit directly. Ids are derived from
/// `source_id`: `<id>-1 .. <id>-(d-1)` multipliers, `<id>-<d>` drain and
/// `<id>-x` exit. Throws InvalidDelay when d == 0 and std::invalid_argument
/// when j == 0.
Gadget build_gadget(const std::string& source_id, Count j, Count d, IdAllocator& alloc);

struct NormalizedSystem {
  SnpSystem system;
  std::vector<std::string> feeder_ids;
};

/// Moves the initial spikes of every delayed neuron into a fresh feeder
/// neuron placed right before it, with rule (a^n)+/a^n -> a^n and a synapse
/// to the original. Every such feeder delays the whole run by one tick.
NormalizedSystem normalize_initial(const SnpSystem& system);

struct Provenance {
  enum class Role { Copied, Feeder, Multiplier, Drain, Exit };

  std::string source;  // neuron id in the normalized source
  Role role = Role::Copied;
  Count index = 0;  // multiplier number, 1-based

  bool operator==(const Provenance&) const = default;
};

std::string to_string(Provenance::Role role);
/// Short tag such as "copy of 11", "12 mult 1", "12 drain", "12 exit".
std::string describe(const Provenance& p);

struct TransformResult {
  SnpSystem normalized_source;
  SnpSystem target;
  std::map<std::string, Provenance> provenance;  // keyed by target neuron id
  std::vector<GadgetPlan> gadgets;
  std::vector<std::string> feeder_ids;
  Count added_count = 0;  // |target| - |input system|
  std::vector<std::string> warnings;
};

/// Rewrites every delayed neuron of `system` into its gadget. Incoming
/// synapses are fanned out to every gadget entry, outgoing ones leave from
/// the exit, and the exit becomes the output if the replaced neuron was.
///
/// Throws ValidationError for malformed input and UnsupportedDelayedRule for
/// delayed neurons that do not own exactly one rule (a^j)+/a^j -> a;d.
TransformResult eliminate_delays(const SnpSystem& system);

}  // namespace snp
