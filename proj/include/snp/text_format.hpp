#pragma once

#include <string>
#include <string_view>

#include "snp/spike_regex.hpp"
#include "snp/system.hpp"

namespace snp {

// Line-oriented system documents, '#' starts a comment:
//
//   system pi0
//   neuron 1 spikes=1
//   rule 1: a+ / a -> a
//   neuron 2
//   rule 2: a+ / a -> a ; 2
//   syn 1 -> 2
//   out 2
//
// Guards: a^c, a+, a*, (a^k)+, (a^k)*, a^j(a^k)*, a^j(a^k)+ and unions with
// '|'. A forgetting rule is written `-> 0`.

/// Throws SyntaxError for malformed text (including a missing `out`) and
/// ValidationError when the parsed system is structurally invalid.
SnpSystem parse_system(std::string_view text);

/// Canonical document; parse_system(serialize_system(s)) == s.
std::string serialize_system(const SnpSystem& system);

SpikeRegex parse_guard(std::string_view text);
std::string format_guard(const SpikeRegex& guard);
/// e.g. "(a^2)+ / a^2 -> a ; 3"
std::string format_rule(const Rule& rule);

}  // namespace snp
