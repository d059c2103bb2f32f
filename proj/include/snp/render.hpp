#pragma once

#include <map>
#include <string>

#include "snp/eliminator.hpp"
#include "snp/engine.hpp"
#include "snp/system.hpp"

namespace snp {

enum class TraceStyle {
  Paper,    // C_k = <n_1/t_1, ..., n_m/t_m, n_e>, one configuration per line
  Table,    // tab-separated, one tick per row, environment last
  Machine,  // one JSON object per line
};

struct RenderOptions {
  /// Use '<' '>' instead of the angle brackets U+27E8 / U+27E9.
  bool ascii = false;
};

/// "<0/0, 0/2, 0/0, 0>" with the configured brackets.
std::string format_configuration(const Configuration& config, const RenderOptions& options = {});

/// One Table-style row: "t<k>" then one cell per neuron and the environment.
/// Cells are "n/t" for systems with delays and plain "n" otherwise.
std::string format_table_row(const SnpSystem& system, const Configuration& config);

std::string format_trace(const SnpSystem& system, const Trace& trace, TraceStyle style,
                         const RenderOptions& options = {});

/// Graphviz digraph: a node per neuron in declaration order, an edge per
/// synapse and an environment node fed by the output neuron. When `provenance` is
/// given, gadget neurons carry their role in the label.
std::string export_dot(const SnpSystem& system,
                       const std::map<std::string, Provenance>* provenance = nullptr);

}  // namespace snp
