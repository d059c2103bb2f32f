#include "snp/render.hpp"

#include <sstream>

#include "json.hpp"

#include "snp/text_format.hpp"

namespace snp {

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string outcome_line(const Trace& trace) {
  const auto env = trace.final_configuration().environment;
  if (auto t = trace.halted_at()) {
    return "halted at tick " + std::to_string(*t) + " with " + std::to_string(env) +
           " spike(s) in the environment";
  }
  return "no halt within " + std::to_string(trace.final_configuration().tick) +
         " ticks; environment " + std::to_string(env);
}

}  // namespace

std::string format_configuration(const Configuration& config, const RenderOptions& options) {
  std::string out = options.ascii ? "<" : "⟨";
  for (const auto& s : config.states) {
    out += std::to_string(s.spikes) + "/" + std::to_string(s.closed_remaining) + ", ";
  }
  out += std::to_string(config.environment);
  out += options.ascii ? ">" : "⟩";
  return out;
}

std::string format_table_row(const SnpSystem& system, const Configuration& config) {
  const bool delayed = system.has_delays();
  std::string out = "t" + std::to_string(config.tick);
  for (const auto& s : config.states) {
    out += '\t' + std::to_string(s.spikes);
    if (delayed) out += "/" + std::to_string(s.closed_remaining);
  }
  out += '\t' + std::to_string(config.environment);
  return out;
}

std::string format_trace(const SnpSystem& system, const Trace& trace, TraceStyle style,
                         const RenderOptions& options) {
  std::ostringstream os;
  switch (style) {
    case TraceStyle::Paper:
      for (const auto& c : trace.configurations) {
        os << "C_" << c.tick << " = " << format_configuration(c, options) << '\n';
      }
      os << outcome_line(trace) << '\n';
      break;

    case TraceStyle::Table:
      os << "step";
      for (const auto& n : system.neurons()) os << '\t' << n.id;
      os << "\tenv\n";
      for (const auto& c : trace.configurations) os << format_table_row(system, c) << '\n';
      os << "# " << outcome_line(trace) << '\n';
      break;

    case TraceStyle::Machine: {
      using nlohmann::json;
      for (const auto& c : trace.configurations) {
        json neurons = json::array();
        for (std::size_t i = 0; i < c.states.size(); ++i) {
          const auto& s = c.states[i];
          neurons.push_back({{"id", i < system.size() ? system.neuron(i).id : std::to_string(i)},
                             {"spikes", s.spikes},
                             {"closed", s.closed_remaining},
                             {"pending", s.pending_emission ? json(*s.pending_emission) : json()}});
        }
        os << json{{"tick", c.tick}, {"neurons", neurons}, {"environment", c.environment}}.dump()
           << '\n';
      }
      json last{{"environment", trace.final_configuration().environment}};
      if (auto t = trace.halted_at()) {
        last["outcome"] = "halted";
        last["tick"] = *t;
      } else {
        last["outcome"] = "budget_exhausted";
        last["tick"] = trace.final_configuration().tick;
      }
      os << last.dump() << '\n';
      break;
    }
  }
  return os.str();
}

std::string export_dot(const SnpSystem& system, const std::map<std::string, Provenance>* provenance) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(system.name().empty() ? "snp" : system.name()) << "\" {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=ellipse];\n";
  for (const auto& n : system.neurons()) {
    std::string label = n.id;
    if (provenance) {
      if (auto it = provenance->find(n.id); it != provenance->end() &&
                                            it->second.role != Provenance::Role::Copied) {
        label += " [" + describe(it->second) + "]";
      }
    }
    if (n.initial_spikes > 0) {
      label += "\n" + (n.initial_spikes == 1 ? std::string("a") : "a^" + std::to_string(n.initial_spikes));
    }
    for (const auto& r : n.rules) label += "\n" + format_rule(r);
    os << "  \"" << dot_escape(n.id) << "\" [label=\"" << dot_escape(label) << "\"";
    if (system.output() == n.id) os << ", peripheries=2";
    os << "];\n";
  }
  os << "  \"#env\" [shape=box, label=\"environment\"];\n";
  for (const auto& s : system.synapses()) {
    os << "  \"" << dot_escape(s.from) << "\" -> \"" << dot_escape(s.to) << "\";\n";
  }
  if (system.output_index()) os << "  \"" << dot_escape(system.output()) << "\" -> \"#env\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace snp
