// snpc: simulate, transform, verify and draw spiking neural P systems.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "snp/checker.hpp"
#include "snp/eliminator.hpp"
#include "snp/engine.hpp"
#include "snp/render.hpp"
#include "snp/text_format.hpp"

namespace {

enum ExitCode : int { kOk = 0, kNotEquivalent = 1, kInputError = 2, kEngineError = 3 };

// Signals an input problem detected by the tool itself.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

snp::SnpSystem load(const std::string& path) { return snp::parse_system(read_input(path)); }

void print_accounting(std::ostream& os, const snp::TransformResult& r, bool provenance) {
  const auto delays = snp::total_delay(r.normalized_source);
  os << "# added neurons: " << r.added_count << " (sum of delays " << delays << ", feeders "
     << r.feeder_ids.size() << ")\n";
  os << "# neuron count law: " << (snp::check_observation1(r) ? "holds" : "VIOLATED") << '\n';
  for (const auto& f : r.feeder_ids) os << "# feeder added to source and target: " << f << '\n';
  if (provenance) {
    for (const auto& n : r.target.neurons()) {
      os << "# " << n.id << ": " << snp::describe(r.provenance.at(n.id)) << '\n';
    }
  }
}

int cmd_sim(const std::string& file, snp::Count max_steps, const std::string& style, bool ascii) {
  const auto system = load(file);
  const auto trace = snp::run(system, max_steps);
  const auto s = style == "table"     ? snp::TraceStyle::Table
                 : style == "machine" ? snp::TraceStyle::Machine
                                      : snp::TraceStyle::Paper;
  std::cout << snp::format_trace(system, trace, s, {ascii});
  return kOk;
}

int cmd_transform(const std::string& file, const std::string& out, bool provenance) {
  const auto result = snp::eliminate_delays(load(file));
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
  const auto doc = snp::serialize_system(result.target);
  if (out.empty()) {
    std::cout << doc;
  } else {
    std::ofstream os(out);
    if (!os) throw InputError("cannot write " + out);
    os << doc;
  }
  print_accounting(std::cout, result, provenance);
  return kOk;
}

int cmd_verify(const std::string& file, snp::Count bound) {
  const auto result = snp::eliminate_delays(load(file));
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
  const auto verdict = snp::co_simulate(result.normalized_source, result.target, bound);
  std::cout << snp::format_verdict(verdict);
  print_accounting(std::cout, result, false);
  return verdict.passed() ? kOk : kNotEquivalent;
}

int cmd_gen(const std::string& kind, std::optional<snp::Count> d, std::optional<snp::Count> d1,
            std::optional<snp::Count> d2, const std::string& placement) {
  snp::RoutingInstance instance;
  if (kind == "sequential") {
    snp::Sequential seq;
    if (d) seq.delays.push_back(*d);
    if (d1) seq.delays.push_back(*d1);
    if (d2) seq.delays.push_back(*d2);
    if (seq.delays.empty()) seq.delays.push_back(3);
    instance = seq;
  } else if (kind == "iteration") {
    instance = snp::Iteration{d.value_or(2), placement == "first" ? snp::Placement::First
                                                                  : snp::Placement::Second};
  } else if (kind == "join") {
    instance = snp::Join{d.value_or(3)};
  } else if (kind == "split") {
    snp::Split split{d1 ? d1 : d, d2};
    if (!split.d_left && !split.d_right) split.d_left = 3;
    instance = split;
  } else {
    throw InputError("unknown routing kind '" + kind + "'");
  }
  try {
    std::cout << "# " << snp::describe(instance) << '\n' << snp::serialize_system(snp::generate(instance));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return kOk;
}

int cmd_dot(const std::string& file, bool eliminate) {
  const auto system = load(file);
  if (!eliminate) {
    std::cout << snp::export_dot(system);
    return kOk;
  }
  const auto result = snp::eliminate_delays(system);
  std::cout << snp::export_dot(result.target, &result.provenance);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spiking neural P systems: simulation and delay elimination"};
  app.require_subcommand(1);

  std::string file, style = "paper", out, kind, placement = "second";
  snp::Count max_steps = 1000, bound = 200;
  bool ascii = false, provenance = false, eliminate = false;
  std::optional<snp::Count> d, d1, d2;

  auto* sim = app.add_subcommand("sim", "run a system and print its trace");
  sim->add_option("file", file, "system document ('-' for stdin)")->required();
  sim->add_option("--max-steps", max_steps, "tick budget");
  sim->add_option("--style", style, "paper, table or machine")
      ->check(CLI::IsMember({"paper", "table", "machine"}));
  sim->add_flag("--ascii", ascii, "use < > instead of angle brackets");

  auto* transform = app.add_subcommand("transform", "eliminate delays");
  transform->add_option("file", file, "system document ('-' for stdin)")->required();
  transform->add_option("--out", out, "write the delay-free document here");
  transform->add_flag("--provenance", provenance, "list where each target neuron comes from");

  auto* verify = app.add_subcommand("verify", "eliminate delays and co-simulate");
  verify->add_option("file", file, "system document ('-' for stdin)")->required();
  verify->add_option("--bound", bound, "comparison window in ticks");

  auto* gen = app.add_subcommand("gen", "emit a routing construct");
  gen->add_option("kind", kind, "sequential, iteration, join or split")->required();
  gen->add_option("--d", d, "delay");
  gen->add_option("--d1", d1, "first delay (split: left branch)");
  gen->add_option("--d2", d2, "second delay (split: right branch)");
  gen->add_option("--placement", placement, "iteration: delayed neuron")
      ->check(CLI::IsMember({"first", "second"}));

  auto* dot = app.add_subcommand("dot", "Graphviz export");
  dot->add_option("file", file, "system document ('-' for stdin)")->required();
  dot->add_flag("--eliminate", eliminate, "draw the delay-free system with gadget roles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*sim) return cmd_sim(file, max_steps, style, ascii);
    if (*transform) return cmd_transform(file, out, provenance);
    if (*verify) return cmd_verify(file, bound);
    if (*gen) return cmd_gen(kind, d, d1, d2, placement);
    if (*dot) return cmd_dot(file, eliminate);
  } catch (const snp::NondeterministicChoice& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kEngineError;
  } catch (const snp::CoSimulationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kEngineError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
