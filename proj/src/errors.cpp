#include "snp/errors.hpp"

#include <sstream>

namespace snp {

std::string to_string(ValidationIssue::Kind kind) {
  switch (kind) {
    case ValidationIssue::Kind::SelfLoop: return "SelfLoop";
    case ValidationIssue::Kind::DanglingSynapse: return "DanglingSynapse";
    case ValidationIssue::Kind::UnknownOutput: return "UnknownOutput";
    case ValidationIssue::Kind::DuplicateNeuron: return "DuplicateNeuron";
    case ValidationIssue::Kind::InvalidRule: return "InvalidRule";
  }
  return "Unknown";
}

std::string to_string(const ValidationIssue& issue) {
  std::string out = to_string(issue.kind) + "(" + issue.subject;
  if (!issue.detail.empty()) out += ": " + issue.detail;
  return out + ")";
}

namespace {

std::string describe(const std::vector<ValidationIssue>& issues) {
  std::ostringstream os;
  os << "invalid system:";
  for (const auto& issue : issues) os << ' ' << to_string(issue);
  return os.str();
}

}  // namespace

NondeterministicChoice::NondeterministicChoice(std::string neuron_id, Count tick)
    : Error("neuron " + neuron_id + " has more than one enabled rule at tick " +
            std::to_string(tick)),
      neuron_id_(std::move(neuron_id)),
      tick_(tick) {}

ValidationError::ValidationError(std::vector<ValidationIssue> issues)
    : Error(describe(issues)), issues_(std::move(issues)) {}

SyntaxError::SyntaxError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

UnsupportedDelayedRule::UnsupportedDelayedRule(std::string neuron_id, const std::string& reason)
    : Error("unsupported delayed rule in neuron " + neuron_id + ": " + reason),
      neuron_id_(std::move(neuron_id)) {}

}  // namespace snp
