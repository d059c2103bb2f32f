#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "snp/spike_regex.hpp"

namespace snp {

struct ValidationIssue {
  enum class Kind {
    SelfLoop,
    DanglingSynapse,
    UnknownOutput,
    DuplicateNeuron,
    InvalidRule,
  };

  Kind kind;
  std::string subject;  // neuron id, or "src -> dst" for synapses
  std::string detail;

  bool operator==(const ValidationIssue&) const = default;
};

std::string to_string(ValidationIssue::Kind kind);
/// e.g. "SelfLoop(1)" or "InvalidRule(2: consume must be >= 1)".
std::string to_string(const ValidationIssue& issue);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// More than one rule of a neuron is enabled at the same tick.
class NondeterministicChoice : public Error {
 public:
  NondeterministicChoice(std::string neuron_id, Count tick);

  const std::string& neuron_id() const noexcept { return neuron_id_; }
  Count tick() const noexcept { return tick_; }

 private:
  std::string neuron_id_;
  Count tick_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<ValidationIssue> issues);

  const std::vector<ValidationIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<ValidationIssue> issues_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InvalidDelay : public Error {
 public:
  using Error::Error;
};

/// A delayed rule outside the (a^j)+/a^j -> a;d shape the eliminator handles.
class UnsupportedDelayedRule : public Error {
 public:
  UnsupportedDelayedRule(std::string neuron_id, const std::string& reason);

  const std::string& neuron_id() const noexcept { return neuron_id_; }

 private:
  std::string neuron_id_;
};

}  // namespace snp
