#include "snp/text_format.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace snp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

std::optional<Count> to_count(std::string_view s) {
  Count value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isspace(u) || c == ':' || c == '#' || c == '"' || c == '\\') return false;
  }
  return id.find("->") == std::string_view::npos;
}

// Cursor over one guard alternative, whitespace already removed.
class GuardScanner {
 public:
  explicit GuardScanner(std::string_view s) : s_(s) {}

  RegexTerm term() {
    if (peek() == '(') {
      auto [k, plus] = group();
      return finish(0, k, plus);
    }
    expect('a');
    const bool has_exp = peek() == '^';
    const Count base = has_exp ? exponent() : 1;
    if (!has_exp && (peek() == '+' || peek() == '*')) {
      const bool plus = take() == '+';
      return finish(0, 1, plus);
    }
    if (peek() == '(') {
      auto [k, plus] = group();
      return finish(base, k, plus);
    }
    done();
    return {base, 0};
  }

 private:
  RegexTerm finish(Count offset, Count k, bool plus) {
    done();
    return plus ? RegexTerm{offset + k, k} : RegexTerm{offset, k};
  }

  std::pair<Count, bool> group() {
    expect('(');
    expect('a');
    const Count k = peek() == '^' ? exponent() : 1;
    if (k == 0) fail("repeated block must be at least a^1");
    expect(')');
    const char op = take();
    if (op != '+' && op != '*') fail("expected '+' or '*' after group");
    return {k, op == '+'};
  }

  Count exponent() {
    expect('^');
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    auto value = to_count(s_.substr(start, pos_ - start));
    if (!value) fail("expected a number after '^'");
    return *value;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char take() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  void expect(char c) {
    if (take() != c) fail(std::string("expected '") + c + "'");
  }
  void done() {
    if (pos_ != s_.size()) fail("unexpected trailing text");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad guard '" + std::string(s_) + "': " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

// a, a^n; `allow_zero` also admits "0" for forgetting rules
Count parse_spikes(std::string_view text, bool allow_zero) {
  const auto s = strip_spaces(text);
  if (allow_zero && (s == "0" || s == "lambda")) return 0;
  if (s == "a") return 1;
  if (s.size() > 2 && s[0] == 'a' && s[1] == '^') {
    if (auto n = to_count(std::string_view(s).substr(2))) return *n;
  }
  throw std::invalid_argument("expected a or a^<n>, got '" + s + "'");
}

std::string spikes_text(Count n) { return n == 1 ? "a" : "a^" + std::to_string(n); }

Rule parse_rule_body(std::string_view body) {
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) throw std::invalid_argument("rule needs '<guard> / <consumed>'");
  const auto arrow = body.find("->", slash);
  if (arrow == std::string_view::npos) throw std::invalid_argument("rule needs '->'");
  auto rhs = body.substr(arrow + 2);
  std::string_view delay_text;
  if (auto semi = rhs.find(';'); semi != std::string_view::npos) {
    delay_text = trim(rhs.substr(semi + 1));
    rhs = rhs.substr(0, semi);
  }

  Rule rule;
  rule.guard = parse_guard(body.substr(0, slash));
  rule.consume = parse_spikes(body.substr(slash + 1, arrow - slash - 1), false);
  rule.produce = parse_spikes(rhs, true);
  if (!delay_text.empty()) {
    auto d = to_count(delay_text);
    if (!d) throw std::invalid_argument("bad delay '" + std::string(delay_text) + "'");
    rule.delay = *d;
  }
  return rule;
}

}  // namespace

SpikeRegex parse_guard(std::string_view text) {
  const auto s = strip_spaces(text);
  if (s.empty()) throw std::invalid_argument("empty guard");
  std::vector<RegexTerm> terms;
  std::size_t start = 0;
  while (true) {
    const auto bar = s.find('|', start);
    const auto alt = std::string_view(s).substr(start, bar == std::string::npos ? bar : bar - start);
    if (alt.empty()) throw std::invalid_argument("empty alternative in guard '" + s + "'");
    terms.push_back(GuardScanner(alt).term());
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return SpikeRegex(std::move(terms));
}

std::string format_guard(const SpikeRegex& guard) {
  std::string out;
  for (const auto& t : guard.terms()) {
    if (!out.empty()) out += '|';
    const auto o = std::to_string(t.offset);
    const auto p = std::to_string(t.period);
    if (t.period == 0) {
      out += "a^" + o;
    } else if (t.offset == 1 && t.period == 1) {
      out += "a+";
    } else if (t.offset == 0 && t.period == 1) {
      out += "a*";
    } else if (t.offset == t.period) {
      out += "(a^" + p + ")+";
    } else if (t.offset == 0) {
      out += "(a^" + p + ")*";
    } else {
      out += "a^" + o + "(a^" + p + ")*";
    }
  }
  return out;
}

std::string format_rule(const Rule& rule) {
  std::string out = format_guard(rule.guard) + " / " + spikes_text(rule.consume) + " -> " +
                    (rule.produce == 0 ? std::string("0") : spikes_text(rule.produce));
  if (rule.delay > 0) out += " ; " + std::to_string(rule.delay);
  return out;
}

SnpSystem parse_system(std::string_view text) {
  std::string name;
  bool have_name = false;
  std::optional<std::string> output;
  std::vector<Neuron> neurons;
  std::vector<Synapse> synapses;

  auto find_neuron = [&](std::string_view id) -> Neuron* {
    for (auto& n : neurons) {
      if (n.id == id) return &n;
    }
    return nullptr;
  };

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto space = line.find_first_of(" \t");
    const auto keyword = line.substr(0, space);
    const auto rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
    auto fail = [line_no](const std::string& msg) { throw SyntaxError(line_no, msg); };

    if (keyword == "system") {
      if (have_name) fail("duplicate system declaration");
      if (rest.empty()) fail("system needs a name");
      name = rest;
      have_name = true;
    } else if (keyword == "neuron") {
      std::istringstream words{std::string(rest)};
      std::string id, word;
      words >> id;
      if (!valid_id(id)) fail("bad neuron id '" + id + "'");
      Neuron neuron{id, 0, {}};
      while (words >> word) {
        if (word.rfind("spikes=", 0) != 0) fail("unknown neuron attribute '" + word + "'");
        auto n = to_count(std::string_view(word).substr(7));
        if (!n) fail("bad spike count '" + word + "'");
        neuron.initial_spikes = *n;
      }
      neurons.push_back(std::move(neuron));
    } else if (keyword == "rule") {
      const auto colon = rest.find(':');
      if (colon == std::string_view::npos) fail("rule needs '<id>:'");
      const auto id = trim(rest.substr(0, colon));
      auto* neuron = find_neuron(id);
      if (!neuron) fail("rule for undeclared neuron '" + std::string(id) + "'");
      try {
        neuron->rules.push_back(parse_rule_body(rest.substr(colon + 1)));
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    } else if (keyword == "syn") {
      const auto arrow = rest.find("->");
      if (arrow == std::string_view::npos) fail("synapse needs '<from> -> <to>'");
      const auto from = trim(rest.substr(0, arrow));
      const auto to = trim(rest.substr(arrow + 2));
      if (!valid_id(from) || !valid_id(to)) fail("bad synapse endpoints");
      synapses.push_back({std::string(from), std::string(to)});
    } else if (keyword == "out") {
      if (output) fail("duplicate output declaration");
      if (!valid_id(rest)) fail("bad output id");
      output = std::string(rest);
    } else {
      fail("unknown statement '" + std::string(keyword) + "'");
    }
  }
  if (!output) throw SyntaxError(line_no + 1, "missing output declaration");

  SnpSystem system(std::move(name), std::move(neurons), std::move(synapses), std::move(*output));
  if (auto issues = validate(system); !issues.empty()) throw ValidationError(std::move(issues));
  return system;
}

std::string serialize_system(const SnpSystem& system) {
  std::ostringstream os;
  if (!system.name().empty()) os << "system " << system.name() << '\n';
  for (const auto& neuron : system.neurons()) {
    os << "neuron " << neuron.id;
    if (neuron.initial_spikes > 0) os << " spikes=" << neuron.initial_spikes;
    os << '\n';
    for (const auto& rule : neuron.rules) os << "rule " << neuron.id << ": " << format_rule(rule) << '\n';
  }
  for (const auto& s : system.synapses()) os << "syn " << s.from << " -> " << s.to << '\n';
  os << "out " << system.output() << '\n';
  return os.str();
}

}  // namespace snp
