#include "snp/spike_regex.hpp"

#include <algorithm>
#include <stdexcept>

namespace snp {

bool RegexTerm::contains(Count k) const noexcept {
  if (period == 0) return k == offset;
  return k >= offset && (k - offset) % period == 0;
}

SpikeRegex::SpikeRegex(std::vector<RegexTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("spike regex needs at least one term");
  std::sort(terms_.begin(), terms_.end());
  terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
}

SpikeRegex SpikeRegex::exactly(Count n) { return SpikeRegex({{n, 0}}); }

SpikeRegex SpikeRegex::plus() { return SpikeRegex({{1, 1}}); }

SpikeRegex SpikeRegex::repeated(Count k) {
  if (k == 0) throw std::invalid_argument("(a^k)+ needs k >= 1");
  return SpikeRegex({{k, k}});
}

bool SpikeRegex::matches(Count k) const noexcept {
  return std::any_of(terms_.begin(), terms_.end(),
                     [k](const RegexTerm& t) { return t.contains(k); });
}

Count SpikeRegex::repeated_block() const noexcept {
  if (terms_.size() != 1) return 0;
  const auto& t = terms_.front();
  return (t.period >= 1 && t.offset == t.period) ? t.period : 0;
}

}  // namespace snp
