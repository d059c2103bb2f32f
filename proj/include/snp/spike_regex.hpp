#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace snp {

using Count = std::uint64_t;

/// One arithmetic progression {offset + n * period : n >= 0}.
/// A period of zero denotes the single value `offset`.
struct RegexTerm {
  Count offset = 0;
  Count period = 0;

  bool contains(Count k) const noexcept;

  auto operator<=>(const RegexTerm&) const = default;
};

/// A regular expression over the unary alphabet {a}, stored as a semilinear
/// set: a finite union of arithmetic progressions over spike counts.
///
/// Every unary regular language has this shape, so the forms used by rule
/// guards (a^c, a+, (a^k)+, a^j(a^k)*, unions) are all representable.
/// Terms are kept sorted and deduplicated so that equal sets of terms compare
/// equal.
class SpikeRegex {
 public:
  /// Throws std::invalid_argument when `terms` is empty.
  explicit SpikeRegex(std::vector<RegexTerm> terms);

  /// a^n
  static SpikeRegex exactly(Count n);
  /// a+
  static SpikeRegex plus();
  /// (a^k)+, k >= 1
  static SpikeRegex repeated(Count k);

  bool matches(Count k) const noexcept;

  std::span<const RegexTerm> terms() const noexcept { return terms_; }

  /// When the language is exactly (a^k)+ for some k >= 1, returns k; else 0.
  Count repeated_block() const noexcept;

  bool operator==(const SpikeRegex&) const = default;

 private:
  std::vector<RegexTerm> terms_;
};

}  // namespace snp
