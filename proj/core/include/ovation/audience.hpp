#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ovation {

/// Number of spectators at one shyness level.
using Count = std::uint64_t;

/// A shyness level: a spectator at level s stands once s others are standing.
using Level = std::size_t;

/// Raised when a distribution cannot be built (the spectator total overflows 64 bits).
class AudienceError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/**
 * Spectator counts per shyness level, index s holding the number of
 * spectators with shyness s.
 *
 * Always stored normalized: trailing zero levels are dropped, so a
 * non-empty distribution has a nonzero count at its highest level. The
 * empty distribution is a legal value and stands for an empty audience.
 */
class ShynessDistribution {
 public:
  ShynessDistribution() = default;

  /// Trims trailing zeros. Throws AudienceError if the total overflows.
  explicit ShynessDistribution(std::vector<Count> counts);

  ShynessDistribution(std::initializer_list<Count> counts)
      : ShynessDistribution(std::vector<Count>(counts)) {}

  [[nodiscard]] bool empty() const noexcept { return counts_.empty(); }

  /// Highest shyness level present. Throws std::logic_error on an empty audience.
  [[nodiscard]] Level k() const;

  /// Number of levels, k + 1 (0 when empty).
  [[nodiscard]] std::size_t levels() const noexcept { return counts_.size(); }

  [[nodiscard]] Count total() const noexcept { return total_; }

  [[nodiscard]] std::span<const Count> counts() const noexcept { return counts_; }

  /// Count at level s; 0 for levels above k.
  [[nodiscard]] Count at(Level s) const noexcept {
    return s < counts_.size() ? counts_[s] : 0;
  }

  friend bool operator==(const ShynessDistribution&,
                         const ShynessDistribution&) = default;

 private:
  std::vector<Count> counts_;
  Count total_ = 0;
};

struct Normalized {
  ShynessDistribution dist;
  bool trimmed = false;
};

/// Builds a distribution from raw counts, reporting whether trailing zeros were dropped.
Normalized normalize(std::span<const Count> raw);

/// Adds two counts, throwing AudienceError on overflow.
Count checked_add(Count a, Count b);

/// Renders counts as "(p0,p1,...)" for diagnostics.
std::string to_string(const ShynessDistribution& dist);

/// Sum of counts strictly below level s. Throws std::out_of_range unless s <= k.
Count prefix_below(const ShynessDistribution& dist, Level s);

/// Solubility summary of a distribution, filled in one left-to-right pass.
struct SolubilityReport {
  /// prefix_below[s] = number of spectators with shyness < s, for s in [0, k].
  std::vector<Count> prefix_below;
  /// deficits[s] = max(0, s - prefix_below[s]).
  std::vector<Count> deficits;
  /// Least level with a positive deficit; empty when the audience is k-soluble.
  std::optional<Level> first_insoluble_level;
  bool k_soluble = true;
};

/// Operation counter for tests that pin the single-pass behaviour of analyze().
struct AnalyzeCounters {
  std::size_t additions = 0;
};

SolubilityReport analyze(const ShynessDistribution& dist);
SolubilityReport analyze(const ShynessDistribution& dist, AnalyzeCounters& counters);

/// True iff every level s' <= s has at least s' spectators below it.
/// Throws std::out_of_range unless s <= k.
bool is_s_soluble(const ShynessDistribution& dist, Level s);

/// True iff the audience reaches a full standing ovation unaided (k-solubility).
bool will_ovate(const ShynessDistribution& dist);

/// Largest deficit over all levels; equals the minimum number of friends to invite.
Count closed_form_answer(const ShynessDistribution& dist);

}  // namespace ovation
