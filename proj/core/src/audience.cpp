#include "ovation/audience.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace ovation {

Count checked_add(Count a, Count b) {
  if (a > std::numeric_limits<Count>::max() - b) {
    throw AudienceError("spectator count overflow: " + std::to_string(a) + " + " +
                        std::to_string(b) + " exceeds 64 bits");
  }
  return a + b;
}

ShynessDistribution::ShynessDistribution(std::vector<Count> counts)
    : counts_(std::move(counts)) {
  while (!counts_.empty() && counts_.back() == 0) {
    counts_.pop_back();
  }
  for (Count c : counts_) {
    total_ = checked_add(total_, c);
  }
}

Level ShynessDistribution::k() const {
  if (counts_.empty()) {
    throw std::logic_error("k is undefined for an empty audience");
  }
  return counts_.size() - 1;
}

Normalized normalize(std::span<const Count> raw) {
  Normalized out{ShynessDistribution(std::vector<Count>(raw.begin(), raw.end())), false};
  out.trimmed = out.dist.levels() != raw.size();
  return out;
}

std::string to_string(const ShynessDistribution& dist) {
  std::ostringstream os;
  os << '(';
  const auto counts = dist.counts();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i != 0) os << ',';
    os << counts[i];
  }
  os << ')';
  return os.str();
}

namespace {

void require_level(const ShynessDistribution& dist, Level s) {
  if (dist.empty() || s > dist.k()) {
    throw std::out_of_range("shyness level " + std::to_string(s) +
                            " outside [0, k] for audience " + to_string(dist));
  }
}

}  // namespace

Count prefix_below(const ShynessDistribution& dist, Level s) {
  require_level(dist, s);
  const auto counts = dist.counts();
  Count sum = 0;
  for (Level j = 0; j < s; ++j) sum += counts[j];
  return sum;
}

SolubilityReport analyze(const ShynessDistribution& dist, AnalyzeCounters& counters) {
  SolubilityReport report;
  if (dist.empty()) return report;

  const auto counts = dist.counts();
  const Level k = dist.k();
  report.prefix_below.assign(k + 1, 0);
  report.deficits.assign(k + 1, 0);

  // Sums never exceed total(), which was overflow-checked at construction.
  Count below = 0;
  for (Level s = 1; s <= k; ++s) {
    below += counts[s - 1];
    ++counters.additions;
    report.prefix_below[s] = below;
    if (below < s) {
      report.deficits[s] = s - below;
      if (!report.first_insoluble_level) report.first_insoluble_level = s;
    }
  }
  report.k_soluble = !report.first_insoluble_level.has_value();
  return report;
}

SolubilityReport analyze(const ShynessDistribution& dist) {
  AnalyzeCounters unused;
  return analyze(dist, unused);
}

bool is_s_soluble(const ShynessDistribution& dist, Level s) {
  require_level(dist, s);
  // Level 0 compares the empty sum against 0 and can never fail.
  const auto counts = dist.counts();
  Count below = 0;
  for (Level t = 1; t <= s; ++t) {
    below += counts[t - 1];
    if (below < t) return false;
  }
  return true;
}

bool will_ovate(const ShynessDistribution& dist) {
  return dist.empty() || is_s_soluble(dist, dist.k());
}

Count closed_form_answer(const ShynessDistribution& dist) {
  if (dist.empty()) return 0;
  const auto counts = dist.counts();
  Count below = 0;
  Count worst = 0;
  for (Level s = 1; s <= dist.k(); ++s) {
    below += counts[s - 1];
    if (below < s) worst = std::max<Count>(worst, s - below);
  }
  return worst;
}

}  // namespace ovation
