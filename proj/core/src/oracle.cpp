#include "ovation/oracle.hpp"

#include <string>

#include "ovation/cascade.hpp"

namespace ovation {

MultisetEnumerator::MultisetEnumerator(std::size_t size, Level max_level)
    : slots_(size, 0), max_level_(max_level) {}

bool MultisetEnumerator::advance() {
  // Bump the rightmost slot that is not yet at max_level and reset everything
  // after it to the same value, keeping the sequence non-decreasing.
  std::size_t i = slots_.size();
  while (i > 0 && slots_[i - 1] == max_level_) --i;
  if (i == 0) return false;
  const Level bumped = slots_[i - 1] + 1;
  for (std::size_t j = i - 1; j < slots_.size(); ++j) slots_[j] = bumped;
  return true;
}

void enumerate_multisets(std::size_t size, Level max_level,
                         const std::function<bool(std::span<const Level>)>& visit) {
  MultisetEnumerator e(size, max_level);
  do {
    if (!visit(e.current())) return;
  } while (e.advance());
}

std::uint64_t multiset_count(std::size_t size, Level max_level) {
  // C(size + max_level, size) built up incrementally; each partial product is
  // itself a binomial coefficient, so the division is exact.
  std::uint64_t result = 1;
  for (std::size_t i = 1; i <= size; ++i) {
    result = result * (max_level + i) / i;
  }
  return result;
}

OracleResult brute_force_search(const ShynessDistribution& dist, const OracleOptions& options) {
  if (dist.empty()) return {};

  const Level k = dist.k();
  if (!options.allow_large && (k > options.max_k || dist.total() > options.max_total)) {
    throw OracleLimitError("instance " + to_string(dist) + " exceeds oracle limits (k <= " +
                           std::to_string(options.max_k) + ", total <= " +
                           std::to_string(options.max_total) + "); set allow_large to override");
  }

  // Friends are only placed at levels [0, k]. A friend above k stands no
  // earlier than one at k and is still owed a standing slot, so moving it down
  // to k can only help; the restricted search therefore loses no optimum.
  const std::size_t cap = options.cap.value_or(k);
  for (std::size_t m = 0; m <= cap; ++m) {
    OracleResult found;
    bool hit = false;
    enumerate_multisets(m, k, [&](std::span<const Level> friends) {
      if (simulate_with_friends(dist, friends).ovation) {
        found.min_friends = m;
        found.witness.assign(friends.begin(), friends.end());
        hit = true;
        return false;
      }
      return true;
    });
    if (hit) return found;
  }
  throw SearchExhaustedError("no ovation with up to " + std::to_string(cap) +
                             " friends for audience " + to_string(dist));
}

std::size_t brute_force_min_friends(const ShynessDistribution& dist,
                                    const OracleOptions& options) {
  return brute_force_search(dist, options).min_friends;
}

}  // namespace ovation
