#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ovation/audience.hpp"

namespace ovation {

/**
 * Walks every multiset of `size` levels drawn from [0, max_level], each as a
 * non-decreasing sequence, in lexicographic order. Size 0 yields exactly one
 * (empty) multiset.
 *
 *   MultisetEnumerator e(2, 1);
 *   do { use(e.current()); } while (e.advance());   // {0,0} {0,1} {1,1}
 */
class MultisetEnumerator {
 public:
  MultisetEnumerator(std::size_t size, Level max_level);

  [[nodiscard]] std::span<const Level> current() const noexcept { return slots_; }

  /// Moves to the next multiset; false once the last one has been visited.
  bool advance();

 private:
  std::vector<Level> slots_;
  Level max_level_;
};

/// Calls visit on every multiset in enumeration order; stops early when visit returns false.
void enumerate_multisets(std::size_t size, Level max_level,
                         const std::function<bool(std::span<const Level>)>& visit);

/// Number of multisets of the given size over [0, max_level], i.e. C(size + max_level, size).
std::uint64_t multiset_count(std::size_t size, Level max_level);

class OracleLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SearchExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  /// Largest friend count tried; defaults to k.
  std::optional<std::size_t> cap;
  /// Lift the soft size limits below.
  bool allow_large = false;
  Level max_k = 10;
  Count max_total = 60;
};

struct OracleResult {
  std::size_t min_friends = 0;
  /// First multiset in enumeration order that produced an ovation.
  std::vector<Level> witness;
};

/**
 * Least m for which some m friends produce an ovation, found by trying every
 * multiset of friend levels in [0, k] for m = 0, 1, ..., cap and simulating
 * each merged audience. Uses nothing but the cascade simulator.
 */
OracleResult brute_force_search(const ShynessDistribution& dist, const OracleOptions& options = {});

std::size_t brute_force_min_friends(const ShynessDistribution& dist,
                                    const OracleOptions& options = {});

}  // namespace ovation
