#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ovation/audience.hpp"

namespace ovation {

/// One problem instance of a batch; case indices run 1..T.
struct Instance {
  std::size_t case_index = 0;
  ShynessDistribution dist;
  /// Trailing zero levels were dropped while reading.
  bool trimmed = false;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.case_index == b.case_index && a.dist == b.dist;
  }
};

struct CaseResult {
  std::size_t case_index = 0;
  Count r = 0;
  std::optional<std::vector<Level>> friends;
};

class ParseError : public std::runtime_error {
 public:
  /// column is 1-based; 0 when the error concerns the whole line.
  ParseError(std::size_t line, std::size_t column, const std::string& reason);

  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/**
 * Contest batch format:
 *
 *   T
 *   S D      (T times; D holds exactly S+1 digits, digit i being p_i)
 *
 * CRLF line endings and trailing blank lines are accepted.
 */
std::vector<Instance> parse_codejam(std::string_view text);

/// Inverse of parse_codejam. Throws std::invalid_argument if a count exceeds 9.
std::string write_codejam(const std::vector<Instance>& instances);

/// "Case #i: r" per result. With emit_friends, a tab and "{a,b,...}" follow r.
std::string write_codejam_results(const std::vector<CaseResult>& results, bool emit_friends = false);

/**
 * Native format: one instance per non-empty line, whitespace-separated
 * decimal counts p_0 ... p_k (full 64-bit range). Lines whose first
 * non-blank character is '#' are comments.
 */
std::vector<Instance> parse_native(std::string_view text);
std::string write_native(const std::vector<Instance>& instances);

/// splitmix64 stream; every draw of the instance generator comes from here.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;

  /// Uniform in [lo, hi] by 128-bit multiply-high of one draw.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) noexcept;

 private:
  std::uint64_t state_;
};

/// Draws k uniform in [0, max_k], then p_0..p_{k-1} uniform in [0, max_count]
/// and p_k uniform in [1, max_count], all from one splitmix64 stream.
ShynessDistribution random_instance(std::uint64_t seed, Level max_k, Count max_count);

/// As random_instance with k fixed instead of drawn.
ShynessDistribution random_instance_with_k(std::uint64_t seed, Level k, Count max_count);

/// Batch of count instances; instance i (0-based) is drawn with seed + i.
std::vector<Instance> random_batch(std::uint64_t seed, std::size_t count, Level max_k,
                                   Count max_count);

}  // namespace ovation
