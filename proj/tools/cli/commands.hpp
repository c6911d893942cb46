#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ovation/ovation.hpp"

namespace ovation::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,     ///< domain, argument or parse error
  kExitMismatch = 2,  ///< cross-check found a disagreement
};

enum class Format { Codejam, Native };

Format parse_format(const std::string& name);
PlacementPolicy parse_policy(const std::string& name);

/// Comma-separated shyness levels, e.g. "0,2,2". An empty string is the empty multiset.
std::vector<Level> parse_level_list(const std::string& text);

/// Reads a whole file; "-" reads standard input.
std::string read_input(const std::string& path);

std::vector<Instance> parse_instances(const std::string& text, Format format);

struct SolveArgs {
  std::string input;
  Format format = Format::Codejam;
  std::string policy = "boldest";
  bool emit_friends = false;
};
int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);

struct SimulateArgs {
  std::string input;
  Format format = Format::Codejam;
  std::string with_friends;
  bool trace = false;
};
int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err);

/// Solver hook used by the cross-check; tests substitute a faulty one.
using GreedySolver =
    std::function<InvitationPlan(const ShynessDistribution&, const PlacementPolicy&)>;

/// Every disagreement found on one instance, as human-readable lines; empty when all agree.
std::vector<std::string> cross_check(const ShynessDistribution& dist, const GreedySolver& greedy,
                                     bool allow_large_oracle = false);

/// Calls visit on every raw count sequence of the given length with entries in [0, max_count].
void for_each_raw_sequence(std::size_t length, Count max_count,
                           const std::function<void(const std::vector<Count>&)>& visit);

struct CheckArgs {
  Level max_k = 4;
  Count max_count = 3;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  bool exhaustive = false;
  bool allow_large = false;
};
int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err,
              const GreedySolver& greedy = {});

struct GenArgs {
  std::size_t count = 10;
  std::uint64_t seed = 1;
  Level max_k = 8;
  Count max_count = 5;
  Format format = Format::Native;
};
int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err);

struct BenchResult {
  Level k = 0;
  Count r = 0;
  double seconds = 0.0;       ///< best of the repeats
  double ns_per_level = 0.0;  ///< 0 when k = 0
};

/// Times solve_greedy (no step trace) on random_instance_with_k(seed, k, max_count).
BenchResult bench_greedy(Level k, std::uint64_t seed, Count max_count = 2, int repeats = 5);

struct BenchArgs {
  std::vector<Level> ks{1'000'000, 10'000'000};
  std::uint64_t seed = 1;
  Count max_count = 2;
  int repeats = 5;
};
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

/// Accepts plain integers and exact scientific forms such as "1e6".
Level parse_level_count(const std::string& text);

}  // namespace ovation::cli
