#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

const std::map<std::string, ovation::cli::Format> kFormats{
    {"codejam", ovation::cli::Format::Codejam},
    {"native", ovation::cli::Format::Native},
};

}  // namespace

int main(int argc, char** argv) {
  using namespace ovation::cli;

  CLI::App app{"Standing-ovation minimum invitation toolkit"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Minimum friends per case, as 'Case #i: r'");
  solve_cmd->add_option("input", solve.input, "Input file ('-' for stdin)")->required();
  solve_cmd->add_option("--format", solve.format, "codejam or native")
      ->transform(CLI::CheckedTransformer(kFormats));
  solve_cmd->add_option("--policy", solve.policy, "Friend placement: boldest or laziest")
      ->check(CLI::IsMember({"boldest", "laziest"}));
  solve_cmd->add_flag("--emit-friends", solve.emit_friends,
                      "Append the friend shyness multiset after a tab");

  SimulateArgs simulate;
  auto* sim_cmd = app.add_subcommand("simulate", "Run the applause cascade per case");
  sim_cmd->add_option("input", simulate.input, "Input file ('-' for stdin)")->required();
  sim_cmd->add_option("--format", simulate.format, "codejam or native")
      ->transform(CLI::CheckedTransformer(kFormats));
  sim_cmd->add_option("--with-friends", simulate.with_friends,
                      "Comma-separated friend shyness levels added to every case");
  sim_cmd->add_flag("--trace", simulate.trace, "Print the standing count of every round");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Cross-check all solvers against the oracle");
  check_cmd->add_option("--max-k", check.max_k, "Largest shyness level");
  check_cmd->add_option("--max-count", check.max_count, "Largest count per level");
  check_cmd->add_option("--count", check.count, "Number of random instances");
  check_cmd->add_option("--seed", check.seed, "Generator seed");
  check_cmd->add_flag("--exhaustive", check.exhaustive,
                      "Enumerate every raw count sequence instead of sampling");
  check_cmd->add_flag("--allow-large", check.allow_large, "Lift the oracle's size limits");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write seeded random instances to stdout");
  gen_cmd->add_option("--count", gen.count, "Number of instances");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--max-k", gen.max_k, "Largest shyness level");
  gen_cmd->add_option("--max-count", gen.max_count, "Largest count per level")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--format", gen.format, "codejam or native")
      ->transform(CLI::CheckedTransformer(kFormats));

  BenchArgs bench;
  std::vector<std::string> bench_ks;
  auto* bench_cmd = app.add_subcommand("bench", "Time the greedy solver at several k");
  bench_cmd->add_option("--k", bench_ks, "Comma-separated k values, e.g. 1e6,1e7")
      ->delimiter(',');
  bench_cmd->add_option("--seed", bench.seed, "Generator seed");
  bench_cmd->add_option("--max-count", bench.max_count, "Largest count per level")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--repeat", bench.repeats, "Timed runs per k (best is reported)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  if (*solve_cmd) return cmd_solve(solve, std::cout, std::cerr);
  if (*sim_cmd) return cmd_simulate(simulate, std::cout, std::cerr);
  if (*check_cmd) return cmd_check(check, std::cout, std::cerr);
  if (*gen_cmd) return cmd_gen(gen, std::cout, std::cerr);
  if (*bench_cmd) {
    if (!bench_ks.empty()) {
      bench.ks.clear();
      try {
        for (const auto& text : bench_ks) bench.ks.push_back(parse_level_count(text));
      } catch (const std::exception& e) {
        std::cerr << "bench: " << e.what() << '\n';
        return kExitError;
      }
    }
    return cmd_bench(bench, std::cout, std::cerr);
  }
  return kExitError;
}
