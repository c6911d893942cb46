#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace ovation::cli {

Format parse_format(const std::string& name) {
  if (name == "codejam") return Format::Codejam;
  if (name == "native") return Format::Native;
  throw std::invalid_argument("unknown format '" + name + "' (expected codejam or native)");
}

PlacementPolicy parse_policy(const std::string& name) {
  if (name == "boldest") return PlacementPolicy::boldest();
  if (name == "laziest") return PlacementPolicy::laziest();
  throw std::invalid_argument("unknown policy '" + name + "' (expected boldest or laziest)");
}

std::vector<Level> parse_level_list(const std::string& text) {
  std::vector<Level> levels;
  if (text.empty()) return levels;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (item.empty() || !std::all_of(item.begin(), item.end(),
                                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("bad shyness level '" + item + "' in friend list '" + text + "'");
    }
    levels.push_back(std::stoull(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return levels;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<Instance> parse_instances(const std::string& text, Format format) {
  return format == Format::Codejam ? parse_codejam(text) : parse_native(text);
}

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const PlacementPolicy policy = parse_policy(args.policy);
    const auto instances = parse_instances(read_input(args.input), args.format);
    std::vector<CaseResult> results;
    results.reserve(instances.size());
    for (const auto& inst : instances) {
      InvitationPlan plan = solve_greedy(inst.dist, policy, {.record_steps = false});
      results.push_back({inst.case_index, plan.r, std::move(plan.friends)});
    }
    out << write_codejam_results(results, args.emit_friends);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "solve: " << e.what() << '\n';
    return kExitError;
  }
}

int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const auto friends = parse_level_list(args.with_friends);
    const auto instances = parse_instances(read_input(args.input), args.format);
    for (const auto& inst : instances) {
      const CascadeTrace trace = simulate_with_friends(inst.dist, friends);
      out << "Case #" << inst.case_index << ": " << (trace.ovation ? "ovation" : "no-ovation")
          << " standing=" << trace.standing_final << '/' << trace.audience_total << '\n';
      if (args.trace) {
        for (std::size_t t = 0; t < trace.rounds.size(); ++t) {
          out << "  round " << t << ": " << trace.rounds[t] << '\n';
        }
      }
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "simulate: " << e.what() << '\n';
    return kExitError;
  }
}

namespace {

std::string native_line(const ShynessDistribution& dist) {
  std::string line = write_native({Instance{1, dist, false}});
  line.pop_back();
  return line;
}

std::string join(const std::vector<Level>& levels) {
  std::string s = "{";
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(levels[i]);
  }
  return s + "}";
}

}  // namespace

std::vector<std::string> cross_check(const ShynessDistribution& dist, const GreedySolver& greedy,
                                     bool allow_large_oracle) {
  std::vector<std::string> issues;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) issues.push_back(what);
  };

  const InvitationPlan bold = greedy(dist, PlacementPolicy::boldest());
  const InvitationPlan lazy = greedy(dist, PlacementPolicy::laziest());
  const Count rec_bold = solve_recursive(dist, PlacementPolicy::boldest()).r;
  const Count rec_lazy = solve_recursive(dist, PlacementPolicy::laziest()).r;
  const Count closed = closed_form_answer(dist);
  OracleOptions oracle_options;
  oracle_options.allow_large = allow_large_oracle;
  const Count oracle = brute_force_min_friends(dist, oracle_options);

  const auto vs = [&](const char* name, Count value) {
    expect(value == oracle, std::string(name) + " = " + std::to_string(value) +
                                " but oracle = " + std::to_string(oracle));
  };
  vs("greedy(boldest)", bold.r);
  vs("greedy(laziest)", lazy.r);
  vs("recursive(boldest)", rec_bold);
  vs("recursive(laziest)", rec_lazy);
  vs("closed-form", closed);

  const bool predicted = will_ovate(dist);
  const bool simulated = simulate(dist).ovation;
  expect(predicted == simulated, std::string("will_ovate = ") + (predicted ? "true" : "false") +
                                     " but simulation says " + (simulated ? "ovation" : "no-ovation"));
  expect((bold.r == 0) == predicted, "r = 0 does not match will_ovate");

  const Level k = dist.empty() ? 0 : dist.k();
  expect(bold.r <= k, "r = " + std::to_string(bold.r) + " exceeds k = " + std::to_string(k));
  expect(bold.checks_performed == k, "greedy performed " + std::to_string(bold.checks_performed) +
                                         " checks, expected k = " + std::to_string(k));

  for (const InvitationPlan* plan : {&bold, &lazy}) {
    const bool fits = std::all_of(plan->friends.begin(), plan->friends.end(),
                                  [&](Level f) { return !dist.empty() && f <= k; });
    expect(fits, "plan " + join(plan->friends) + " seats a friend above k");
    if (!fits) continue;
    expect(will_ovate(apply_plan(dist, *plan)), "plan " + join(plan->friends) +
                                                    " leaves the audience insoluble");
    expect(simulate_with_friends(dist, plan->friends).ovation,
           "plan " + join(plan->friends) + " does not produce a simulated ovation");
    for (std::size_t drop = 0; drop < plan->friends.size(); ++drop) {
      std::vector<Level> fewer = plan->friends;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
      expect(!simulate_with_friends(dist, fewer).ovation,
             "plan " + join(plan->friends) + " still ovates without friend #" +
                 std::to_string(drop));
    }
  }
  return issues;
}

void for_each_raw_sequence(std::size_t length, Count max_count,
                           const std::function<void(const std::vector<Count>&)>& visit) {
  std::vector<Count> seq(length, 0);
  while (true) {
    visit(seq);
    std::size_t i = 0;
    while (i < length && seq[i] == max_count) seq[i++] = 0;
    if (i == length) return;
    ++seq[i];
  }
}

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err,
              const GreedySolver& greedy) {
  const GreedySolver solver = greedy ? greedy : [](const ShynessDistribution& d,
                                                   const PlacementPolicy& p) {
    return solve_greedy(d, p);
  };

  std::size_t checked = 0;
  std::size_t mismatches = 0;
  auto check_one = [&](const ShynessDistribution& dist) {
    ++checked;
    const auto issues = cross_check(dist, solver, args.allow_large);
    if (issues.empty()) return;
    ++mismatches;
    err << "mismatch on instance: " << native_line(dist) << '\n';
    for (const auto& issue : issues) err << "  " << issue << '\n';
  };

  try {
    if (args.exhaustive) {
      for_each_raw_sequence(args.max_k + 1, args.max_count, [&](const std::vector<Count>& raw) {
        check_one(ShynessDistribution(raw));
      });
    } else {
      for (const auto& inst : random_batch(args.seed, args.count, args.max_k, args.max_count)) {
        check_one(inst.dist);
      }
    }
  } catch (const std::exception& e) {
    err << "check: " << e.what() << '\n';
    return kExitError;
  }

  out << "checked " << checked << " instances, " << mismatches << " mismatches\n";
  return mismatches == 0 ? kExitOk : kExitMismatch;
}

int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  if (args.format == Format::Codejam && args.max_count > 9) {
    err << "gen: codejam format holds one digit per level; --max-count must be <= 9\n";
    return kExitError;
  }
  try {
    const auto batch = random_batch(args.seed, args.count, args.max_k, args.max_count);
    out << (args.format == Format::Codejam ? write_codejam(batch) : write_native(batch));
    return kExitOk;
  } catch (const std::exception& e) {
    err << "gen: " << e.what() << '\n';
    return kExitError;
  }
}

BenchResult bench_greedy(Level k, std::uint64_t seed, Count max_count, int repeats) {
  const ShynessDistribution dist = random_instance_with_k(seed, k, max_count);
  BenchResult result;
  result.k = k;
  result.seconds = -1.0;
  for (int i = 0; i < std::max(repeats, 1); ++i) {
    const auto start = std::chrono::steady_clock::now();
    const InvitationPlan plan = solve_greedy(dist, PlacementPolicy::boldest(), {.record_steps = false});
    const auto stop = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(stop - start).count();
    if (result.seconds < 0 || seconds < result.seconds) result.seconds = seconds;
    result.r = plan.r;
  }
  result.ns_per_level = k == 0 ? 0.0 : result.seconds * 1e9 / static_cast<double>(k);
  return result;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  try {
    for (Level k : args.ks) {
      const BenchResult res = bench_greedy(k, args.seed, args.max_count, args.repeats);
      std::ostringstream line;
      line.setf(std::ios::fixed);
      line.precision(3);
      line << "k=" << res.k << " r=" << res.r << " time_ms=" << res.seconds * 1e3
           << " ns_per_level=" << res.ns_per_level;
      out << line.str() << '\n';
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "bench: " << e.what() << '\n';
    return kExitError;
  }
}

Level parse_level_count(const std::string& text) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a level count: '" + text + "'");
  }
  if (used != text.size() || value < 0 || value != std::floor(value) || value > 1e15) {
    throw std::invalid_argument("not a level count: '" + text + "'");
  }
  return static_cast<Level>(value);
}

}  // namespace ovation::cli
