#include <gtest/gtest.h>

#include <random>

#include "ovation/audience.hpp"
#include "ovation/cascade.hpp"
#include "ovation/solver.hpp"
#include "reference.hpp"

namespace ovation {
namespace {

std::vector<Level> sorted(std::vector<Level> v) {
  std::sort(v.begin(), v.end());
  return v;
}

const PlacementPolicy kMiddle = PlacementPolicy::explicit_choice([](Level s) { return s / 2; });

TEST(SolveGreedy, OneBoldFriend) {
  for (const auto& policy : {PlacementPolicy::boldest(), PlacementPolicy::laziest()}) {
    const auto plan = solve_greedy({0, 9}, policy);
    EXPECT_EQ(plan.r, 1u);
    EXPECT_EQ(plan.friends, (std::vector<Level>{0}));
  }
}

TEST(SolveGreedy, LaziestSeatsJustBelowEachFailingLevel) {
  // Failing levels are 3 and 4 once the first friend is counted.
  const auto plan = solve_greedy({1, 1, 0, 0, 1, 1}, PlacementPolicy::laziest());
  EXPECT_EQ(plan.r, 2u);
  EXPECT_EQ(plan.friends, (std::vector<Level>{2, 3}));
  EXPECT_TRUE(simulate_with_friends({1, 1, 0, 0, 1, 1}, plan.friends).ovation);
}

TEST(SolveGreedy, TwoFriendsAtShynessTwo) {
  const auto at_two = PlacementPolicy::explicit_choice([](Level) { return 2; });
  const auto plan = solve_greedy({1, 1, 0, 0, 1, 1}, at_two);
  EXPECT_EQ(plan.friends, (std::vector<Level>{2, 2}));
  EXPECT_TRUE(simulate_with_friends({1, 1, 0, 0, 1, 1}, plan.friends).ovation);
}

TEST(SolveGreedy, NothingToDo) {
  const auto plan = solve_greedy({1, 1, 1, 1});
  EXPECT_EQ(plan.r, 0u);
  EXPECT_TRUE(plan.friends.empty());
  EXPECT_EQ(plan.checks_performed, 3u);
}

TEST(SolveGreedy, EmptyAndSingleLevel) {
  const auto empty = solve_greedy(ShynessDistribution{});
  EXPECT_EQ(empty.r, 0u);
  EXPECT_EQ(empty.checks_performed, 0u);
  const auto single = solve_greedy({4});
  EXPECT_EQ(single.r, 0u);
  EXPECT_EQ(single.checks_performed, 0u);
}

TEST(SolveGreedy, StepTrace) {
  const auto plan = solve_greedy({0, 0, 1}, PlacementPolicy::boldest());
  ASSERT_EQ(plan.steps.size(), 2u);
  EXPECT_EQ(plan.steps[0].level, 1u);
  EXPECT_EQ(plan.steps[0].prefix_seen, 0u);
  EXPECT_TRUE(plan.steps[0].invited);
  EXPECT_EQ(plan.steps[0].chosen, 0u);
  EXPECT_EQ(plan.steps[1].level, 2u);
  EXPECT_EQ(plan.steps[1].prefix_seen, 1u);
  EXPECT_TRUE(plan.steps[1].invited);

  const auto quiet = solve_greedy({0, 0, 1}, PlacementPolicy::boldest(), {.record_steps = false});
  EXPECT_TRUE(quiet.steps.empty());
  EXPECT_EQ(quiet.r, 2u);
  EXPECT_EQ(quiet.checks_performed, 2u);
}

TEST(SolveGreedy, InvalidExplicitChoice) {
  const auto bad = PlacementPolicy::explicit_choice([](Level s) { return s; });
  try {
    (void)solve_greedy({0, 9}, bad);
    FAIL() << "expected PolicyError";
  } catch (const PolicyError& e) {
    EXPECT_EQ(e.failing_level(), 1u);
    EXPECT_EQ(e.chosen(), 1u);
  }
  EXPECT_THROW((void)solve_recursive({0, 9}, bad), PolicyError);
  EXPECT_THROW((void)PlacementPolicy::explicit_choice({}), std::invalid_argument);
}

TEST(SolveRecursive, Examples) {
  const auto plan = solve_recursive({0, 9});
  EXPECT_EQ(plan.r, 1u);
  EXPECT_EQ(plan.friends, (std::vector<Level>{0}));
  ASSERT_EQ(plan.steps.size(), 1u);
  EXPECT_EQ(plan.steps[0].level, 1u);

  EXPECT_EQ(solve_recursive({1, 1, 1}).r, 0u);
  EXPECT_EQ(solve_recursive({0, 0, 0, 5}).r, 3u);
  EXPECT_EQ(solve_recursive(ShynessDistribution{}).r, 0u);
}

TEST(SolveRecursive, LeastInsolubleLevelStrictlyAdvances) {
  const auto plan = solve_recursive({0, 0, 0, 0, 0, 0, 2}, PlacementPolicy::laziest());
  ASSERT_EQ(plan.steps.size(), 6u);
  for (std::size_t i = 1; i < plan.steps.size(); ++i) {
    EXPECT_LT(plan.steps[i - 1].level, plan.steps[i].level);
  }
  EXPECT_EQ(plan.checks_performed, plan.r + 1);
}

TEST(ApplyPlan, Examples) {
  InvitationPlan plan;
  plan.friends = {0};
  EXPECT_EQ(apply_plan({0, 9}, plan), (ShynessDistribution{1, 9}));
  EXPECT_EQ(apply_plan({1, 1, 1}, InvitationPlan{}), (ShynessDistribution{1, 1, 1}));
  plan.friends = {0, 1, 2};
  const auto result = apply_plan({0, 0, 0, 5}, plan);
  EXPECT_EQ(result, (ShynessDistribution{1, 1, 1, 5}));
  EXPECT_TRUE(is_s_soluble(result, 3));
  plan.friends = {2};
  EXPECT_THROW((void)apply_plan({0, 9}, plan), std::out_of_range);
}

TEST(SolverProperties, AgreementBoundsAndMinimality) {
  std::mt19937_64 rng(99);
  const std::vector<PlacementPolicy> policies{PlacementPolicy::boldest(), PlacementPolicy::laziest(),
                                              kMiddle};
  for (int i = 0; i < 400; ++i) {
    std::uniform_int_distribution<std::size_t> len(1, 9);
    std::uniform_int_distribution<Count> value(0, 3);
    std::vector<Count> raw(len(rng));
    for (auto& c : raw) c = value(rng);
    const ShynessDistribution d(raw);
    if (d.empty()) continue;
    const Level k = d.k();
    const Count expected = closed_form_answer(d);

    for (const auto& p1 : policies) {
      const auto plan = solve_greedy(d, p1);
      EXPECT_EQ(plan.r, expected);
      EXPECT_EQ(plan.r, plan.friends.size());
      EXPECT_EQ(plan.checks_performed, k);
      EXPECT_LE(plan.r, k);
      std::size_t invited = 0;
      for (const auto& step : plan.steps) {
        if (!step.invited) continue;
        ++invited;
        ASSERT_TRUE(step.chosen.has_value());
        EXPECT_LE(*step.chosen + 1, step.level);
      }
      EXPECT_EQ(invited, plan.r);

      const auto augmented = apply_plan(d, plan);
      EXPECT_TRUE(will_ovate(augmented));
      EXPECT_TRUE(reference::asynchronous_ovation(
          std::vector<Count>(augmented.counts().begin(), augmented.counts().end())));
      for (std::size_t drop = 0; drop < plan.friends.size(); ++drop) {
        auto fewer = plan.friends;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
        EXPECT_FALSE(simulate_with_friends(d, fewer).ovation);
      }
      for (const auto& p2 : policies) {
        const auto rec = solve_recursive(d, p2);
        EXPECT_EQ(rec.r, plan.r);
        EXPECT_LE(rec.steps.size(), k);
      }
    }
  }
}

TEST(SolverProperties, BoundAttainedByAllShyFamily) {
  for (Level k = 1; k <= 12; ++k) {
    for (Count c : {1, 5, 9}) {
      std::vector<Count> raw(k + 1, 0);
      raw[k] = c;
      const ShynessDistribution d(raw);
      EXPECT_EQ(solve_greedy(d).r, k);
      EXPECT_EQ(solve_recursive(d, PlacementPolicy::laziest()).r, k);
    }
  }
}

TEST(SolverProperties, BoldSpectatorHelpsByAtMostOne) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    std::uniform_int_distribution<std::size_t> len(1, 10);
    std::uniform_int_distribution<Count> value(0, 2);
    std::vector<Count> raw(len(rng));
    for (auto& c : raw) c = value(rng);
    const ShynessDistribution d(raw);
    if (d.empty()) continue;
    raw.resize(d.levels());
    auto more = raw;
    ++more[0];
    const Count before = solve_greedy(d).r;
    const Count after = solve_greedy(ShynessDistribution(more)).r;
    EXPECT_LE(after, before);
    EXPECT_LE(before - after, 1u);
  }
}

TEST(SolverProperties, FriendsSortedIndependentOfRecursionOrder) {
  // Boldest puts every friend at 0 for both solvers.
  const auto g = solve_greedy({0, 0, 1, 0, 3}, PlacementPolicy::boldest());
  const auto r = solve_recursive({0, 0, 1, 0, 3}, PlacementPolicy::boldest());
  EXPECT_EQ(sorted(g.friends), sorted(r.friends));
}

}  // namespace
}  // namespace ovation
