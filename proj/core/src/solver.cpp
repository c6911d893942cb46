#include "ovation/solver.hpp"

#include <string>

namespace ovation {

PolicyError::PolicyError(Level failing_level, Level chosen)
    : std::invalid_argument("placement policy chose shyness " + std::to_string(chosen) +
                            " at failing level " + std::to_string(failing_level) +
                            "; expected a value in [0, " +
                            std::to_string(failing_level == 0 ? 0 : failing_level - 1) + "]"),
      failing_level_(failing_level),
      chosen_(chosen) {}

PlacementPolicy PlacementPolicy::explicit_choice(Chooser chooser) {
  if (!chooser) throw std::invalid_argument("explicit placement policy needs a chooser");
  return PlacementPolicy(Kind::Explicit, std::move(chooser));
}

Level PlacementPolicy::choose(Level failing_level) const {
  switch (kind_) {
    case Kind::Boldest:
      return 0;
    case Kind::Laziest:
      return failing_level - 1;
    case Kind::Explicit:
      break;
  }
  const Level chosen = chooser_(failing_level);
  if (chosen >= failing_level) throw PolicyError(failing_level, chosen);
  return chosen;
}

InvitationPlan solve_greedy(const ShynessDistribution& dist, const PlacementPolicy& policy,
                            const SolveOptions& options) {
  InvitationPlan plan;
  if (dist.empty()) return plan;

  const auto counts = dist.counts();
  const Level k = dist.k();
  if (options.record_steps) plan.steps.reserve(k);

  // A friend seated at s' <= s-1 is below every later level too, so it is
  // folded into the running count right away whatever the policy chose.
  // After level s is repaired below >= s holds, so each level needs at most
  // one friend.
  Count below = 0;
  for (Level s = 1; s <= k; ++s) {
    below += counts[s - 1];
    ++plan.checks_performed;
    SolveStep step{s, below, false, std::nullopt};
    if (below < s) {
      const Level chosen = policy.choose(s);
      plan.friends.push_back(chosen);
      ++below;
      step.invited = true;
      step.chosen = chosen;
    }
    if (options.record_steps) plan.steps.push_back(step);
  }
  plan.r = plan.friends.size();
  return plan;
}

InvitationPlan solve_recursive(const ShynessDistribution& dist, const PlacementPolicy& policy) {
  InvitationPlan plan;
  std::vector<Count> counts(dist.counts().begin(), dist.counts().end());
  ShynessDistribution current = dist;
  std::optional<Level> previous_s0;

  while (true) {
    const SolubilityReport report = analyze(current);
    ++plan.checks_performed;
    if (!report.first_insoluble_level) break;

    const Level s0 = *report.first_insoluble_level;
    if (previous_s0 && s0 <= *previous_s0) {
      throw std::logic_error("least insoluble level failed to advance past " +
                             std::to_string(*previous_s0));
    }
    previous_s0 = s0;

    const Level chosen = policy.choose(s0);
    plan.steps.push_back({s0, report.prefix_below[s0], true, chosen});
    plan.friends.push_back(chosen);
    counts[chosen] = checked_add(counts[chosen], 1);
    current = ShynessDistribution(counts);
  }
  plan.r = plan.friends.size();
  return plan;
}

ShynessDistribution apply_friends(const ShynessDistribution& dist,
                                  std::span<const Level> friends) {
  std::vector<Count> counts(dist.counts().begin(), dist.counts().end());
  for (Level f : friends) {
    if (f >= counts.size()) {
      throw std::out_of_range("friend shyness " + std::to_string(f) +
                              " exceeds the audience's highest level");
    }
    counts[f] = checked_add(counts[f], 1);
  }
  return ShynessDistribution(std::move(counts));
}

ShynessDistribution apply_plan(const ShynessDistribution& dist, const InvitationPlan& plan) {
  return apply_friends(dist, plan.friends);
}

}  // namespace ovation
