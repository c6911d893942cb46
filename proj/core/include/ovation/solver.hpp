#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ovation/audience.hpp"

namespace ovation {

/// Raised when an explicit placement picks a shyness outside [0, s-1] at failing level s.
class PolicyError : public std::invalid_argument {
 public:
  PolicyError(Level failing_level, Level chosen);

  [[nodiscard]] Level failing_level() const noexcept { return failing_level_; }
  [[nodiscard]] Level chosen() const noexcept { return chosen_; }

 private:
  Level failing_level_;
  Level chosen_;
};

/**
 * Where to seat a friend invited to repair the deficit at a failing level s.
 *
 * Any shyness in [0, s-1] repairs it. Boldest always picks 0, Laziest picks
 * s-1, and Explicit defers to a caller-supplied function whose answers are
 * validated on every call.
 */
class PlacementPolicy {
 public:
  enum class Kind { Boldest, Laziest, Explicit };
  using Chooser = std::function<Level(Level failing_level)>;

  static PlacementPolicy boldest() { return PlacementPolicy(Kind::Boldest, {}); }
  static PlacementPolicy laziest() { return PlacementPolicy(Kind::Laziest, {}); }
  static PlacementPolicy explicit_choice(Chooser chooser);

  [[nodiscard]] Kind kind() const noexcept { return kind_; }

  /// Friend shyness for failing level s >= 1. Throws PolicyError on an invalid explicit choice.
  [[nodiscard]] Level choose(Level failing_level) const;

 private:
  PlacementPolicy(Kind kind, Chooser chooser) : kind_(kind), chooser_(std::move(chooser)) {}

  Kind kind_;
  Chooser chooser_;
};

struct SolveStep {
  Level level = 0;            ///< level s being checked
  Count prefix_seen = 0;      ///< spectators (friends included) below s before any invitation
  bool invited = false;
  std::optional<Level> chosen;  ///< friend shyness when invited
};

/**
 * Minimal set of friends that produces a full ovation.
 *
 * For solve_greedy, steps holds one record per checked level and
 * checks_performed equals k. For solve_recursive, steps holds one record per
 * augmentation round and checks_performed counts solubility analyses (r + 1).
 */
struct InvitationPlan {
  Count r = 0;
  std::vector<Level> friends;
  std::vector<SolveStep> steps;
  std::size_t checks_performed = 0;
};

struct SolveOptions {
  /// Keep the per-step trace. Disable for very large k to stay in O(r) extra memory.
  bool record_steps = true;
};

/// Single left-to-right pass over levels 1..k with a running prefix count.
InvitationPlan solve_greedy(const ShynessDistribution& dist,
                            const PlacementPolicy& policy = PlacementPolicy::boldest(),
                            const SolveOptions& options = {});

/// Repeatedly seats one friend below the least insoluble level until none remains.
InvitationPlan solve_recursive(const ShynessDistribution& dist,
                               const PlacementPolicy& policy = PlacementPolicy::boldest());

/// Adds every friend to its level. Throws std::out_of_range for a friend above k.
ShynessDistribution apply_plan(const ShynessDistribution& dist, const InvitationPlan& plan);
ShynessDistribution apply_friends(const ShynessDistribution& dist, std::span<const Level> friends);

}  // namespace ovation
