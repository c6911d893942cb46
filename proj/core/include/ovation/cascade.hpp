#pragma once

#include <span>
#include <vector>

#include "ovation/audience.hpp"

namespace ovation {

/// Round-by-round record of an applause cascade.
struct CascadeTrace {
  /// Standing counts c_0 = 0, c_1, ...; strictly increasing except that a
  /// stalled cascade ends with a repeated value.
  std::vector<Count> rounds;
  Count standing_final = 0;
  Count audience_total = 0;
  bool ovation = false;
};

/// Synchronous cascade: every seated spectator with shyness <= c stands in the
/// next round, starting from c = 0, until nobody new stands or everyone is up.
CascadeTrace simulate(const ShynessDistribution& dist);

/// Cascade over the audience merged with invited friends. Friends may sit
/// above k; they join the audience and must stand for an ovation.
CascadeTrace simulate_with_friends(const ShynessDistribution& dist, std::span<const Level> friends);

}  // namespace ovation
