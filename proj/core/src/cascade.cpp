#include "ovation/cascade.hpp"

#include <algorithm>

namespace ovation {
namespace {

struct LevelRun {
  Level level;
  Count count;
};

// Runs must be sorted by level. Friends far above k stay sparse this way, so
// a friend at shyness 10^15 costs one entry instead of a dense table.
CascadeTrace run_cascade(std::span<const LevelRun> runs, Count total) {
  CascadeTrace trace;
  trace.audience_total = total;
  trace.rounds.push_back(0);

  Count standing = 0;
  std::size_t next_run = 0;
  while (standing != total) {
    Count reached = standing;
    while (next_run < runs.size() && runs[next_run].level <= standing) {
      reached += runs[next_run].count;
      ++next_run;
    }
    trace.rounds.push_back(reached);
    if (reached == standing) break;
    standing = reached;
  }
  trace.standing_final = standing;
  trace.ovation = standing == total;
  return trace;
}

}  // namespace

CascadeTrace simulate(const ShynessDistribution& dist) {
  std::vector<LevelRun> runs;
  runs.reserve(dist.levels());
  const auto counts = dist.counts();
  for (Level s = 0; s < counts.size(); ++s) {
    if (counts[s] != 0) runs.push_back({s, counts[s]});
  }
  return run_cascade(runs, dist.total());
}

CascadeTrace simulate_with_friends(const ShynessDistribution& dist,
                                   std::span<const Level> friends) {
  std::vector<Count> dense(dist.counts().begin(), dist.counts().end());
  std::vector<Level> high;
  for (Level f : friends) {
    if (f < dense.size()) {
      dense[f] = checked_add(dense[f], 1);
    } else {
      high.push_back(f);
    }
  }
  std::sort(high.begin(), high.end());

  std::vector<LevelRun> runs;
  runs.reserve(dense.size() + high.size());
  Count total = 0;
  for (Level s = 0; s < dense.size(); ++s) {
    if (dense[s] == 0) continue;
    runs.push_back({s, dense[s]});
    total = checked_add(total, dense[s]);
  }
  for (Level f : high) {
    if (!runs.empty() && runs.back().level == f) {
      ++runs.back().count;
    } else {
      runs.push_back({f, 1});
    }
    total = checked_add(total, 1);
  }
  return run_cascade(runs, total);
}

}  // namespace ovation
