#pragma once

#include <deque>
#include <vector>

#include "dcpm/community_tree.hpp"
#include "dcpm/graph.hpp"

namespace dcpm {

// Moving-average gate over the per-period τ bounds. The first `window`
// periods only warm the queue; afterwards an update fires when the current
// τ reaches the window mean (compared exactly: window·τ >= sum). τ = 0 with
// an all-zero window is treated as a skip: the pending work re-fires at the
// next positive τ, since any τ > 0 meets a zero mean.
class TsnGate {
 public:
  explicit TsnGate(int window);
  // Feeds τ for the next period (t = 1, 2, ...) and reports whether the
  // community tree should be updated this period.
  bool admit(long long tau);
  int window() const { return window_; }
  const std::deque<long long>& recent() const { return q_; }

 private:
  int window_;
  int t_ = 0;
  long long sum_ = 0;
  std::deque<long long> q_;
};

struct PeriodResult {
  int period = 0;
  int tau = 0;
  bool updated = false;
  PersistenceDiagram pd;
  int omega = 0;  // highest order of the reported tree
};

// Drives the per-period pipeline over a snapshot series: build on G_0, then
// per period compute τ from the consecutive edge diff and either update
// against the last-updated snapshot (deltas accumulate across skipped
// periods) or carry the tree forward.
class DynamicCpm {
 public:
  DynamicCpm(const SnapshotSeries& series, int window);

  int period_count() const { return static_cast<int>(series_->graphs.size()); }
  bool done() const { return next_t_ >= period_count(); }
  PeriodResult run_period();

  // Live state (equals the tree of the last updated period).
  const ForestState& state() const { return state_; }
  const PersistenceDiagram& pd() const { return pd_; }
  int omega() const { return state_.ct.order_count(); }
  Cover cover(int order) const { return extract_communities(state_.ct, state_.mcs, order); }
  int last_update_period() const { return last_update_t_; }

 private:
  const SnapshotSeries* series_;
  TsnGate gate_;
  ForestState state_;
  PersistenceDiagram pd_;
  int next_t_ = 0;
  int last_update_t_ = 0;
};

std::vector<PeriodResult> dynamic_cpm(const SnapshotSeries& series, int window);

}  // namespace dcpm
