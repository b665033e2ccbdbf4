#include "dcpm/dynamic_cpm.hpp"

#include <algorithm>
#include <stdexcept>

#include "dcpm/star_number.hpp"

namespace dcpm {

TsnGate::TsnGate(int window) : window_(window) {
  if (window < 1) throw std::invalid_argument("gate window must be >= 1");
}

bool TsnGate::admit(long long tau) {
  ++t_;
  if (t_ <= window_) {  // warm-up: never update
    q_.push_back(tau);
    sum_ += tau;
    return false;
  }
  const bool fire = tau > 0 && tau * window_ >= sum_;
  sum_ -= q_.front();
  q_.pop_front();
  q_.push_back(tau);
  sum_ += tau;
  return fire;
}

DynamicCpm::DynamicCpm(const SnapshotSeries& series, int window)
    : series_(&series), gate_(window) {
  if (series.graphs.empty())
    throw std::invalid_argument("snapshot series must contain at least one period");
}

PeriodResult DynamicCpm::run_period() {
  if (done()) throw std::logic_error("all periods already processed");
  const int t = next_t_++;
  PeriodResult result;
  result.period = t;

  if (t == 0) {
    BuildResult built = build_ct(series_->graphs[0]);
    state_ = std::move(built.state);
    pd_ = std::move(built.pd);
    result.tau = 0;
    result.updated = true;
  } else {
    const EdgeDiffGraph diff = edge_diff(series_->graphs[t - 1], series_->graphs[t]);
    result.tau = tsn_upper_bound(diff);
    if (gate_.admit(result.tau)) {
      const Graph& base = series_->graphs[last_update_t_];
      const Graph& curr = series_->graphs[t];
      std::vector<VertexId> delta_v;
      for (VertexId v : curr.vertices())
        if (!base.has_vertex(v)) delta_v.push_back(v);
      const EdgeDiffGraph pending = edge_diff(base, curr);
      pd_ = update_ct(state_, std::move(pd_), base, delta_v, pending.edges);
      last_update_t_ = t;
      result.updated = true;
    }
  }
  result.pd = pd_;
  result.omega = state_.ct.order_count();
  return result;
}

std::vector<PeriodResult> dynamic_cpm(const SnapshotSeries& series, int window) {
  DynamicCpm runner(series, window);
  std::vector<PeriodResult> results;
  results.reserve(series.graphs.size());
  while (!runner.done()) results.push_back(runner.run_period());
  return results;
}

}  // namespace dcpm
