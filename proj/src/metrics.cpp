#include "dcpm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>

namespace dcpm {

Diagram to_diagram(const PersistenceDiagram& pd) {
  Diagram d;
  d.reserve(pd.points.size());
  for (const PdPoint& p : pd.points)
    d.push_back({static_cast<double>(p.death), static_cast<double>(p.birth)});
  return d;
}

namespace {

double linf(const DiagramPoint& p, const DiagramPoint& q) {
  return std::max(std::abs(p.death - q.death), std::abs(p.birth - q.birth));
}

double diag_gap(const DiagramPoint& p) { return std::abs(p.birth - p.death) / 2.0; }

// Perfect-matching feasibility at threshold t on the augmented bipartite
// graph: left = points of a plus |b| diagonal slots, right = points of b
// plus |a| diagonal slots. Kuhn's augmenting paths.
class MatchProbe {
 public:
  MatchProbe(const Diagram& a, const Diagram& b) : a_(a), b_(b), n_(a.size() + b.size()) {}

  bool feasible(double t) {
    match_right_.assign(n_, SIZE_MAX);
    for (std::size_t i = 0; i < n_; ++i) {
      seen_.assign(n_, false);
      if (!augment(i, t)) return false;
    }
    return true;
  }

 private:
  bool allowed(std::size_t i, std::size_t j, double t) const {
    const bool left_real = i < a_.size();
    const bool right_real = j < b_.size();
    if (left_real && right_real) return linf(a_[i], b_[j]) <= t;
    if (left_real) return diag_gap(a_[i]) <= t;
    if (right_real) return diag_gap(b_[j]) <= t;
    return true;
  }

  bool augment(std::size_t i, double t) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (seen_[j] || !allowed(i, j, t)) continue;
      seen_[j] = true;
      if (match_right_[j] == SIZE_MAX || augment(match_right_[j], t)) {
        match_right_[j] = i;
        return true;
      }
    }
    return false;
  }

  const Diagram& a_;
  const Diagram& b_;
  std::size_t n_;
  std::vector<std::size_t> match_right_;
  std::vector<bool> seen_;
};

}  // namespace

double bottleneck_distance(const Diagram& a, const Diagram& b) {
  std::set<double> candidates{0.0};
  for (const DiagramPoint& p : a) candidates.insert(diag_gap(p));
  for (const DiagramPoint& q : b) candidates.insert(diag_gap(q));
  for (const DiagramPoint& p : a)
    for (const DiagramPoint& q : b) candidates.insert(linf(p, q));

  std::vector<double> cand(candidates.begin(), candidates.end());
  MatchProbe probe(a, b);
  std::size_t lo = 0;
  std::size_t hi = cand.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (probe.feasible(cand[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return cand[lo];
}

double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b) {
  return bottleneck_distance(to_diagram(a), to_diagram(b));
}

namespace {

double h(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

struct CoverView {
  std::vector<std::vector<std::size_t>> members;  // community -> universe indexes
};

CoverView index_cover(const Cover& c, const std::map<VertexId, std::size_t>& universe) {
  CoverView view;
  view.members.reserve(c.communities.size());
  for (const auto& comm : c.communities) {
    std::vector<std::size_t> idx;
    idx.reserve(comm.size());
    for (VertexId v : comm) idx.push_back(universe.at(v));
    std::sort(idx.begin(), idx.end());
    view.members.push_back(std::move(idx));
  }
  return view;
}

// Average over X's communities of H(X_i | Y) / H(X_i).
double normalized_conditional(const CoverView& x, const CoverView& y, double n) {
  // All probabilities are formed as count/n so that algebraically equal
  // quantities are bitwise equal; the identity nmi(c, c) = 1 is then exact.
  double total = 0.0;
  for (const auto& xi : x.members) {
    const double n1 = static_cast<double>(xi.size());
    const double hx = h(n1 / n) + h((n - n1) / n);
    double best = hx;  // no admissible partner leaves the entropy unexplained
    for (const auto& yj : y.members) {
      const double n2 = static_cast<double>(yj.size());
      std::vector<std::size_t> both;
      std::set_intersection(xi.begin(), xi.end(), yj.begin(), yj.end(),
                            std::back_inserter(both));
      const double c11 = static_cast<double>(both.size());
      const double c10 = n1 - c11;
      const double c01 = n2 - c11;
      const double c00 = n - c11 - c10 - c01;
      // Admissibility: agreement terms must carry at least the entropy of
      // the disagreement terms, otherwise the pair conveys no information.
      if (h(c11 / n) + h(c00 / n) < h(c10 / n) + h(c01 / n)) continue;
      const double joint = h(c11 / n) + h(c10 / n) + h(c01 / n) + h(c00 / n);
      const double hy = h(n2 / n) + h((n - n2) / n);
      const double cond = std::max(joint - hy, 0.0);
      best = std::min(best, cond);
    }
    total += hx > 0.0 ? best / hx : 0.0;
  }
  return total / static_cast<double>(x.members.size());
}

}  // namespace

double overlapping_nmi(const Cover& a, const Cover& b) {
  if (a.communities.empty() || b.communities.empty())
    throw std::invalid_argument("overlapping_nmi: cover without communities");
  std::map<VertexId, std::size_t> universe;
  for (const Cover* c : {&a, &b})
    for (const auto& comm : c->communities)
      for (VertexId v : comm) universe.emplace(v, 0);
  std::size_t next = 0;
  for (auto& [v, idx] : universe) idx = next++;
  const double n = static_cast<double>(universe.size());
  if (universe.empty())
    throw std::invalid_argument("overlapping_nmi: covers contain no vertices");

  const CoverView va = index_cover(a, universe);
  const CoverView vb = index_cover(b, universe);
  return 1.0 - 0.5 * (normalized_conditional(va, vb, n) + normalized_conditional(vb, va, n));
}

}  // namespace dcpm
