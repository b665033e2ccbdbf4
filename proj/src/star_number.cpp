#include "dcpm/star_number.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace dcpm {

VertexCover find_vc(const EdgeDiffGraph& diff) {
  std::vector<Edge> edges = diff.edges;
  std::sort(edges.begin(), edges.end());
  std::unordered_set<VertexId> covered;
  for (const Edge& e : edges) {
    if (covered.count(e.u) || covered.count(e.v)) continue;
    covered.insert(e.u);
    covered.insert(e.v);
  }
  VertexCover vc;
  vc.vertices.assign(covered.begin(), covered.end());
  std::sort(vc.vertices.begin(), vc.vertices.end());
  return vc;
}

int tsn_upper_bound(const EdgeDiffGraph& diff) {
  return static_cast<int>(find_vc(diff).vertices.size());
}

namespace {

void branch(const std::vector<Edge>& edges, std::set<VertexId>& chosen, int& best) {
  if (static_cast<int>(chosen.size()) >= best) return;
  const Edge* open = nullptr;
  for (const Edge& e : edges) {
    if (!chosen.count(e.u) && !chosen.count(e.v)) {
      open = &e;
      break;
    }
  }
  if (!open) {
    best = static_cast<int>(chosen.size());
    return;
  }
  for (VertexId pick : {open->u, open->v}) {
    chosen.insert(pick);
    branch(edges, chosen, best);
    chosen.erase(pick);
  }
}

}  // namespace

int exact_asn(const EdgeDiffGraph& diff) {
  std::set<VertexId> incident;
  for (const Edge& e : diff.edges) {
    incident.insert(e.u);
    incident.insert(e.v);
  }
  if (incident.size() > 24)
    throw std::runtime_error("exact_asn: instance exceeds the exhaustive-search budget");
  std::vector<Edge> edges = diff.edges;
  std::sort(edges.begin(), edges.end());
  int best = static_cast<int>(incident.size());
  std::set<VertexId> chosen;
  branch(edges, chosen, best);
  return best;
}

}  // namespace dcpm
