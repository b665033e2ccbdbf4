#include "dcpm/clique_enum.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace dcpm {

namespace {

std::vector<VertexId> intersect_sorted(const std::vector<VertexId>& a,
                                       const std::vector<VertexId>& b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Tomita-style pivoting: expand R with candidates P, excluded set X. The
// pivot maximizes |P ∩ N(pivot)| over P ∪ X, ties broken by the smaller id,
// so enumeration order is deterministic.
void expand(const Graph& g, Clique& r, std::vector<VertexId> p, std::vector<VertexId> x,
            std::vector<Clique>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    std::sort(out.back().begin(), out.back().end());
    return;
  }
  VertexId pivot = 0;
  std::ptrdiff_t best = -1;
  for (const auto* side : {&p, &x}) {
    for (VertexId u : *side) {
      const auto& nu = g.neighbors(u);
      std::ptrdiff_t c = static_cast<std::ptrdiff_t>(intersect_sorted(p, nu).size());
      if (c > best || (c == best && u < pivot)) {
        best = c;
        pivot = u;
      }
    }
  }
  std::vector<VertexId> cand;
  std::set_difference(p.begin(), p.end(), g.neighbors(pivot).begin(),
                      g.neighbors(pivot).end(), std::back_inserter(cand));
  for (VertexId v : cand) {
    const auto& nv = g.neighbors(v);
    r.push_back(v);
    expand(g, r, intersect_sorted(p, nv), intersect_sorted(x, nv), out);
    r.pop_back();
    p.erase(std::lower_bound(p.begin(), p.end(), v));
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
  }
}

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& verts) {
  Graph h;
  for (VertexId v : verts) h.add_vertex(v);
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j])) h.add_edge(verts[i], verts[j]);
  return h;
}

}  // namespace

std::vector<Clique> list_mcs(const Graph& g) {
  if (g.vertex_count() == 0) return {};
  std::vector<Clique> out;
  Clique r;
  expand(g, r, g.vertices(), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Clique> list_new_mcs(const Graph& g_curr, const std::vector<Edge>& delta_edges) {
  std::set<Clique> acc;
  for (const Edge& e : delta_edges) {
    if (!g_curr.has_edge(e.u, e.v))
      throw std::invalid_argument("list_new_mcs: graph is missing a delta edge");
    std::vector<VertexId> scope = intersect_sorted(g_curr.neighbors(e.u), g_curr.neighbors(e.v));
    scope.insert(std::lower_bound(scope.begin(), scope.end(), e.u), e.u);
    scope.insert(std::lower_bound(scope.begin(), scope.end(), e.v), e.v);
    Graph h = induced_subgraph(g_curr, scope);
    for (Clique& m : list_mcs(h)) {
      // A maximal clique of the confined subgraph containing both endpoints
      // is maximal in g_curr: any extension vertex would be a common
      // neighbor of u and v and hence inside the scope.
      if (std::binary_search(m.begin(), m.end(), e.u) &&
          std::binary_search(m.begin(), m.end(), e.v))
        acc.insert(std::move(m));
    }
  }
  return {acc.begin(), acc.end()};
}

std::vector<Clique> list_subsumed_mcs(const std::vector<Edge>& delta_edges,
                                      const TrieTable& tries,
                                      const std::vector<Clique>& new_mcs) {
  std::set<Edge> delta(delta_edges.begin(), delta_edges.end());
  std::set<Clique> subsumed;
  for (const Clique& m : new_mcs) {
    if (m.size() < 2) continue;
    // Pre-update edges inside m are all pairs except the delta edges, so the
    // maximal pre-update sub-cliques of m are the maximal cliques of that
    // residual graph.
    Graph old_part;
    for (VertexId v : m) old_part.add_vertex(v);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        if (!delta.count(Edge{m[i], m[j]})) old_part.add_edge(m[i], m[j]);
    for (Clique& cand : list_mcs(old_part)) {
      if (cand.size() == m.size()) continue;  // m itself; cannot be subsumed
      if (tries.get_id(cand) >= 0) subsumed.insert(std::move(cand));
    }
  }
  return {subsumed.begin(), subsumed.end()};
}

}  // namespace dcpm
