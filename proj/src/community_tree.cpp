#include "dcpm/community_tree.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "dcpm/clique_enum.hpp"

namespace dcpm {

PersistenceDiagram generate_pd(McTable& mcs, CommunityTree& ct) {
  PersistenceDiagram pd;
  const int omega = ct.order_count();
  if (omega >= 1) ct.at_order(1).clear();
  if (omega < 2 || ct.at_order(2).empty()) return pd;

  // Root representative: maximum size, ties to the minimum id (map order).
  McId root_id = kNoMc;
  int best_size = -1;
  for (const auto& [id, _] : ct.at_order(2)) {
    const int s = mcs.at(id)->birth_t;
    if (s > best_size) {
      best_size = s;
      root_id = id;
    }
  }
  ct.at_order(1).emplace(root_id, ct.at_order(2).at(root_id));

  for (int i = omega - 1; i >= 1; --i) {
    const auto& lower = ct.at_order(i);
    for (const auto& [id, _] : ct.at_order(i + 1)) {
      if (lower.count(id)) continue;
      McObject& dead = *mcs.at(id);
      dead.death_t = i;
      McObject* absorber = nullptr;
      if (i == 1) {
        absorber = mcs.at(lower.begin()->first).get();
      } else {
        // The representative of the tree this one merged into, found by a
        // connectivity probe at level i-1.
        ett::EtNode* own = dead.node_at(i - 1).loop.get();
        for (const auto& [cand_id, cand_pet] : lower) {
          if (ett::connected(own, cand_pet)) {
            absorber = mcs.at(cand_id).get();
            break;
          }
        }
      }
      if (!absorber)
        throw std::logic_error("no absorbing representative found at order " +
                               std::to_string(i));
      absorber->children.push_back(&dead);
    }
  }
  mcs.at(root_id)->death_t = 1;

  std::vector<McObject*> stack{mcs.at(root_id).get()};
  while (!stack.empty()) {
    McObject* x = stack.back();
    stack.pop_back();
    pd.points.push_back({x->death_t, x->birth_t, x->id});
    while (!x->children.empty()) {
      stack.push_back(x->children.back());
      x->children.pop_back();
    }
  }
  return pd;
}

BuildResult build_ct(const Graph& g) {
  BuildResult result;
  const std::vector<Clique> mcs = list_mcs(g);
  int omega = 0;
  for (const Clique& m : mcs) omega = std::max(omega, static_cast<int>(m.size()));
  result.state.ct.resize_orders(omega);
  const PrevRepSizes prev(static_cast<std::size_t>(omega) + 1);
  add_mcs(result.state, g, mcs, prev);
  result.pd = generate_pd(result.state.mcs, result.state.ct);
  return result;
}

PersistenceDiagram update_ct(ForestState& state, PersistenceDiagram prev_pd,
                             const Graph& g_prev, const std::vector<VertexId>& delta_v,
                             const std::vector<Edge>& delta_e) {
  for (VertexId v : delta_v)
    if (g_prev.has_vertex(v))
      throw std::invalid_argument("update_ct: delta vertex already present");
  for (const Edge& e : delta_e)
    if (g_prev.has_edge(e.u, e.v))
      throw std::invalid_argument("update_ct: delta edge already present");

  if (delta_e.empty()) return prev_pd;  // vertex-only growth never moves the tree

  Graph g_curr = g_prev;
  for (VertexId v : delta_v) g_curr.add_vertex(v);
  for (const Edge& e : delta_e) g_curr.add_edge(e.u, e.v);

  PrevRepSizes prev = snapshot_rep_sizes(state.ct, state.mcs);
  const std::vector<Clique> new_mcs = list_new_mcs(g_curr, delta_e);
  int omega_new = 0;
  for (const Clique& m : new_mcs) omega_new = std::max(omega_new, static_cast<int>(m.size()));
  const std::vector<Clique> subsumed = list_subsumed_mcs(delta_e, state.tries, new_mcs);
  remove_mcs(state, subsumed);
  if (omega_new > state.ct.order_count()) {
    state.ct.resize_orders(omega_new);
    prev.resize(static_cast<std::size_t>(omega_new) + 1);
  }
  add_mcs(state, g_curr, new_mcs, prev);
  return generate_pd(state.mcs, state.ct);
}

Cover extract_communities(const CommunityTree& ct, const McTable& mcs, int order) {
  if (order < 2 || order > ct.order_count())
    throw std::out_of_range("order " + std::to_string(order) + " outside [2, " +
                            std::to_string(ct.order_count()) + "]");
  Cover cover;
  cover.order = order;
  for (const auto& [rep, pet] : ct.at_order(order)) {
    std::set<VertexId> verts;
    for (ett::EtNode* loop : ett::collect_loops(pet)) {
      const McObject& m = *mcs.at(loop->end_a);
      verts.insert(m.vertices.begin(), m.vertices.end());
    }
    cover.communities.emplace_back(verts.begin(), verts.end());
  }
  return cover;
}

}  // namespace dcpm
