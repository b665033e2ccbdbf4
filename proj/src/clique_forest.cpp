#include "dcpm/clique_forest.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace dcpm {

void CommunityTree::resize_orders(int new_omega) {
  if (new_omega + 1 > static_cast<int>(orders_.size()))
    orders_.resize(static_cast<std::size_t>(new_omega) + 1);
}

std::unique_ptr<McObject> initialize_mc(int size, McId id) {
  if (size < 2) throw std::invalid_argument("clique objects exist only for size >= 2");
  auto m = std::make_unique<McObject>();
  m->id = id;
  m->birth_t = size;
  m->cg.resize(static_cast<std::size_t>(size) - 1);
  for (int level = 1; level <= size - 1; ++level) {
    CgNode& n = m->node_at(level);
    n.id = id;
    n.size = size;
    n.level = level;
    n.loop = ett::make_loop(id);
  }
  return m;
}

int clique_overlap(const Clique& m1, const Clique& m2) {
  int count = 0;
  auto a = m1.begin();
  auto b = m2.begin();
  while (a != m1.end() && b != m2.end()) {
    if (*a < *b)
      ++a;
    else if (*b < *a)
      ++b;
    else {
      ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

PrevRepSizes snapshot_rep_sizes(const CommunityTree& ct, const McTable& mcs) {
  PrevRepSizes prev(static_cast<std::size_t>(ct.order_count()) + 1);
  for (int i = 1; i <= ct.order_count(); ++i)
    for (const auto& [id, _] : ct.at_order(i))
      prev[static_cast<std::size_t>(i)].emplace(id, mcs.at(id)->birth_t);
  return prev;
}

int rep_size(McId rep, int order, const CommunityTree& ct, const PrevRepSizes& prev,
             const McTable& mcs) {
  if (ct.at_order(order).count(rep)) return mcs.at(rep)->birth_t;
  const auto& snap = prev.at(static_cast<std::size_t>(order));
  auto it = snap.find(rep);
  if (it == snap.end())
    throw std::logic_error("representative " + std::to_string(rep) +
                           " unknown at order " + std::to_string(order));
  return it->second;
}

void update_rep(ett::EtNode* root1, ett::EtNode* root2, CommunityTree& ct,
                const PrevRepSizes& prev, const McTable& mcs, int level) {
  assert(root1->parent == nullptr && root2->parent == nullptr && root1 != root2);
  const McId r1 = root1->d_rep;
  const McId r2 = root2->d_rep;
  if (r1 == r2) return;
  const int order = level + 1;
  const int s1 = rep_size(r1, order, ct, prev, mcs);
  const int s2 = rep_size(r2, order, ct, prev, mcs);
  const bool first_wins = s1 > s2 || (s1 == s2 && r1 < r2);
  ett::EtNode* loser_root = first_wins ? root2 : root1;
  const McId winner = first_wins ? r1 : r2;
  const McId loser = first_wins ? r2 : r1;
  loser_root->d_rep = winner;  // root delta shifts the whole losing tree
  ct.at_order(order).erase(loser);
}

void insert_cg_edges(McObject& m1, McObject& m2, CommunityTree& ct,
                     const PrevRepSizes& prev, const McTable& mcs, int w) {
  assert(&m1 != &m2);
  if (w < 1 || w > std::min(m1.birth_t, m2.birth_t) - 1)
    throw std::invalid_argument("clique-graph edge weight out of range");
  std::shared_ptr<CgEdge> edge;  // created at the first level actually linked
  // Every level down to 1 is checked independently. Stopping at the first
  // already-connected level would assume that connectivity at a level
  // implies connectivity below it, which removals break mid-transaction: a
  // subsumed clique's deletion can cut the only low-level witness between
  // survivors whose high-level tree edge is untouched.
  for (int level = w; level >= 1; --level) {
    ett::EtNode* a = m1.node_at(level).loop.get();
    ett::EtNode* b = m2.node_at(level).loop.get();
    if (ett::connected(a, b)) continue;
    ett::splay(a);
    ett::splay(b);
    update_rep(a, b, ct, prev, mcs, level);
    if (!edge) edge = std::make_shared<CgEdge>(&m1, &m2, w);
    auto& arcs = edge->arcs[static_cast<std::size_t>(level)];
    arcs.fwd = ett::make_arc(m1.id, m2.id);
    arcs.rev = ett::make_arc(m2.id, m1.id);
    m1.node_at(level).tree_edges.push_back(edge);
    m2.node_at(level).tree_edges.push_back(edge);
    ett::link(a, b, arcs.fwd.get(), arcs.rev.get());
  }
}

void add_mcs(ForestState& state, const Graph& g, const std::vector<Clique>& new_mcs,
             const PrevRepSizes& prev) {
  const McId batch_start = state.next_id;

  // First pass: register every clique and lay its single-node trees.
  for (const Clique& m : new_mcs) {
    const McId id = ++state.next_id;
    state.tries.add_clique(m, id);
    if (m.size() >= 2) {
      auto obj = initialize_mc(static_cast<int>(m.size()), id);
      obj->vertices = m;
      for (int order = obj->birth_t; order >= 2; --order)
        state.ct.at_order(order).emplace(id, obj->node_at(order - 1).loop.get());
      state.mcs.emplace(id, std::move(obj));
    }
  }

  // Second pass: connect each clique to its neighbors. A neighbor from this
  // batch that has already completed its own round is skipped.
  for (const Clique& m : new_mcs) {
    if (m.size() < 2) continue;
    const McId id = state.tries.get_id(m);
    McObject& mo = *state.mcs.at(id);
    for (const auto& [nid, nclique] : state.tries.neighbor_mcs(g, m, id)) {
      auto it = state.mcs.find(nid);
      if (it == state.mcs.end()) {
        assert(nclique.size() < 2);
        continue;
      }
      McObject& no = *it->second;
      if (no.visited && nid > batch_start) continue;
      const int w = (std::min(mo.birth_t, no.birth_t) == 2)
                        ? 1
                        : clique_overlap(m, nclique);
      insert_cg_edges(mo, no, state.ct, prev, state.mcs, w);
    }
    mo.visited = true;
  }
}

void delete_cg_edges(McObject& m) {
  for (int level = m.birth_t - 1; level >= 1; --level) {
    auto& edges = m.node_at(level).tree_edges;
    while (!edges.empty()) {
      std::shared_ptr<CgEdge> e = edges.back();
      assert(e->linked_at(level));
      auto& arcs = e->arcs[static_cast<std::size_t>(level)];
      ett::cut(arcs.fwd.get(), arcs.rev.get());
      arcs.fwd.reset();
      arcs.rev.reset();
      for (McObject* endpoint : {e->m1, e->m2}) {
        auto& lst = endpoint->node_at(level).tree_edges;
        lst.erase(std::find(lst.begin(), lst.end(), e));
      }
    }
  }
}

void remove_mcs(ForestState& state, const std::vector<Clique>& del_mcs) {
  for (const Clique& m : del_mcs) {
    const McId id = state.tries.get_id(m);
    if (id < 0) throw std::invalid_argument("remove_mcs: clique is not stored");
    if (m.size() >= 2) {
      McObject& mo = *state.mcs.at(id);
      delete_cg_edges(mo);
      // Order 1 can hold a stale root entry from the last diagram pass.
      for (int order = std::min(mo.birth_t, state.ct.order_count()); order >= 1; --order)
        state.ct.at_order(order).erase(id);
#ifndef NDEBUG
      for (const CgNode& n : mo.cg)
        assert(!n.loop->parent && !n.loop->left && !n.loop->right);
#endif
      state.mcs.erase(id);
    }
    state.tries.remove_clique(m);
  }
}

}  // namespace dcpm
