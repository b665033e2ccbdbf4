#pragma once

#include <array>
#include <map>
#include <memory>
#include <vector>

#include "dcpm/euler_tour_tree.hpp"
#include "dcpm/graph.hpp"
#include "dcpm/trie_store.hpp"

namespace dcpm {

struct CgEdge;
struct McObject;

// The clique-graph node of one maximal clique at one level. Level i holds
// the cliques of size >= i+1; this node exists for levels 1..size-1.
struct CgNode {
  McId id = kNoMc;
  int size = 0;
  int level = 0;
  std::vector<std::shared_ptr<CgEdge>> tree_edges;  // spanning-forest edges only
  std::unique_ptr<ett::EtNode> loop;
};

// A clique-graph edge of weight w. It is a spanning-tree edge at the levels
// (a suffix of w..1, possibly empty) where the connectivity check admitted
// it; only those levels carry tour arcs. Owned jointly by the adjacency
// lists of its two endpoints.
struct CgEdge {
  McObject* m1 = nullptr;
  McObject* m2 = nullptr;
  int weight = 0;

  struct ArcPair {
    std::unique_ptr<ett::EtNode> fwd, rev;
  };
  std::vector<ArcPair> arcs;  // index by level, [1..weight]; index 0 unused

  CgEdge(McObject* a, McObject* b, int w) : m1(a), m2(b), weight(w), arcs(w + 1) {}
  bool linked_at(int level) const { return arcs[static_cast<std::size_t>(level)].fwd != nullptr; }
};

struct McObject {
  McId id = kNoMc;
  bool visited = false;
  int birth_t = 0;      // clique size
  int death_t = -1;     // merge order, set by the diagram pass
  std::vector<McObject*> children;
  Clique vertices;                 // sorted
  std::vector<CgNode> cg;          // cg[l-1] is the node at level l

  CgNode& node_at(int level) { return cg[static_cast<std::size_t>(level - 1)]; }
  const CgNode& node_at(int level) const { return cg[static_cast<std::size_t>(level - 1)]; }
};

using McTable = std::map<McId, std::unique_ptr<McObject>>;

// The community tree: for each order i in 1..omega, the representative
// clique ids of the level-(i-1) forest trees, each mapped to that
// representative's loop arc at level i-1. Order 1 holds the single root
// representative once the diagram pass has run.
class CommunityTree {
 public:
  int order_count() const { return static_cast<int>(orders_.size()) - 1; }
  // Grows to new_omega orders; never shrinks (orders never disappear from
  // insert-only networks).
  void resize_orders(int new_omega);

  std::map<McId, ett::EtNode*>& at_order(int i) { return orders_.at(static_cast<std::size_t>(i)); }
  const std::map<McId, ett::EtNode*>& at_order(int i) const {
    return orders_.at(static_cast<std::size_t>(i));
  }

 private:
  std::vector<std::map<McId, ett::EtNode*>> orders_{1};  // index 0 unused
};

// Pre-update snapshot of representative sizes per order; consulted when a
// representative id seen during reconnection was deleted earlier in the
// same transaction.
using PrevRepSizes = std::vector<std::map<McId, int>>;

// Everything the builder and updater mutate as one unit.
struct ForestState {
  TrieTable tries;
  McTable mcs;
  CommunityTree ct;
  McId next_id = 0;
};

// Fresh clique object with one single-node tree per level; every loop arc
// starts out representing the clique itself. Throws for size < 2.
std::unique_ptr<McObject> initialize_mc(int size, McId id);

// |m1 ∩ m2| by linear merge; both sorted.
int clique_overlap(const Clique& m1, const Clique& m2);

PrevRepSizes snapshot_rep_sizes(const CommunityTree& ct, const McTable& mcs);

// Resolves a representative id to its clique size: through the community
// tree when the id is still current at that order, otherwise through the
// pre-update snapshot.
int rep_size(McId rep, int order, const CommunityTree& ct, const PrevRepSizes& prev,
             const McTable& mcs);

// Reconciles two tree representatives ahead of a link at the given level:
// the larger clique wins (ties to the smaller id), the losing tree's loop
// values are shifted to the winner by one root adjustment, and the loser
// leaves ct[level+1]. Roots with equal ids are fragments of one former tree
// and need nothing.
void update_rep(ett::EtNode* root1, ett::EtNode* root2, CommunityTree& ct,
                const PrevRepSizes& prev, const McTable& mcs, int level);

// Inserts the weight-w clique-graph edge into the forests from level w down
// to 1, linking at every level where the endpoints do not already share a
// tree.
void insert_cg_edges(McObject& m1, McObject& m2, CommunityTree& ct,
                     const PrevRepSizes& prev, const McTable& mcs, int w);

// Registers each clique (trie path, clique object, per-level nodes, rep
// seed) and then connects it to all neighbors. new_mcs must be sorted; ids
// are assigned in that order from state.next_id.
void add_mcs(ForestState& state, const Graph& g, const std::vector<Clique>& new_mcs,
             const PrevRepSizes& prev);

// Cuts every tree edge at every level of the clique's nodes.
void delete_cg_edges(McObject& m);

// Removes subsumed cliques: tree edges, rep entries, clique object, trie
// path. Size-1 cliques only ever have a trie path.
void remove_mcs(ForestState& state, const std::vector<Clique>& del_mcs);

}  // namespace dcpm
