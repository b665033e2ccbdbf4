#pragma once

#include <vector>

#include "dcpm/clique_forest.hpp"
#include "dcpm/graph.hpp"

namespace dcpm {

struct PdPoint {
  int death = 0;
  int birth = 0;
  McId rep_id = kNoMc;
  friend auto operator<=>(const PdPoint&, const PdPoint&) = default;
};

// (death, birth) order pairs, one per representative, in preorder of the
// parent/child merge links.
struct PersistenceDiagram {
  std::vector<PdPoint> points;
  friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;
};

// Communities at one order: each is the vertex union of the cliques of one
// level-(order-1) forest tree.
struct Cover {
  int order = 0;
  std::vector<std::vector<VertexId>> communities;  // each sorted ascending
};

// Death/merge extraction: picks the oldest representative as the root of
// order 1, records a death at order i for every representative present at
// order i+1 but not at i (attaching it to the representative of the tree it
// merged into), and emits the diagram by preorder. Reps that never merge
// below order 2 die at 1 by convention. Child links are consumed by the
// traversal, leaving the objects clean for the next pass.
PersistenceDiagram generate_pd(McTable& mcs, CommunityTree& ct);

struct BuildResult {
  ForestState state;
  PersistenceDiagram pd;
};

// Full pipeline on one graph: enumerate cliques, lay the forests, connect,
// extract the diagram.
BuildResult build_ct(const Graph& g);

// Incremental pipeline for vertex/edge insertions on top of g_prev: snapshot
// rep sizes, enumerate new and subsumed cliques, remove, grow the tree if
// the largest clique grew, add, re-extract. Produces the same diagram and
// covers as a fresh build of the updated graph (clique ids may differ).
// With no new edges the previous diagram is returned untouched.
PersistenceDiagram update_ct(ForestState& state, PersistenceDiagram prev_pd,
                             const Graph& g_prev, const std::vector<VertexId>& delta_v,
                             const std::vector<Edge>& delta_e);

// The communities of one order, one per representative entry; vertex unions
// are collected by walking each representative's tour.
Cover extract_communities(const CommunityTree& ct, const McTable& mcs, int order);

}  // namespace dcpm
