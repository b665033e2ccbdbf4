#pragma once

#include <vector>

#include "dcpm/graph.hpp"
#include "dcpm/trie_store.hpp"

namespace dcpm {

// All maximal cliques of g, isolated vertices included as size-1 cliques.
// Pivoting depth-first enumeration; output sorted lexicographically.
std::vector<Clique> list_mcs(const Graph& g);

// Maximal cliques of g_curr that contain at least one edge of delta_edges —
// exactly the cliques that became maximal when those edges were inserted.
// g_curr must already contain the delta edges. For each new edge (u,v) the
// search is confined to {u,v} plus the common neighborhood of u and v.
std::vector<Clique> list_new_mcs(const Graph& g_curr, const std::vector<Edge>& delta_edges);

// Pre-update cliques that stopped being maximal: proper subsets of some new
// clique. Candidates are the maximal delta-free sub-cliques of each new
// clique; each one is confirmed against the pre-update trie table (a miss
// means the candidate was not a maximal clique before the update).
std::vector<Clique> list_subsumed_mcs(const std::vector<Edge>& delta_edges,
                                      const TrieTable& tries,
                                      const std::vector<Clique>& new_mcs);

}  // namespace dcpm
