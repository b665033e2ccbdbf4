#pragma once

#include "dcpm/graph.hpp"

namespace dcpm::testing {

inline Graph from_edges(std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  Graph g;
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// K3 on {1,2,3}.
inline Graph fix_tri() { return from_edges({{1, 2}, {1, 3}, {2, 3}}); }

// Triangles {1,2,3} and {2,3,4} sharing edge {2,3}.
inline Graph fix_diamond() {
  return from_edges({{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
}

// Triangles {1,2,3} and {3,4,5} sharing vertex 3.
inline Graph fix_bowtie() {
  return from_edges({{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

// Disjoint triangles {1,2,3} and {4,5,6}.
inline Graph fix_twotri() {
  return from_edges({{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
}

// Six maximal cliques whose lexicographic ids make cliques 2 and 5 the two
// size-4 ones: {1,2,3}, {1,2,8,9}, {2,6}, {3,7}, {8,9,10,11}, {10,11,12}.
// The two big cliques overlap in exactly two vertices, so they are separate
// trees at level 3 and one tree (with both size-3 cliques attached) at
// level 2.
inline Graph fix_six_cliques() {
  Graph g;
  auto add_clique = [&g](std::initializer_list<VertexId> vs) {
    std::vector<VertexId> v(vs);
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j) g.add_edge(v[i], v[j]);
  };
  add_clique({1, 2, 3});
  add_clique({1, 2, 8, 9});
  add_clique({2, 6});
  add_clique({3, 7});
  add_clique({8, 9, 10, 11});
  add_clique({10, 11, 12});
  return g;
}

}  // namespace dcpm::testing
