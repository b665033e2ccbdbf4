#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace dcpm {

using VertexId = std::int64_t;
using Timestamp = std::int64_t;

// Undirected edge, stored with the smaller endpoint first.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Canonicalizes the endpoint order; rejects self-loops.
Edge make_edge(VertexId a, VertexId b);

// Undirected simple graph with sorted adjacency lists. Immutable by
// convention once a snapshot series has been built.
class Graph {
 public:
  void add_vertex(VertexId v);
  // Returns false if the edge was already present. Throws on self-loops.
  bool add_edge(VertexId a, VertexId b);

  bool has_vertex(VertexId v) const;
  bool has_edge(VertexId a, VertexId b) const;

  // Sorted ascending. Throws std::out_of_range for an unknown vertex.
  const std::vector<VertexId>& neighbors(VertexId v) const;

  std::vector<VertexId> vertices() const;  // sorted ascending
  std::vector<Edge> edges() const;         // canonical, sorted

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::map<VertexId, std::vector<VertexId>> adj_;
  std::size_t edge_count_ = 0;
};

struct TemporalEdgeRecord {
  VertexId src = 0;
  VertexId dst = 0;
  Timestamp time = 0;
};

// Cumulative snapshots G_0 ⊆ G_1 ⊆ ... ⊆ G_T (insert-only).
struct SnapshotSeries {
  std::vector<Graph> graphs;
};

// Vertices of the newer snapshot plus the edges it gained.
struct EdgeDiffGraph {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;  // canonical, sorted
};

// Input format: whitespace-separated `src dst timestamp` lines; lines
// starting with '#' are ignored. Parse errors name the offending line.
std::vector<TemporalEdgeRecord> parse_temporal_edges(std::istream& in);
std::vector<TemporalEdgeRecord> load_temporal_edges(const std::string& path);

// Snapshot t holds the deduplicated, undirected, self-loop-free edges with
// timestamp <= boundaries[t]. Boundaries must be strictly increasing.
SnapshotSeries build_snapshots(const std::vector<TemporalEdgeRecord>& records,
                               const std::vector<Timestamp>& boundaries);

// E(g_curr) \ E(g_prev) over V(g_curr). Throws if g_prev is not nested in
// g_curr (the insert-only contract).
EdgeDiffGraph edge_diff(const Graph& g_prev, const Graph& g_curr);

// L(v): neighbors of v with a smaller id, sorted ascending.
std::vector<VertexId> lower_neighbors(const Graph& g, VertexId v);

}  // namespace dcpm
