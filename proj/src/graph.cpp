#include "dcpm/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace dcpm {

Edge make_edge(VertexId a, VertexId b) {
  if (a == b) throw std::invalid_argument("edge endpoints must differ (self-loop)");
  return a < b ? Edge{a, b} : Edge{b, a};
}

void Graph::add_vertex(VertexId v) { adj_.try_emplace(v); }

bool Graph::add_edge(VertexId a, VertexId b) {
  Edge e = make_edge(a, b);
  auto& nu = adj_[e.u];
  auto it = std::lower_bound(nu.begin(), nu.end(), e.v);
  if (it != nu.end() && *it == e.v) return false;
  nu.insert(it, e.v);
  auto& nv = adj_[e.v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), e.u), e.u);
  ++edge_count_;
  return true;
}

bool Graph::has_vertex(VertexId v) const { return adj_.count(v) != 0; }

bool Graph::has_edge(VertexId a, VertexId b) const {
  if (a == b) return false;
  auto it = adj_.find(a);
  if (it == adj_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), b);
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end())
    throw std::out_of_range("unknown vertex " + std::to_string(v));
  return it->second;
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adj_.size());
  for (const auto& [v, _] : adj_) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (const auto& [v, nbrs] : adj_)
    for (VertexId u : nbrs)
      if (v < u) out.push_back(Edge{v, u});
  return out;
}

std::vector<TemporalEdgeRecord> parse_temporal_edges(std::istream& in) {
  std::vector<TemporalEdgeRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    TemporalEdgeRecord rec;
    if (!(ls >> rec.src >> rec.dst >> rec.time)) {
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": expected `src dst timestamp`, got \"" + line + "\"");
    }
    std::string rest;
    if (ls >> rest && !rest.empty() && rest[0] != '#') {
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": trailing token \"" + rest + "\"");
    }
    out.push_back(rec);
  }
  return out;
}

std::vector<TemporalEdgeRecord> load_temporal_edges(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open input file: " + path);
  return parse_temporal_edges(f);
}

SnapshotSeries build_snapshots(const std::vector<TemporalEdgeRecord>& records,
                               const std::vector<Timestamp>& boundaries) {
  for (std::size_t i = 1; i < boundaries.size(); ++i)
    if (boundaries[i - 1] >= boundaries[i])
      throw std::invalid_argument("period boundaries must be strictly increasing");

  // Bucket each record by the first snapshot that includes it; self-loops
  // and records after the last boundary are dropped here.
  std::vector<std::vector<Edge>> buckets(boundaries.size());
  for (const auto& rec : records) {
    if (rec.src == rec.dst) continue;
    auto it = std::lower_bound(boundaries.begin(), boundaries.end(), rec.time);
    if (it == boundaries.end()) continue;
    buckets[static_cast<std::size_t>(it - boundaries.begin())].push_back(
        make_edge(rec.src, rec.dst));
  }

  SnapshotSeries series;
  series.graphs.resize(boundaries.size());
  Graph acc;
  for (std::size_t t = 0; t < boundaries.size(); ++t) {
    for (const Edge& e : buckets[t]) acc.add_edge(e.u, e.v);
    series.graphs[t] = acc;
  }
  return series;
}

EdgeDiffGraph edge_diff(const Graph& g_prev, const Graph& g_curr) {
  for (VertexId v : g_prev.vertices())
    if (!g_curr.has_vertex(v))
      throw std::invalid_argument("edge_diff: vertex " + std::to_string(v) +
                                  " of the older graph is missing from the newer one");
  EdgeDiffGraph diff;
  diff.vertices = g_curr.vertices();
  for (const Edge& e : g_curr.edges())
    if (!g_prev.has_edge(e.u, e.v)) diff.edges.push_back(e);
  if (g_prev.edge_count() + diff.edges.size() != g_curr.edge_count())
    throw std::invalid_argument("edge_diff: older graph has edges missing from the newer one");
  return diff;
}

std::vector<VertexId> lower_neighbors(const Graph& g, VertexId v) {
  const auto& nbrs = g.neighbors(v);
  auto end = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  return std::vector<VertexId>(nbrs.begin(), end);
}

}  // namespace dcpm
