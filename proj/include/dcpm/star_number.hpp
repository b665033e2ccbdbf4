#pragma once

#include <vector>

#include "dcpm/graph.hpp"

namespace dcpm {

struct VertexCover {
  std::vector<VertexId> vertices;  // sorted
};

// Greedy 2-approximate vertex cover of the diff edges: scan the edges in
// canonical order and take both endpoints of every edge still uncovered
// (the unweighted local-ratio scheme). Linear in the edge count.
VertexCover find_vc(const EdgeDiffGraph& diff);

// τ: upper bound on the addition star number, with ASN <= τ <= 2·ASN.
int tsn_upper_bound(const EdgeDiffGraph& diff);

// Exact addition star number (minimum vertex cover of the diff edges) by
// branching; test oracle for small instances. Throws when more than 24
// vertices touch diff edges.
int exact_asn(const EdgeDiffGraph& diff);

}  // namespace dcpm
