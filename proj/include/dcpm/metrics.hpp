#pragma once

#include <vector>

#include "dcpm/community_tree.hpp"

namespace dcpm {

struct DiagramPoint {
  double death = 0;
  double birth = 0;
};

using Diagram = std::vector<DiagramPoint>;

Diagram to_diagram(const PersistenceDiagram& pd);

// Exact bottleneck distance with diagonal augmentation: binary search over
// the candidate distances (all pairwise L∞ values and all half-gaps
// (birth-death)/2), each tested by a bipartite perfect-matching probe. The
// optimum is always one of the candidates.
double bottleneck_distance(const Diagram& a, const Diagram& b);
double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b);

// Normalized mutual information between two covers of overlapping
// communities, in the conditional-entropy form of Lancichinetti, Fortunato
// and Kertesz (2009): each community is a binary membership variable; a
// community's conditional entropy against the other cover is the minimum
// over that cover's communities, admitted only when the joint entropy
// decomposition favors agreement; per-community terms are normalized and
// averaged on both sides. 1 for identical covers. The vertex universe is
// the union of both covers. Throws when either cover has no communities.
double overlapping_nmi(const Cover& a, const Cover& b);

}  // namespace dcpm
