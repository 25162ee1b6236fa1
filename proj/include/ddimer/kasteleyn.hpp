#pragma once

#include "ddimer/graph.hpp"
#include "ddimer/linalg.hpp"
#include "ddimer/rational.hpp"

namespace ddimer {

// +1/-1 per edge; every bounded face cycle is flat (odd number of minus
// signs on 0 mod 4 cycles, even on 2 mod 4 cycles).
struct KasteleynWeighting {
    std::vector<int> sign;  // per edge index
};

KasteleynWeighting build_weighting(const EmbeddedGraph& g);

// True iff every bounded face cycle of g is flat under the given signs.
bool all_faces_flat(const EmbeddedGraph& g, const KasteleynWeighting& w);

// Signed bipartite adjacency matrix: rows = black vertices ascending id,
// columns = white vertices ascending id.
struct KasteleynMatrix {
    std::vector<int> black_ids, white_ids;
    RatMatrix entries;
};

KasteleynMatrix kasteleyn_matrix(const EmbeddedGraph& g, const KasteleynWeighting& w);

// |det K| = Z^D(G); returns 0 when the color classes are unbalanced.
Rat zd_det(const EmbeddedGraph& g);

struct SubmatrixReport {
    Rat det_value;  // |det K with S's rows and columns removed|
    Rat oracle;     // zd of G minus the node vertices of S
    bool ok;
};

// Checks the deleted-submatrix property for a balanced node set S (labels).
SubmatrixReport submatrix_check(const EmbeddedGraph& g, const std::vector<int>& s_labels);

}  // namespace ddimer
