#pragma once

#include <optional>
#include <string>

#include "ddimer/graph.hpp"
#include "ddimer/linalg.hpp"
#include "ddimer/pairings.hpp"

namespace ddimer {

// Y_{i,j} = Z^D(G minus node vertices i,j) / Z^D(G); 0 when i,j share the
// bipartite color.
Rat y_value(const EmbeddedGraph& g, int i, int j);

// Rows = black nodes ascending, columns = white nodes ascending, entries
// Y_{b,w} masked to 0 when b,w share an RGB class.
struct YMatrix {
    std::vector<int> black_labels, white_labels;
    RatMatrix entries;
};
YMatrix y_matrix(const EmbeddedGraph& g, const RgbSplit& split);

// sign_oe(sigma) det(Y) for the tripartite pairing sigma of the split.
Rat tripartite_pr(const EmbeddedGraph& g, const RgbSplit& split);

struct PfaffianResult {
    Rat pf;
    int sign_cons_n;
    int sign_oe_sigma;
    Rat pr;  // sign_cons * sign_oe * pf
};
PfaffianResult tripartite_pfaffian(const EmbeddedGraph& g, const RgbSplit& split);

// Parity of the row/column negations turning [(-1)^{i>j} sign(i,j)] into a
// checkerboard with positive upper-left entry.
struct CheckerboardReport {
    int t_parity;  // 0 or 1
    int sign_cons_n;
    int floor_sum_parity;  // parity of sum floor(n_i / 2)
    bool formula_holds;
};
CheckerboardReport checkerboard_t(const NodeColoring& c);

// sign_cons * sign(S) * det of the S-masked signed Y matrix;
// equals Z^D(G-S) Z^D(G-S^c) / (Z^D)^2.
Rat balanced_set_det(const EmbeddedGraph& g, const std::vector<int>& s_labels);

struct KuoReport {
    Rat z, z_abcd, z_ab, z_cd, z_ad, z_bc;
    bool ok;
    std::string str() const;
};

// Kuo condensation for vertices a,b,c,d in cyclic order on one face,
// a,c in one color class and b,d in the other.
KuoReport kuo_check(const EmbeddedGraph& g, int a, int b, int c, int d);

// One removed-pair instance inside a condensation check.
struct CondensationTerm {
    std::string name;
    std::vector<int> removed;  // node labels
    bool exists = false;       // the tripartite pairing exists
    std::string pairing;       // relabeled pairing
    int sign = 0;              // sign_oe of the relabeled pairing
    Rat zdd;                   // Z^DD via the determinant formula
    Rat det;                   // raw masked determinant (0 when not exists)
};

struct CondensationReport {
    RgbSplit split;
    int x, y, w, v;
    CondensationTerm base;  // no nodes removed
    CondensationTerm xy, wv, xv, wy, xywv;
    std::string branch;
    Rat lhs, rhs;
    bool positive_form_checked = false;
    Rat positive_lhs, positive_rhs;
    bool ok = false;
    std::string json() const;
};

// Condensation recurrence check; x,w in one bipartite class, y,v in the other.
CondensationReport dd_condensation_check(const EmbeddedGraph& g, const RgbSplit& split,
                                         int x, int y, int w, int v);

// Predicted sign_oe(sigma'_{ij}) / sign_oe(sigma) from the RGB classes of
// the removed pair; valid when sigma has pairs of all three mixed types.
int rgb_sign_delta(const RgbSplit& split, int i, int j);

}  // namespace ddimer
