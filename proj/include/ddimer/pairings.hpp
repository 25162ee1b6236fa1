#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ddimer/rational.hpp"

namespace ddimer {

enum class Color : uint8_t { Black, White };

// Circular black/white sequence of the nodes, labels 1..2n counterclockwise.
struct NodeColoring {
    std::vector<Color> seq;  // seq[i] is the color of node i+1

    int size() const { return static_cast<int>(seq.size()); }
    Color color(int node) const { return seq[node - 1]; }
    bool balanced() const;
    std::string str() const;
    static NodeColoring from_string(const std::string& bw);

    bool operator==(const NodeColoring&) const = default;
};

// Perfect pairing of the labels 1..2n.
struct Pairing {
    std::vector<int> partner;  // partner[0] unused

    int size() const { return static_cast<int>(partner.size()) - 1; }
    int n() const { return size() / 2; }
    int operator()(int node) const { return partner[node]; }

    // Pairs as (min, max), sorted by first element.
    std::vector<std::pair<int, int>> pairs() const;
    std::string str() const;

    static Pairing from_pairs(int two_n, const std::vector<std::pair<int, int>>& ps);
    static Pairing parse(int two_n, const std::string& text);  // "(1 8)(3 4)..."

    bool operator==(const Pairing&) const = default;
    bool operator<(const Pairing& other) const { return pairs() < other.pairs(); }
};

long crossings(const Pairing& p);
long nestings(const Pairing& p);
bool is_planar(const Pairing& p);
bool is_odd_even(const Pairing& p);
bool is_black_white(const Pairing& p, const NodeColoring& c);

// Parity of (p(1)/2, p(3)/2, ..., p(2n-1)/2) in one-line notation.
int sign_oe(const Pairing& p);

// Parity of (r(w_1), ..., r(w_n)) where the black endpoints are ascending
// and r ranks the white partners.
int sign_bw(const Pairing& p, const NodeColoring& c);

// Couples of circularly adjacent same-color nodes, by first element.
// The wrap couple (2n, 1) is stored as 2n.
struct ConsecutiveCouples {
    std::vector<int> all;    // n_1 < ... < n_{2k}
    std::vector<int> black;  // s_i
    std::vector<int> white;  // u_i
};
ConsecutiveCouples couples(const NodeColoring& c);

// Couples lying fully inside the linear interval [min(b,w), max(b,w)];
// the wrap couple never contributes.
int a_between(const NodeColoring& c, int b, int w);

// (-1)^{(|b-w| + a_{b,w} - 1)/2}; b and w must have opposite colors.
int sign_pair(const NodeColoring& c, int b, int w);

// Sign of the permutation interleaving white/black couple indices.
int sign_cons(const NodeColoring& c);

// A planar black-white pairing; satisfies
// sign_bw(rho) * prod sign_pair = sign_cons by construction.
Pairing planar_bw_pairing(const NodeColoring& c);

// Connected components of the union multigraph of two pairings.
int components(const Pairing& p, const Pairing& q);

// Nodes that are odd and white, or even and black.
std::vector<int> t_set(const NodeColoring& c);

// True iff some pair has exactly one endpoint in s (sorted labels).
bool connects(const Pairing& p, const std::vector<int>& s);

// All balanced S such that rho connects no S to S^c pair and pi connects
// no (S xor T) to complement pair; exactly 2^{components(pi,rho)} results.
std::vector<std::vector<int>> admissible_splits(const Pairing& pi, const Pairing& rho,
                                                const NodeColoring& c);

// sign(S) via a split-planar black-white pairing: (-1)^{crossings}.
int sign_set_definitional(const std::vector<int>& s, const NodeColoring& c);

// sign(S) via (-1)^n (-1)^{comp} sign_oe(pi) sign_bw(rho).
int sign_set_formula(const std::vector<int>& s, const NodeColoring& c);

// RGB split: r + g + b = 2n, classes contiguous starting at node 1.
struct RgbSplit {
    int r = 0, g = 0, b = 0;

    int total() const { return r + g + b; }
    bool triangle_ok() const { return r <= g + b && g <= r + b && b <= r + g; }
    // 0 = red, 1 = green, 2 = blue
    int class_of(int node) const { return node <= r ? 0 : (node <= r + g ? 1 : 2); }
    bool operator==(const RgbSplit&) const = default;
};

// The unique planar pairing with no pair inside one RGB class.
Pairing rgb_pairing(int two_n, const RgbSplit& split);

// Order-preserving relabeling of a pairing over the surviving labels onto
// 1..2m. Returns the relabeled pairing and the label map (old -> new).
std::pair<Pairing, std::vector<std::pair<int, int>>> relabel_consecutive(
    const std::vector<int>& surviving, const std::vector<std::pair<int, int>>& pairs);

std::vector<Pairing> all_pairings(int two_n);
std::vector<Pairing> all_planar_pairings(int two_n);  // canonical order
std::vector<Pairing> all_odd_even_pairings(int two_n);
std::vector<Pairing> all_black_white_pairings(const NodeColoring& c);
std::vector<NodeColoring> all_balanced_colorings(int two_n);

}  // namespace ddimer
