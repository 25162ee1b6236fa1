#pragma once

#include <functional>
#include <map>

#include "ddimer/linalg.hpp"
#include "ddimer/pairings.hpp"
#include "ddimer/rational.hpp"

namespace ddimer {

// Integer-coefficient formal sum of planar pairings.
using PairingCombo = std::map<Pairing, long>;

// Repeatedly rewrite ac|bd -> -ab|cd - ad|bc until planar; the result does
// not depend on which crossing is resolved first.
PairingCombo resolve_crossings(const Pairing& rho);

// As above but resolving the crossing chosen by `pick` at each step
// (index into the lexicographically sorted crossing list); for tests.
PairingCombo resolve_crossings_with_choice(const Pairing& rho,
                                           const std::function<size_t(size_t)>& pick);

// Column rho of Q^(DD): resolve_crossings scaled by sign_oe(sigma) sign_bw(rho).
PairingCombo q_coeffs(const Pairing& rho, const NodeColoring& c);

// Gram-type matrix 2^{#components} over planar pairings (canonical order).
IntMatrix meander_matrix(int n);

// sign(pi,rho) 2^{#components} over planar x black-white pairings.
IntMatrix b2_matrix(const NodeColoring& c);

struct QMatrix {
    std::vector<Pairing> rows;  // planar pairings, canonical order
    std::vector<Pairing> cols;  // black-white pairings, canonical order
    IntMatrix entries;
};

// Route A: column-by-column Rule-3 resolution.
QMatrix q_matrix_combinatorial(const NodeColoring& c);
// Route B: exact solve M2 X = B2 (entries asserted integral).
QMatrix q_matrix_solve(const NodeColoring& c);

// Expanded polynomial sum-of-monomials in the Y variables; each term is a
// signed coefficient with the pair list (black, white), blacks ascending.
struct SignedMonomialPoly {
    struct Term {
        long coeff;
        std::vector<std::pair<int, int>> pairs;
    };
    std::vector<Term> terms;  // canonical term order
    std::string str() const;
};

// The sigma row of Q^(DD) contracted with Y'_rho sign conventions.
SignedMonomialPoly pr_polynomial(const Pairing& sigma, const NodeColoring& c);

}  // namespace ddimer
