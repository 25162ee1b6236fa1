#pragma once

#include <vector>

#include "ddimer/rational.hpp"

namespace ddimer {

using IntMatrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rat>>;

// Fraction-free Bareiss elimination; exact determinant of a square matrix.
Int det_bareiss(IntMatrix a);

// Exact determinant over the rationals (row denominators cleared first).
Rat det_rational(const RatMatrix& m);

// Solve A X = B exactly; A square and invertible.
RatMatrix solve_rational(RatMatrix a, RatMatrix b);

// Pfaffian of an antisymmetric matrix of even order (recursive expansion
// with memoization; intended for orders <= 16).
Rat pfaffian(const RatMatrix& a);

}  // namespace ddimer
