#pragma once

#include "kuc/sturm.hpp"

namespace kuc {

/// Resultant of two rational polynomials (exact, via the Euclidean
/// remainder recursion over Q). Res of two nonzero constants is 1.
Rational resultant_q(const PolyQ& a, const PolyQ& b);

/// Bivariate polynomial in y with coefficients in Q[x].
using Poly2 = Poly<PolyQ>;

/// Res_y(a, b) in Q[x], computed by evaluation at rational points and exact
/// interpolation. Valid over the polynomial ring, no zero-divisor hazards.
PolyQ resultant_y(const Poly2& a, const Poly2& b);

/// Discriminant of p as an element of Q[x]/(x^k + x - 1):
/// (-1)^{d(d-1)/2} Res(p, p') / lc(p), computed over Q[x] and reduced
/// modulo the defining polynomial. Degree-0 input is rejected; the
/// discriminant of a linear polynomial is 1.
AlgebraicElement discriminant(const PolyA& p);

}  // namespace kuc
