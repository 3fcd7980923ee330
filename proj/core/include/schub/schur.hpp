// Complete homogeneous and Schur polynomials.
//
// Evaluation goes through the Jacobi-Trudi determinant
//   s_alpha = det[ h_{alpha_i - i + j} ]_{i,j in [r]},   r = length(alpha),
// computed fraction-free; the symbolic expansion uses the same determinant
// with polynomial entries.

#ifndef SCHUB_SCHUR_HPP
#define SCHUB_SCHUR_HPP

#include "schub/code.hpp"
#include "schub/poly.hpp"

namespace schub {

// h_l evaluated at the given coordinates (all of them); h_0 = 1 and
// h_l = 0 for l < 0 by convention.
Int complete_homogeneous_eval(int l, const Point& point);

// h_l(x_1, ..., x_k) as a sparse polynomial in k variables.
SparsePolynomial complete_homogeneous_expand(int l, int k);

// s_alpha(a_1, ..., a_n); alpha must be a partition (dominant code) and the
// point must supply at least length(alpha) coordinates.
Int schur_eval(const Code& alpha, const Point& point);

// s_alpha(x_1, ..., x_k) for k >= length(alpha).
SparsePolynomial schur_expand(const Code& alpha, int k);

// Fraction-free determinant of a square integer matrix (Bareiss).
Int integer_determinant(std::vector<std::vector<Int>> m);

} // namespace schub

#endif
