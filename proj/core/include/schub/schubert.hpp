// Schubert polynomials Y_v indexed by codes.
//
// Two independent computation routes are provided and kept in agreement:
//   * the transition recursion  Y_v = x_k Y_{v'} + sum_{u in Psi} Y_u,
//     grounded at anti-dominant codes (which are Schur polynomials), and
//   * divided differences applied to the staircase monomial along a reduced
//     word from the longest element down to <v>.

#ifndef SCHUB_SCHUBERT_HPP
#define SCHUB_SCHUBERT_HPP

#include "schub/code.hpp"
#include "schub/poly.hpp"

#include <map>
#include <vector>

namespace schub {

// One application of the transition formula at the last nonzero position k
// of v: vprime is v with v_k lowered by one, and psi collects the codes u
// with <u> = <vprime> tau_{ik} covering <vprime> for some i < k.
struct TransitionStep {
    int k = 0;
    Code vprime;
    std::vector<Code> psi;
};

TransitionStep transition(const Code& v);  // v must be nonempty

// Y_v as a polynomial in length(v) variables, via the transition recursion.
SparsePolynomial schubert_expand_transition(const Code& v);

// Y_v via divided differences from the staircase monomial; identical output.
SparsePolynomial schubert_expand_dd(const Code& v);

// Y_v(a_1, ..., a_n) for a nonnegative point with n >= length(v), without
// expanding the polynomial.
Int schubert_eval(const Code& v, const Point& a);

// Fixed-code evaluator that precomputes the transition recursion once so
// that repeated evaluations at many points share the combinatorial work.
// schubert_eval(v, a) == SchubertEvaluator(v).eval(a).
class SchubertEvaluator {
public:
    explicit SchubertEvaluator(Code v);

    const Code& code() const { return v_; }
    Int eval(const Point& a) const;

private:
    struct Node {
        bool leaf = false;
        Code alpha;  // leaf: partition whose Schur polynomial grounds the value
        int width = 0;  // leaf: number of leading coordinates consumed
        int k = 0;  // interior: transition position
        Code vprime;
        std::vector<Code> psi;
    };

    Code v_;
    std::map<Code, Node> nodes_;
};

// Reverse dominance: equal weights and every suffix sum of v is >= the
// corresponding suffix sum of u.  Every monomial exponent of Y_v is reverse
// dominated by v.
bool reverse_dominates(const Code& v, const Code& u);

// Upper bound n^(2n(w^2+w)) * sqrt(w!) (rounded up) on the absolute value of
// any coefficient in any basis conversion handled here, w = weight(v).
Int k_bound(const Code& v, int n);

} // namespace schub

#endif
