// Skew Schubert polynomials via labeled chains in the Bruhat order.
//
// A cover sigma < pi = sigma tau_{s,t} carries the labels (j, sigma(s)) for
// s <= j < t.  An increasing chain from sigma to pi is a saturated chain
// together with one label per edge whose label sequence strictly increases
// lexicographically.  With d the code of the longest element of S_N,
//
//   Y_{pi/sigma} = sum over increasing chains C of x^(d - e(C)),
//
// where e_i(C) counts labels of C with first coordinate i.

#ifndef SCHUB_SKEW_HPP
#define SCHUB_SKEW_HPP

#include "schub/code.hpp"
#include "schub/poly.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace schub {

using ChainLabel = std::pair<int, int>;

struct LabeledEdge {
    ChainLabel label;
    int s = 0;  // transposition positions, s < t
    int t = 0;
    Permutation target;

    bool operator==(const LabeledEdge&) const = default;
};

// All labeled edges leaving sigma inside S_N, ordered by label then (s, t).
// Distinct edges may carry equal labels.
std::vector<LabeledEdge> labeled_edges(const Permutation& sigma, int N);

// Streams every increasing chain from sigma to pi in S_N, in lexicographic
// order of the label sequences, as the sequence of labels.
void for_each_increasing_chain(const Permutation& sigma, const Permutation& pi, int N,
                               const std::function<void(const std::vector<ChainLabel>&)>& visit);

std::vector<std::vector<ChainLabel>> increasing_chains(const Permutation& sigma,
                                                       const Permutation& pi, int N);

// Y_{<w>/<v>} as a polynomial in N-1 variables, N the smallest symmetric
// group containing both <v> and <w>.
SparsePolynomial skew_expand(const Code& v, const Code& w);

// Evaluation of the same sum without expanding; a needs N-1 nonnegative
// coordinates.
Int skew_eval(const Code& v, const Code& w, const Point& a);

// Independent evaluation through the boolean arithmetization: the full sum
// of the product formula h over all 0-1 assignments to the chain-encoding
// matrices.  Guarded to N <= 3 and weight(w) - weight(v) <= 2; coordinates
// must be strictly positive (the formula divides by them).
Int arithmetization_eval(const Code& v, const Code& w, const Point& a);

} // namespace schub

#endif
