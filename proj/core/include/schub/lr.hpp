// Generalized Littlewood-Richardson coefficients: the Schubert-basis
// expansion of a product Y_u * Y_v, computed two independent ways.

#ifndef SCHUB_LR_HPP
#define SCHUB_LR_HPP

#include "schub/code.hpp"
#include "schub/expansion.hpp"

namespace schub {

// Expansion of Y_u * Y_v recovered by sparse interpolation of the black box
// a |-> schubert_eval(u, a) * schubert_eval(v, a); m_bound must be at least
// the true number of nonzero terms.  The variable count starts at the
// smallest n covering both factors and grows on interpolation failure.
Expansion lr_expand_product(const Code& u, const Code& v, long m_bound);

// The same expansion computed without interpolation: expand the product into
// monomials, then repeatedly strip the exponent maximizing the
// reverse-dominance functional, whose coefficient is exact by triangularity.
Expansion lr_oracle_triangular(const Code& u, const Code& v);

} // namespace schub

#endif
