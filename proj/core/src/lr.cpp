#include "schub/lr.hpp"

#include "schub/interpolate.hpp"
#include "schub/poly.hpp"
#include "schub/schubert.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace schub {

Expansion lr_expand_product(const Code& u, const Code& v, long m_bound)
{
    if (m_bound < 0)
        throw std::invalid_argument("lr_expand_product: m_bound must be nonnegative");
    const long d = u.weight() + v.weight();
    const int n0 = std::max({1, u.size(), v.size()});
    // Product terms can in principle ask for more positions than the factors
    // use, so allow the variable count to grow before giving up.
    const int n_cap = n0 + static_cast<int>(d);
    const SchubertEvaluator eu(u), ev(v);

    BlackBox bb;
    // The explicit return type matters: gmpxx expression templates must not
    // outlive the two factor temporaries.
    bb.eval = [&eu, &ev](const Point& a) -> Int { return eu.eval(a) * ev.eval(a); };
    for (int n = n0;; ++n) {
        bb.nvars = n;
        try {
            return interpolate(bb, schubert_basis(n), n, d, m_bound);
        } catch (const promise_error&) {
            if (n >= n_cap)
                throw;
        }
    }
}

namespace {

// Lexicographic comparison of the suffix-sum vectors (s_1, s_2, ...).  Every
// monomial of a Schubert polynomial is reverse-dominated by its code, so the
// strict maximum of this order over the support is the code itself.
bool suffix_lex_less(const Exponents& a, const Exponents& b)
{
    long sa = 0, sb = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        sa += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        sb += b[i];
    std::size_t i = 0;
    for (;;) {
        if (sa != sb)
            return sa < sb;
        if (i >= a.size() || i >= b.size())
            return false;
        sa -= a[i];
        sb -= b[i];
        ++i;
    }
}

} // namespace

Expansion lr_oracle_triangular(const Code& u, const Code& v)
{
    const int n0 = std::max({1, u.size(), v.size()});
    SparsePolynomial residual = schubert_expand_transition(u).extended(n0) *
                                schubert_expand_transition(v).extended(n0);

    Expansion out("schubert");
    long guard = static_cast<long>(residual.term_count()) + 1;
    while (!residual.is_zero()) {
        if (--guard < 0)
            throw std::logic_error("triangular elimination failed to terminate");
        const Exponents* best = nullptr;
        for (const auto& [e, c] : residual.terms())
            if (!best || suffix_lex_less(*best, e))
                best = &e;
        const Code w((std::vector<int>(*best)));
        const Int c = residual.coeff(*best);
        residual -= schubert_expand_transition(w).extended(n0) * c;
        out.add(w, c);
    }
    return out;
}

} // namespace schub
