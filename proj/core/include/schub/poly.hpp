// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients, exponent-map representation.
//
// Terms are kept in lexicographic exponent order (the natural order of the
// underlying map), zero coefficients are never stored, and every exponent
// vector has exactly nvars entries.

#ifndef SCHUB_POLY_HPP
#define SCHUB_POLY_HPP

#include "schub/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace schub {

using Exponents = std::vector<int>;
using Point = std::vector<Int>;

class SparsePolynomial {
public:
    using TermMap = std::map<Exponents, Int>;

    SparsePolynomial() = default;
    explicit SparsePolynomial(int nvars);

    static SparsePolynomial constant(int nvars, const Int& c);
    static SparsePolynomial monomial(int nvars, Exponents exp, const Int& c);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Total degree of the highest term; -1 for the zero polynomial.
    long degree() const;
    bool homogeneous() const;

    const Int& coeff(const Exponents& exp) const;

    void add_term(const Exponents& exp, const Int& c);

    SparsePolynomial& operator+=(const SparsePolynomial& g);
    SparsePolynomial& operator-=(const SparsePolynomial& g);
    SparsePolynomial operator+(const SparsePolynomial& g) const;
    SparsePolynomial operator-(const SparsePolynomial& g) const;
    SparsePolynomial operator*(const SparsePolynomial& g) const;
    SparsePolynomial operator-() const;
    SparsePolynomial operator*(const Int& c) const;

    // Multiplication by the variable x_k (1-based).
    SparsePolynomial times_var(int k) const;

    // Exact evaluation; point must supply at least nvars coordinates.
    Int evaluate(const Point& point) const;

    // Returns the same polynomial viewed in k >= nvars variables.
    SparsePolynomial extended(int k) const;

    // Returns the polynomial restricted to its first k variables; throws if
    // any term uses a variable past k.
    SparsePolynomial restricted(int k) const;

    bool operator==(const SparsePolynomial&) const = default;

    // Canonical JSON form:
    //   {"nvars": n, "terms": [{"exp": [...], "coeff": "<decimal>"}, ...]}
    // with terms in ascending lexicographic exponent order.
    std::string to_json() const;
    static SparsePolynomial from_json(const std::string& text);

private:
    int nvars_ = 0;
    TermMap terms_;

    void check_exp(const Exponents& exp) const;
};

// Divided difference (f - swap_i(f)) / (x_i - x_{i+1}) where swap_i exchanges
// x_i and x_{i+1}; requires 1 <= i < nvars.  The quotient is always exact.
SparsePolynomial divided_difference(const SparsePolynomial& f, int i);

} // namespace schub

#endif
