// Exact arithmetic primitives shared by the whole library.
//
// All coefficient and evaluation arithmetic is done with GMP integers and
// rationals; no floating point is used anywhere.

#ifndef SCHUB_NUMERIC_HPP
#define SCHUB_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace schub {

using Int = mpz_class;
using Rat = mpq_class;

// base^exp for exp >= 0.
inline Int int_pow(const Int& base, unsigned long exp)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Int int_factorial(unsigned long n)
{
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Smallest integer >= sqrt(n); n must be nonnegative.
inline Int sqrt_ceil(const Int& n)
{
    Int root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    if (root * root < n)
        root += 1;
    return root;
}

// Exact quotient n/d.  Returns false if d does not divide n.
inline bool divide_exact(const Int& n, const Int& d, Int& quot)
{
    if (d == 0)
        return false;
    Int rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return rem == 0;
}

// Deterministic primality by trial division; adequate for the small moduli
// used by the interpolation driver.
inline bool is_prime(const Int& n)
{
    if (n < 2)
        return false;
    for (Int f = 2; f * f <= n; ++f)
        if (n % f == 0)
            return false;
    return true;
}

inline Int next_prime_above(const Int& n)
{
    Int p = n + 1;
    if (p < 2)
        p = 2;
    while (!is_prime(p))
        ++p;
    return p;
}

// The first k primes, as machine integers (k stays tiny in practice).
inline std::vector<Int> first_primes(std::size_t k)
{
    std::vector<Int> ps;
    Int p = 2;
    while (ps.size() < k) {
        ps.push_back(p);
        p = next_prime_above(p);
    }
    return ps;
}

inline std::string to_decimal(const Int& n) { return n.get_str(10); }

} // namespace schub

#endif
