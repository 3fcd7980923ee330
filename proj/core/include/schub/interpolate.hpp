// Deterministic sparse interpolation in the monomial, Schur and Schubert
// bases: Klivans-Spielman test vectors, exact univariate interpolation, the
// substitution maps phi / phi', and the majority-vote driver.

#ifndef SCHUB_INTERPOLATE_HPP
#define SCHUB_INTERPOLATE_HPP

#include "schub/code.hpp"
#include "schub/expansion.hpp"
#include "schub/numeric.hpp"
#include "schub/poly.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schub {

// A single test vector failed to separate the unknown support: bad ratio,
// degree mismatch, invalid label, non-integral interpolation data.  Inside
// the driver this only discards that vector's vote.
class nondistinguishing_error : public std::runtime_error {
public:
    explicit nondistinguishing_error(const std::string& what)
        : std::runtime_error(what) {}
};

// The input broke the promise under which interpolation is sound (typically:
// no strict majority of test vectors agrees on an expansion).
class promise_error : public std::runtime_error {
public:
    explicit promise_error(const std::string& what) : std::runtime_error(what) {}
};

// Opaque exact evaluation access to an integer polynomial in nvars variables.
// eval must be deterministic and safe for concurrent invocation.
struct BlackBox {
    int nvars = 0;
    std::function<Int(const Point&)> eval;
};

// One interpolation-friendly basis in n fixed variables: the 0-1 degree
// transform A, the label <-> leading-exponent maps and the term oracles.
struct BasisDescriptor {
    std::string name;  // "monomial", "schur" or "schubert"
    int n = 0;
    std::vector<std::vector<int>> transform;  // n x n, entries 0/1

    std::function<Exponents(const Code&)> label_to_leading;  // n entries
    std::function<std::optional<Code>(const Exponents&)> leading_to_label;
    std::function<Int(const Code&, const Point&)> eval_oracle;
    std::function<SparsePolynomial(const Code&)> expand_oracle;  // n variables
};

BasisDescriptor monomial_basis(int n);
BasisDescriptor schur_basis(int n);
BasisDescriptor schubert_basis(int n);

// Klivans-Spielman vector set: t = ceil(m^2 n / epsilon) vectors, the k-th
// being (k^0, k^1, ..., k^{n-1}) reduced modulo the smallest prime
// p > max(t, d_param).  All entries lie in [1, p).
struct KSSet {
    long m = 0;
    int n = 0;
    Rat epsilon;
    long d_param = 0;
    long t = 0;
    Int p;
    std::vector<std::vector<long>> vectors;
};

KSSet ks_set(long m, int n, const Rat& epsilon, long d_param);

// d_vec = A c for the basis transform.
std::vector<long> degree_vector(const BasisDescriptor& basis, const std::vector<long>& c);

// Dense coefficients (index = degree, length D+1) of a univariate integer
// polynomial of degree <= D from its values at y = 1, ..., D+1, by Newton
// interpolation over exact rationals.  A non-integral coefficient raises
// nondistinguishing_error.
std::vector<Int> univariate_interpolate(const std::function<Int(const Int&)>& evaluator,
                                        long degree_bound);

// Evaluates the residual bb - partial at the substituted point with
// coordinates y^{d_i}, or p_i * y^{d_i} when primes are given.
Int phi_eval(const BlackBox& bb, const Expansion& partial, const BasisDescriptor& basis,
             const std::vector<long>& d_vec, const Int& y,
             const std::optional<std::vector<Int>>& primes = std::nullopt);

// Recovers the leading term of the residual from the dense coefficients of
// g = phi(residual) and g' = phi'(residual): the exponent comes from trial
// division of the ratio of leading coefficients by the auxiliary primes, the
// coefficient is the leading coefficient of g itself.  Enforces
// <d_vec, e> = deg(g); any inconsistency raises nondistinguishing_error.
// Requires g nonzero.
std::pair<Exponents, Int> extract_leading(const std::vector<Int>& g,
                                          const std::vector<Int>& gprime,
                                          const std::vector<Int>& primes,
                                          const std::vector<long>& d_vec);

struct InterpolateStats {
    long vectors_used = 0;          // votes computed before the majority was reached
    std::vector<long> node_counts;  // per-vector evaluation node count D+1, in index order
};

// Sparse interpolation of the black box in the given basis: recovers the
// exact expansion under the promise that bb has at most m terms and total
// degree at most d.  Deterministic; honours SCHUB_THREADS (serial by
// default).  Raises promise_error when no strict majority of the test
// vectors agrees on one expansion.
Expansion interpolate(const BlackBox& bb, const BasisDescriptor& basis, int n, long d,
                      long m, InterpolateStats* stats = nullptr);

} // namespace schub

#endif
