#include "schub/interpolate.hpp"

#include "schub/schubert.hpp"
#include "schub/schur.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace schub {

namespace {

std::vector<std::vector<int>> triangular_ones(int n, bool lower)
{
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (lower ? j <= i : j >= i)
                a[i][j] = 1;
    return a;
}

Exponents padded_entries(const Code& label, int n)
{
    if (label.size() > n)
        throw std::invalid_argument("label is longer than the variable count");
    Exponents e(label.entries());
    e.resize(static_cast<std::size_t>(n), 0);
    return e;
}

void check_basis_n(int n)
{
    if (n < 1)
        throw std::invalid_argument("basis needs at least one variable");
}

} // namespace

BasisDescriptor monomial_basis(int n)
{
    check_basis_n(n);
    BasisDescriptor b;
    b.name = "monomial";
    b.n = n;
    b.transform.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        b.transform[i][i] = 1;
    b.label_to_leading = [n](const Code& label) { return padded_entries(label, n); };
    b.leading_to_label = [](const Exponents& e) -> std::optional<Code> {
        return Code(std::vector<int>(e));
    };
    b.eval_oracle = [](const Code& label, const Point& a) {
        if (static_cast<int>(a.size()) < label.size())
            throw std::invalid_argument("point shorter than the label");
        Int r = 1;
        for (int i = 0; i < label.size(); ++i)
            r *= int_pow(a[static_cast<std::size_t>(i)],
                         static_cast<unsigned long>(label.entries()[static_cast<std::size_t>(i)]));
        return r;
    };
    b.expand_oracle = [n](const Code& label) {
        return SparsePolynomial::monomial(n, padded_entries(label, n), 1);
    };
    return b;
}

BasisDescriptor schur_basis(int n)
{
    check_basis_n(n);
    BasisDescriptor b;
    b.name = "schur";
    b.n = n;
    b.transform = triangular_ones(n, /*lower=*/false);
    b.label_to_leading = [n](const Code& label) {
        if (!label.dominant())
            throw std::invalid_argument("schur labels must be partitions");
        return padded_entries(label, n);
    };
    b.leading_to_label = [](const Exponents& e) -> std::optional<Code> {
        Code c((std::vector<int>(e)));
        if (!c.dominant())
            return std::nullopt;
        return c;
    };
    b.eval_oracle = [](const Code& label, const Point& a) { return schur_eval(label, a); };
    b.expand_oracle = [n](const Code& label) { return schur_expand(label, n); };
    return b;
}

BasisDescriptor schubert_basis(int n)
{
    check_basis_n(n);
    BasisDescriptor b;
    b.name = "schubert";
    b.n = n;
    b.transform = triangular_ones(n, /*lower=*/true);
    b.label_to_leading = [n](const Code& label) { return padded_entries(label, n); };
    b.leading_to_label = [](const Exponents& e) -> std::optional<Code> {
        return Code(std::vector<int>(e));
    };
    b.eval_oracle = [](const Code& label, const Point& a) { return schubert_eval(label, a); };
    b.expand_oracle = [n](const Code& label) {
        return schubert_expand_transition(label).extended(n);
    };
    return b;
}

KSSet ks_set(long m, int n, const Rat& epsilon, long d_param)
{
    if (m < 1 || n < 1 || d_param < 1)
        throw std::invalid_argument("ks_set: m, n and d_param must be at least 1");
    if (epsilon <= 0 || epsilon >= 1)
        throw std::invalid_argument("ks_set: epsilon must lie in (0, 1)");

    KSSet ks;
    ks.m = m;
    ks.n = n;
    ks.epsilon = epsilon;
    ks.d_param = d_param;

    const Int num = epsilon.get_num();
    const Int den = epsilon.get_den();
    const Int t_exact = (Int(m) * m * n * den + num - 1) / num;  // ceil(m^2 n / eps)
    if (!t_exact.fits_slong_p())
        throw std::overflow_error("ks_set: vector count does not fit a machine integer");
    ks.t = t_exact.get_si();
    ks.p = next_prime_above(std::max(Int(ks.t), Int(d_param)));

    ks.vectors.reserve(static_cast<std::size_t>(ks.t));
    for (long k = 1; k <= ks.t; ++k) {
        std::vector<long> c(static_cast<std::size_t>(n));
        Int pw = 1;  // k^{i-1} mod p, never zero since k < p
        for (int i = 0; i < n; ++i) {
            Int r = pw % ks.p;
            c[static_cast<std::size_t>(i)] = r.get_si();
            pw = r * k;
        }
        ks.vectors.push_back(std::move(c));
    }
    return ks;
}

std::vector<long> degree_vector(const BasisDescriptor& basis, const std::vector<long>& c)
{
    const int n = basis.n;
    if (static_cast<int>(c.size()) != n)
        throw std::invalid_argument("degree_vector: test vector has the wrong length");
    std::vector<long> d(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (basis.transform[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                d[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(j)];
    return d;
}

std::vector<Int> univariate_interpolate(const std::function<Int(const Int&)>& evaluator,
                                        long degree_bound)
{
    if (degree_bound < 0)
        throw std::invalid_argument("univariate_interpolate: negative degree bound");
    const long D = degree_bound;

    // Newton divided differences over the nodes 1, ..., D+1 (spacing 1).
    std::vector<Rat> a;
    a.reserve(static_cast<std::size_t>(D) + 1);
    for (long y = 1; y <= D + 1; ++y)
        a.emplace_back(evaluator(Int(y)));
    for (long j = 1; j <= D; ++j)
        for (long i = D; i >= j; --i)
            a[static_cast<std::size_t>(i)] =
                (a[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(i - 1)]) / j;

    // Expand the Newton form to dense monomial coefficients.
    std::vector<Rat> coef(static_cast<std::size_t>(D) + 1, Rat(0));
    coef[0] = a[static_cast<std::size_t>(D)];
    long deg = 0;
    for (long j = D - 1; j >= 0; --j) {
        const Rat node(j + 1);
        ++deg;
        for (long i = deg; i >= 1; --i)
            coef[static_cast<std::size_t>(i)] =
                coef[static_cast<std::size_t>(i - 1)] - node * coef[static_cast<std::size_t>(i)];
        coef[0] = a[static_cast<std::size_t>(j)] - node * coef[0];
    }

    std::vector<Int> out(static_cast<std::size_t>(D) + 1);
    for (std::size_t i = 0; i < coef.size(); ++i) {
        if (coef[i].get_den() != 1)
            throw nondistinguishing_error(
                "univariate interpolation produced a non-integral coefficient");
        out[i] = coef[i].get_num();
    }
    return out;
}

namespace {

Point mapped_point(const std::vector<long>& d_vec, const Int& y, const std::vector<Int>* primes)
{
    Point pt(d_vec.size());
    for (std::size_t i = 0; i < d_vec.size(); ++i) {
        if (d_vec[i] < 1)
            throw std::invalid_argument("substitution degrees must be positive");
        pt[i] = int_pow(y, static_cast<unsigned long>(d_vec[i]));
        if (primes)
            pt[i] *= (*primes)[i];
    }
    return pt;
}

// Exponent recovered from the ratio of the two leading coefficients by trial
// division; the ratio must be exactly a product of the auxiliary primes.
Exponents exponent_from_ratio(const Int& bk, const Int& bkp, const std::vector<Int>& primes)
{
    Int ratio;
    if (bk == 0 || !divide_exact(bkp, bk, ratio))
        throw nondistinguishing_error("leading coefficient ratio is not integral");
    if (ratio <= 0)
        throw nondistinguishing_error("leading coefficient ratio is not positive");
    Exponents e(primes.size(), 0);
    for (std::size_t i = 0; i < primes.size(); ++i)
        while (ratio % primes[i] == 0) {
            ratio /= primes[i];
            ++e[i];
        }
    if (ratio != 1)
        throw nondistinguishing_error(
            "leading coefficient ratio is not a product of the auxiliary primes");
    return e;
}

} // namespace

Int phi_eval(const BlackBox& bb, const Expansion& partial, const BasisDescriptor& basis,
             const std::vector<long>& d_vec, const Int& y,
             const std::optional<std::vector<Int>>& primes)
{
    if (y < 1)
        throw std::invalid_argument("phi_eval: y must be at least 1");
    if (static_cast<int>(d_vec.size()) != basis.n || bb.nvars != basis.n)
        throw std::invalid_argument("phi_eval: dimension mismatch");
    if (primes && static_cast<int>(primes->size()) != basis.n)
        throw std::invalid_argument("phi_eval: need one prime per variable");

    const Point pt = mapped_point(d_vec, y, primes ? &*primes : nullptr);
    Int r = bb.eval(pt);
    for (const auto& [label, a] : partial.terms)
        r -= a * basis.eval_oracle(label, pt);
    return r;
}

std::pair<Exponents, Int> extract_leading(const std::vector<Int>& g,
                                          const std::vector<Int>& gprime,
                                          const std::vector<Int>& primes,
                                          const std::vector<long>& d_vec)
{
    if (primes.size() != d_vec.size())
        throw std::invalid_argument("extract_leading: need one prime per variable");
    long k = -1;
    for (long i = static_cast<long>(g.size()) - 1; i >= 0; --i)
        if (g[static_cast<std::size_t>(i)] != 0) {
            k = i;
            break;
        }
    if (k < 0)
        throw std::invalid_argument("extract_leading: g must be nonzero");
    long kp = -1;
    for (long i = static_cast<long>(gprime.size()) - 1; i >= 0; --i)
        if (gprime[static_cast<std::size_t>(i)] != 0) {
            kp = i;
            break;
        }
    if (kp != k)
        throw nondistinguishing_error("degrees of g and g' differ");

    Exponents e = exponent_from_ratio(g[static_cast<std::size_t>(k)],
                                      gprime[static_cast<std::size_t>(k)], primes);
    long want = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        want += d_vec[i] * e[i];
    if (want != k)
        throw nondistinguishing_error("leading exponent is inconsistent with deg(g)");
    return {std::move(e), g[static_cast<std::size_t>(k)]};
}

namespace {

long resolve_threads()
{
    const char* env = std::getenv("SCHUB_THREADS");
    if (!env || !*env)
        return 1;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0)
        return 1;
    return std::min(v, 64L);
}

// First level of the forward-difference table at which the row becomes
// constant, with that constant.  For the values of a polynomial of degree
// <= D at the integer nodes 1..D+1 the level is exactly the degree and the
// constant is deg! times the leading coefficient: a row of length D+1-j that
// is constant pins a polynomial of degree <= D-j down completely.
struct SweepLead {
    long level = 0;
    Int constant;
};

std::optional<SweepLead> sweep_leading(std::vector<Int> buf, long level_cap)
{
    long len = static_cast<long>(buf.size());
    for (long j = 0;; ++j) {
        bool flat = true;
        for (long i = 1; i < len && flat; ++i)
            flat = mpz_cmp(buf[static_cast<std::size_t>(i)].get_mpz_t(), buf[0].get_mpz_t()) == 0;
        if (flat)
            return SweepLead{j, buf[0]};
        if (j >= level_cap)
            return std::nullopt;
        // In-place subtraction keeps each slot's allocation alive instead of
        // round-tripping through a fresh temporary on every cell.
        for (long i = 0; i + 1 < len; ++i)
            mpz_sub(buf[static_cast<std::size_t>(i)].get_mpz_t(),
                    buf[static_cast<std::size_t>(i + 1)].get_mpz_t(),
                    buf[static_cast<std::size_t>(i)].get_mpz_t());
        --len;
    }
}

struct VoteResult {
    std::optional<Expansion> vote;  // empty optional: this vector's vote is discarded
    long nodes = 0;
};

struct VoteContext {
    const BlackBox* bb = nullptr;
    const BasisDescriptor* basis = nullptr;
    long d = 0;
    long m = 0;
    std::vector<Int> primes;
};

VoteResult compute_vote(const VoteContext& ctx, const std::vector<long>& c)
{
    const BasisDescriptor& basis = *ctx.basis;
    const std::vector<long> d_vec = degree_vector(basis, c);
    const long dmax = *std::max_element(d_vec.begin(), d_vec.end());
    const long D = ctx.d * dmax;
    const long nodes = D + 1;

    VoteResult out;
    out.nodes = nodes;

    // Substitution points for y = 1..D+1, computed once and shared by the
    // residual fills and the per-round updates below.
    std::vector<Point> pts(static_cast<std::size_t>(nodes));
    for (long j = 0; j < nodes; ++j)
        pts[static_cast<std::size_t>(j)] = mapped_point(d_vec, j + 1, nullptr);
    std::vector<Point> ptsp;

    // Values of phi(bb - partial) and phi'(bb - partial) at y = 1..D+1,
    // updated in place as terms are extracted; the primed row is only
    // materialized once a nonzero residual shows up.
    std::vector<Int> res(static_cast<std::size_t>(nodes));
    for (long j = 0; j < nodes; ++j)
        res[static_cast<std::size_t>(j)] = ctx.bb->eval(pts[static_cast<std::size_t>(j)]);
    std::vector<Int> resp;

    Expansion partial(basis.name);
    std::map<Code, SparsePolynomial> expanded;
    auto term_poly = [&](const Code& label) -> const SparsePolynomial& {
        auto it = expanded.find(label);
        if (it == expanded.end())
            it = expanded.emplace(label, basis.expand_oracle(label)).first;
        return it->second;
    };

    try {
        for (long round = 0; round < ctx.m; ++round) {
            const auto lead = sweep_leading(res, D);
            if (!lead)
                throw std::logic_error("difference table failed to flatten");
            if (lead->constant == 0)
                break;  // residual is identically zero
            const long k = lead->level;
            Int bk;
            if (!divide_exact(lead->constant, int_factorial(static_cast<unsigned long>(k)), bk))
                throw nondistinguishing_error("leading difference is not divisible by deg!");

            if (resp.empty()) {
                ptsp.resize(static_cast<std::size_t>(nodes));
                resp.resize(static_cast<std::size_t>(nodes));
                for (long j = 0; j < nodes; ++j) {
                    Point& pp = ptsp[static_cast<std::size_t>(j)];
                    pp = mapped_point(d_vec, j + 1, &ctx.primes);
                    Int value = ctx.bb->eval(pp);
                    for (const auto& [label, coeff] : partial.terms)
                        value -= coeff * term_poly(label).evaluate(pp);
                    resp[static_cast<std::size_t>(j)] = std::move(value);
                }
            }
            const auto leadp = sweep_leading(resp, k);
            if (!leadp || leadp->level != k)
                throw nondistinguishing_error("degrees of g and g' differ");
            Int bkp;
            if (!divide_exact(leadp->constant, int_factorial(static_cast<unsigned long>(k)), bkp))
                throw nondistinguishing_error("leading difference is not divisible by deg!");

            Exponents e = exponent_from_ratio(bk, bkp, ctx.primes);
            long want = 0, total = 0;
            for (std::size_t i = 0; i < e.size(); ++i) {
                want += d_vec[i] * e[i];
                total += e[i];
            }
            if (want != k)
                throw nondistinguishing_error("leading exponent is inconsistent with deg(g)");
            if (total > ctx.d)
                throw nondistinguishing_error("leading exponent exceeds the degree bound");
            const auto label = basis.leading_to_label(e);
            if (!label)
                throw nondistinguishing_error("leading exponent is not a valid label");

            partial.add(*label, bk);
            const SparsePolynomial& tl = term_poly(*label);
            for (long j = 0; j < nodes; ++j) {
                res[static_cast<std::size_t>(j)] -=
                    bk * tl.evaluate(pts[static_cast<std::size_t>(j)]);
                resp[static_cast<std::size_t>(j)] -=
                    bk * tl.evaluate(ptsp[static_cast<std::size_t>(j)]);
            }
        }
        out.vote = std::move(partial);
    } catch (const nondistinguishing_error&) {
        out.vote = std::nullopt;
    }
    return out;
}

} // namespace

Expansion interpolate(const BlackBox& bb, const BasisDescriptor& basis, int n, long d, long m,
                      InterpolateStats* stats)
{
    if (n < 1)
        throw std::invalid_argument("interpolate: need at least one variable");
    if (basis.n != n || bb.nvars != n)
        throw std::invalid_argument("interpolate: variable counts disagree");
    if (d < 0 || m < 0)
        throw std::invalid_argument("interpolate: d and m must be nonnegative");
    if (stats)
        *stats = InterpolateStats{};
    if (m == 0)
        return Expansion(basis.name);

    const KSSet ks = ks_set(m, n, Rat(1, 3), std::max<long>(1, n * d));
    const long need = ks.t / 2 + 1;  // strict majority
    VoteContext ctx{&bb, &basis, d, m, first_primes(static_cast<std::size_t>(n))};

    std::map<std::string, std::pair<long, Expansion>> tally;
    const Expansion* winner = nullptr;
    long processed = 0;

    auto absorb = [&](VoteResult&& r) {
        ++processed;
        if (stats)
            stats->node_counts.push_back(r.nodes);
        if (!r.vote)
            return;
        auto [it, fresh] = tally.try_emplace(r.vote->to_json(), 0L, *r.vote);
        (void)fresh;
        ++it->second.first;
        if (it->second.first >= need)
            winner = &it->second.second;
    };

    const long threads = resolve_threads();
    if (threads <= 1) {
        for (long k = 0; k < ks.t && !winner; ++k)
            absorb(compute_vote(ctx, ks.vectors[static_cast<std::size_t>(k)]));
    } else {
        for (long base = 0; base < ks.t && !winner; base += threads) {
            const long hi = std::min(ks.t, base + threads);
            std::vector<std::future<VoteResult>> block;
            block.reserve(static_cast<std::size_t>(hi - base));
            for (long k = base; k < hi; ++k)
                block.push_back(std::async(std::launch::async, compute_vote, std::cref(ctx),
                                           std::cref(ks.vectors[static_cast<std::size_t>(k)])));
            for (auto& f : block) {
                VoteResult r = f.get();
                if (!winner)
                    absorb(std::move(r));
            }
        }
    }

    if (stats)
        stats->vectors_used = processed;
    if (!winner)
        throw promise_error("no strict majority among the test vectors");
    return *winner;
}

} // namespace schub
