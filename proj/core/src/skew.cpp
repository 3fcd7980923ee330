#include "schub/skew.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace schub {

std::vector<LabeledEdge> labeled_edges(const Permutation& sigma, int N)
{
    std::vector<LabeledEdge> edges;
    for (const Cover& c : bruhat_covers(sigma, N)) {
        const int b = sigma.image(c.i);
        for (int j = c.i; j < c.k; ++j)
            edges.push_back({{j, b}, c.i, c.k, c.target});
    }
    std::sort(edges.begin(), edges.end(), [](const LabeledEdge& x, const LabeledEdge& y) {
        return std::tie(x.label, x.s, x.t) < std::tie(y.label, y.s, y.t);
    });
    return edges;
}

void for_each_increasing_chain(const Permutation& sigma, const Permutation& pi, int N,
                               const std::function<void(const std::vector<ChainLabel>&)>& visit)
{
    if (sigma.size() > N || pi.size() > N)
        throw std::invalid_argument("increasing_chains: permutations do not fit in S_N");
    const long steps = pi.length() - sigma.length();
    if (steps < 0)
        return;
    std::map<Permutation, std::vector<LabeledEdge>> edge_cache;
    std::vector<ChainLabel> labels;

    auto dfs = [&](auto&& self, const Permutation& current) -> void {
        if (static_cast<long>(labels.size()) == steps) {
            if (current == pi)
                visit(labels);
            return;
        }
        auto it = edge_cache.find(current);
        if (it == edge_cache.end())
            it = edge_cache.emplace(current, labeled_edges(current, N)).first;
        for (const LabeledEdge& e : it->second) {
            if (!labels.empty() && !(labels.back() < e.label))
                continue;
            labels.push_back(e.label);
            self(self, e.target);
            labels.pop_back();
        }
    };
    dfs(dfs, sigma);
}

std::vector<std::vector<ChainLabel>> increasing_chains(const Permutation& sigma,
                                                       const Permutation& pi, int N)
{
    std::vector<std::vector<ChainLabel>> chains;
    for_each_increasing_chain(sigma, pi, N,
                              [&](const std::vector<ChainLabel>& labels) { chains.push_back(labels); });
    return chains;
}

namespace {

int chain_ambient_size(const Code& v, const Code& w)
{
    return std::max(embedding_size(v), embedding_size(w));
}

} // namespace

SparsePolynomial skew_expand(const Code& v, const Code& w)
{
    const int N = chain_ambient_size(v, w);
    const int nvars = N > 0 ? N - 1 : 0;
    SparsePolynomial poly(nvars);
    Exponents exp(nvars);
    for_each_increasing_chain(to_permutation(v), to_permutation(w), N,
                              [&](const std::vector<ChainLabel>& labels) {
                                  for (int i = 0; i < nvars; ++i)
                                      exp[i] = N - 1 - i;
                                  for (const ChainLabel& lab : labels) {
                                      if (--exp[lab.first - 1] < 0)
                                          throw std::logic_error("chain exponent left the staircase");
                                  }
                                  poly.add_term(exp, 1);
                              });
    return poly;
}

Int skew_eval(const Code& v, const Code& w, const Point& a)
{
    const int N = chain_ambient_size(v, w);
    const int nvars = N > 0 ? N - 1 : 0;
    if (static_cast<int>(a.size()) < nvars)
        throw std::invalid_argument("skew_eval: point too short");
    for (int i = 0; i < nvars; ++i)
        if (a[i] < 0)
            throw std::invalid_argument("skew_eval: point must be nonnegative");
    Int sum = 0;
    Exponents exp(nvars);
    for_each_increasing_chain(to_permutation(v), to_permutation(w), N,
                              [&](const std::vector<ChainLabel>& labels) {
                                  for (int i = 0; i < nvars; ++i)
                                      exp[i] = N - 1 - i;
                                  for (const ChainLabel& lab : labels) {
                                      if (--exp[lab.first - 1] < 0)
                                          throw std::logic_error("chain exponent left the staircase");
                                  }
                                  Int term = 1;
                                  for (int i = 0; i < nvars; ++i)
                                      if (exp[i] > 0)
                                          term *= int_pow(a[i], exp[i]);
                                  sum += term;
                              });
    return sum;
}

// ---------------------------------------------------------------------------
// Boolean arithmetization.
//
// A length-m chain from sigma to pi inside S_N is encoded by permutation
// matrices W_1..W_m and by N x m 0-1 matrices g (first label coordinates)
// and b (second label coordinates), one column per edge.  The product
// h = h1 h2 h3 h4 h5 h8 h9 below is the evaluated monomial x^(d - e(C)) when
// the assignment encodes an increasing chain and 0 otherwise, so the sum of
// h over every 0-1 assignment equals the chain sum.  Assignments are skipped
// exactly when some already-computed factor is 0.

namespace {

struct BitMatrix {
    int n = 0;
    unsigned mask = 0;

    int at(int r, int c) const  // 1-based
    {
        return (mask >> ((r - 1) * n + (c - 1))) & 1u;
    }
};

// Permutation-matrix indicator: products of (1 - M_rc * M_r'c') over entry
// pairs sharing a row or a column, times the row sums.
long h2_factor(const BitMatrix& M)
{
    long prod = 1;
    const int n = M.n;
    for (int i = 1; i <= n && prod; ++i)
        for (int j = 1; j <= n && prod; ++j)
            for (int l = 1; l <= n && prod; ++l)
                for (int k = 1; k <= n && prod; ++k)
                    if ((i == l) != (j == k))
                        prod *= 1 - M.at(i, j) * M.at(l, k);
    for (int i = 1; i <= n && prod; ++i) {
        long row = 0;
        for (int j = 1; j <= n; ++j)
            row += M.at(i, j);
        prod *= row;
    }
    return prod;
}

// Equality gadget prod (1 - delta^2) over all entries.
long equality_factor(const BitMatrix& A, const BitMatrix& B)
{
    long prod = 1;
    for (int r = 1; r <= A.n && prod; ++r)
        for (int c = 1; c <= A.n; ++c) {
            const int delta = A.at(r, c) - B.at(r, c);
            prod *= 1 - delta * delta;
            if (!prod)
                return 0;
        }
    return prod;
}

BitMatrix matrix_of(const Permutation& sigma, int N)
{
    BitMatrix M{N, 0};
    for (int c = 1; c <= N; ++c) {
        const int r = sigma.image(c);
        M.mask |= 1u << ((r - 1) * N + (c - 1));
    }
    return M;
}

// The step factor of h8 for one edge, with the g/b columns left symbolic:
// for permutation matrices at most one transposition term survives, namely
// W_t = W_{t-1} tau_{kl} with the cover conditions at positions k < l, and
// the remaining factors are b_{i,t} * sum_{k <= s < l} g_{st} with
// i = value moved up.  Returns alive = false when every term vanishes.
struct StepFactor {
    bool alive = false;
    int value = 0;  // b row that must be set
    int k = 0, l = 0;
};

StepFactor h8_step(const BitMatrix& Wprev, const BitMatrix& Wt)
{
    StepFactor out;
    const int n = Wprev.n;
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    if (!Wprev.at(i, k) || !Wprev.at(j, l))
                        continue;
                    long term = 1;
                    for (int a2 = i + 1; a2 < j && term; ++a2)
                        for (int b2 = k + 1; b2 < l && term; ++b2)
                            term *= 1 - Wprev.at(a2, b2);
                    if (!term)
                        continue;
                    // gate W_t == Wprev with columns k and l exchanged
                    for (int r = 1; r <= n && term; ++r)
                        for (int c = 1; c <= n && term; ++c) {
                            const int src = c == k ? l : c == l ? k : c;
                            const int delta = Wt.at(r, c) - Wprev.at(r, src);
                            term *= 1 - delta * delta;
                        }
                    if (!term)
                        continue;
                    out.alive = true;
                    out.value = i;
                    out.k = k;
                    out.l = l;
                    return out;
                }
    return out;
}

} // namespace

Int arithmetization_eval(const Code& v, const Code& w, const Point& a)
{
    const int N = chain_ambient_size(v, w);
    const long m_signed = w.weight() - v.weight();
    if (N > 3 || m_signed < 0 || m_signed > 2)
        throw std::invalid_argument("arithmetization_eval: outside the N <= 3, m <= 2 guard");
    const int m = static_cast<int>(m_signed);
    if (static_cast<int>(a.size()) < N)
        throw std::invalid_argument("arithmetization_eval: point too short");
    for (int i = 0; i < N; ++i)
        if (a[i] <= 0)
            throw std::invalid_argument("arithmetization_eval: coordinates must be positive");

    const BitMatrix W0 = matrix_of(to_permutation(v), N);
    const BitMatrix V = matrix_of(to_permutation(w), N);

    // Staircase monomial prod x_i^(N-i) and the inverse coordinates used by h1.
    Int staircase = 1;
    for (int i = 1; i <= N; ++i)
        staircase *= int_pow(a[i - 1], N - i);
    std::vector<Rat> inv_a(N);
    for (int i = 0; i < N; ++i) {
        inv_a[i] = Rat(Int(1), a[i]);
        inv_a[i].canonicalize();
    }

    // h2 of every single 0-1 matrix, so whole-tuple skips are exact zeros.
    const unsigned wstates = 1u << (N * N);
    std::vector<char> is_perm(wstates);
    for (unsigned mask = 0; mask < wstates; ++mask)
        is_perm[mask] = h2_factor({N, mask}) != 0;

    // Column patterns of g and b with their h3 * h4 factor; only the
    // exactly-one-set columns give a nonzero factor, and then factor 1.
    const unsigned colstates = 1u << N;

    Rat total = 0;

    std::vector<unsigned> wmask(m, 0);
    for (;;) {  // odometer over the W_1..W_m masks
        bool all_perm = true;
        for (int t = 0; t < m && all_perm; ++t)
            all_perm = is_perm[wmask[t]];
        if (all_perm) {
            std::vector<BitMatrix> W(m);
            for (int t = 0; t < m; ++t)
                W[t] = {N, wmask[t]};
            const BitMatrix& last = m == 0 ? W0 : W[m - 1];
            if (equality_factor(last, V)) {
                std::vector<StepFactor> steps(m);
                bool alive = true;
                for (int t = 0; t < m && alive; ++t) {
                    steps[t] = h8_step(t == 0 ? W0 : W[t - 1], W[t]);
                    alive = steps[t].alive;
                }
                if (alive) {
                    // g and b columns, one odometer each; non-unit columns
                    // zero out h3 * h4 and are skipped.
                    std::vector<int> grow(m), brow(m);  // row index of the set bit
                    std::vector<unsigned> gmask(m, 0), bmask(m, 0);
                    auto column_row = [&](unsigned mask) -> int {
                        // row (1-based) if exactly one bit is set, else 0
                        if (mask == 0 || (mask & (mask - 1)))
                            return 0;
                        int r = 1;
                        while (!(mask & 1u)) {
                            mask >>= 1;
                            ++r;
                        }
                        return r;
                    };
                    auto run_columns = [&](auto&& self, int t) -> void {
                        if (t == m) {
                            long h89 = 1;
                            for (int s = 0; s < m && h89; ++s) {
                                // b_{i,s} * sum of g rows in [k, l)
                                long range = steps[s].value == brow[s] ? 1 : 0;
                                long gsum = grow[s] >= steps[s].k && grow[s] < steps[s].l ? 1 : 0;
                                h89 *= range * gsum;
                            }
                            for (int s = 0; s + 1 < m && h89; ++s) {
                                // label (g, b) strictly increasing, weak on b
                                long inc = 0;
                                if (grow[s + 1] > grow[s])
                                    inc = 1;
                                else if (grow[s + 1] == grow[s] && brow[s + 1] >= brow[s])
                                    inc = 1;
                                h89 *= inc;
                            }
                            if (!h89)
                                return;
                            Rat h1 = Rat(staircase);
                            for (int s = 0; s < m; ++s)
                                h1 *= inv_a[grow[s] - 1];
                            total += h1 * h89;
                            return;
                        }
                        for (gmask[t] = 0; gmask[t] < colstates; ++gmask[t]) {
                            grow[t] = column_row(gmask[t]);
                            if (!grow[t])
                                continue;  // h3 * h4 = 0
                            for (bmask[t] = 0; bmask[t] < colstates; ++bmask[t]) {
                                brow[t] = column_row(bmask[t]);
                                if (!brow[t])
                                    continue;
                                self(self, t + 1);
                            }
                        }
                    };
                    run_columns(run_columns, 0);
                }
            }
        }
        // advance the W odometer
        int t = 0;
        while (t < m) {
            if (++wmask[t] < wstates)
                break;
            wmask[t] = 0;
            ++t;
        }
        if (t == m)
            break;
    }

    total.canonicalize();
    if (total.get_den() != 1)
        throw std::logic_error("arithmetization sum is not an integer");
    return total.get_num();
}

} // namespace schub
