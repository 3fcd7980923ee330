#include "schub/schubert.hpp"

#include "schub/schur.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

namespace schub {

namespace {

Code reversed_to_partition(const Code& v)
{
    std::vector<int> alpha(v.entries().rbegin(), v.entries().rend());
    return Code(std::move(alpha));
}

long transition_depth_cap(const Code& v)
{
    const long n = v.size();
    const long w = v.weight();
    return n * (w * w + w) + 2;
}

} // namespace

TransitionStep transition(const Code& v)
{
    if (v.empty())
        throw std::invalid_argument("transition of the empty code");
    TransitionStep step;
    step.k = v.size();
    std::vector<int> entries = v.entries();
    --entries.back();
    step.vprime = Code(std::move(entries));

    const Permutation sigma = to_permutation(step.vprime);
    const int k = step.k;
    for (int i = 1; i < k; ++i) {
        if (sigma.image(i) >= sigma.image(k))
            continue;
        bool blocked = false;
        for (int j = i + 1; j < k && !blocked; ++j)
            if (sigma.image(i) < sigma.image(j) && sigma.image(j) < sigma.image(k))
                blocked = true;
        if (!blocked)
            step.psi.push_back(to_code(apply_transposition(sigma, i, k)));
    }
    return step;
}

SparsePolynomial schubert_expand_transition(const Code& v)
{
    const int n0 = v.size();
    const long cap = transition_depth_cap(v);
    std::map<Code, SparsePolynomial> memo;

    std::function<const SparsePolynomial&(const Code&, long)> rec =
        [&](const Code& c, long depth) -> const SparsePolynomial& {
        auto it = memo.find(c);
        if (it != memo.end())
            return it->second;
        if (depth > cap)
            throw std::logic_error("transition recursion exceeded its depth cap");
        SparsePolynomial poly(n0);
        if (c.antidominant()) {
            poly = schur_expand(reversed_to_partition(c), c.size()).extended(n0);
        } else {
            TransitionStep step = transition(c);
            poly = rec(step.vprime, depth + 1).times_var(step.k);
            for (const Code& u : step.psi)
                poly += rec(u, depth + 1);
        }
        return memo.emplace(c, std::move(poly)).first->second;
    };
    return rec(v, 0);
}

namespace {

// Sequence of inverse divided-difference steps lifting v to the staircase
// code (N-1, ..., 1) of the longest element: first to the dominant ancestor
// along strict ascents, then up the dominant codes.  Positions are returned
// in the order the lifts were applied.
std::vector<int> staircase_word(const Code& v, int N)
{
    std::vector<int> c(N + 1, 0);  // 1-based with a zero guard at N
    for (int i = 1; i <= v.size(); ++i)
        c[i] = v.at(i);
    std::vector<int> word;
    const long maxlen = static_cast<long>(N) * (N - 1) / 2;

    auto lift = [&](int i) {
        const int a = c[i], b = c[i + 1];
        c[i] = b + 1;
        c[i + 1] = a;
        word.push_back(i);
    };

    // Dominant ancestor: clear strict ascents, leftmost first.
    for (;;) {
        if (static_cast<long>(word.size()) > maxlen)
            throw std::logic_error("staircase lift failed to terminate");
        int i = 0;
        for (int j = 1; j < N; ++j)
            if (c[j] < c[j + 1]) {
                i = j;
                break;
            }
        if (i == 0)
            break;
        lift(i);
    }
    // Fill to the staircase; the leftmost equal pair keeps the code dominant.
    for (;;) {
        if (static_cast<long>(word.size()) > maxlen)
            throw std::logic_error("staircase lift failed to terminate");
        bool at_top = true;
        for (int j = 1; j < N && at_top; ++j)
            if (c[j] != N - j)
                at_top = false;
        if (at_top)
            break;
        int i = 0;
        for (int j = 1; j < N; ++j)
            if (c[j] == c[j + 1]) {
                i = j;
                break;
            }
        if (i == 0)
            throw std::logic_error("dominant code without an equal pair below the staircase");
        lift(i);
    }
    return word;
}

} // namespace

SparsePolynomial schubert_expand_dd(const Code& v)
{
    const int N = embedding_size(v);
    if (N == 0)
        return SparsePolynomial::constant(0, 1);
    const std::vector<int> word = staircase_word(v, N);
    Exponents staircase(N);
    for (int i = 0; i < N; ++i)
        staircase[i] = N - 1 - i;
    SparsePolynomial poly = SparsePolynomial::monomial(N, std::move(staircase), 1);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        poly = divided_difference(poly, *it);
    return poly.restricted(v.size());
}

SchubertEvaluator::SchubertEvaluator(Code v) : v_(std::move(v))
{
    const long cap = transition_depth_cap(v_);

    std::function<void(const Code&, long)> build = [&](const Code& c, long depth) {
        if (nodes_.count(c))
            return;
        if (depth > cap)
            throw std::logic_error("transition recursion exceeded its depth cap");
        Node node;
        if (c.antidominant()) {
            node.leaf = true;
            node.alpha = reversed_to_partition(c);
            node.width = c.size();
            nodes_.emplace(c, std::move(node));
            return;
        }
        TransitionStep step = transition(c);
        node.k = step.k;
        node.vprime = step.vprime;
        node.psi = step.psi;
        nodes_.emplace(c, node);
        build(step.vprime, depth + 1);
        for (const Code& u : step.psi)
            build(u, depth + 1);
    };
    build(v_, 0);
}

Int SchubertEvaluator::eval(const Point& a) const
{
    if (static_cast<int>(a.size()) < v_.size())
        throw std::invalid_argument("schubert_eval: point shorter than the code");
    for (const Int& x : a)
        if (x < 0)
            throw std::invalid_argument("schubert_eval: point must be nonnegative");
    std::map<Code, Int> memo;

    std::function<const Int&(const Code&)> rec = [&](const Code& c) -> const Int& {
        auto it = memo.find(c);
        if (it != memo.end())
            return it->second;
        const Node& node = nodes_.at(c);
        Int value;
        if (node.leaf) {
            Point prefix(a.begin(), a.begin() + node.width);
            value = schur_eval(node.alpha, prefix);
        } else {
            value = a[node.k - 1] * rec(node.vprime);
            for (const Code& u : node.psi)
                value += rec(u);
        }
        return memo.emplace(c, std::move(value)).first->second;
    };
    return rec(v_);
}

Int schubert_eval(const Code& v, const Point& a)
{
    return SchubertEvaluator(v).eval(a);
}

bool reverse_dominates(const Code& v, const Code& u)
{
    const int n = std::max(v.size(), u.size());
    long sv = 0, su = 0;
    for (int i = n; i >= 1; --i) {
        sv += v.at(i);
        su += u.at(i);
        if (sv < su)
            return false;
    }
    return sv == su;
}

Int k_bound(const Code& v, int n)
{
    if (n < v.size())
        throw std::invalid_argument("k_bound: n smaller than length(v)");
    const unsigned long w = static_cast<unsigned long>(v.weight());
    const unsigned long e = 2ul * static_cast<unsigned long>(n) * (w * w + w);
    // n^(2n(w^2+w)) * sqrt(w!) = sqrt(n^(4n(w^2+w)) * w!), rounded up.
    return sqrt_ceil(int_pow(Int(n), 2 * e) * int_factorial(w));
}

} // namespace schub
