#include "doctest.h"

#include "schub/schubert.hpp"
#include "schub/schur.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

using namespace schub;

namespace {

// All canonical codes with the given maximum length and weight range.
std::vector<Code> codes_up_to(int max_len, int min_weight, int max_weight)
{
    std::vector<Code> out;
    std::vector<int> e(static_cast<std::size_t>(max_len), 0);
    const auto emit = [&] {
        int w = 0;
        for (int x : e)
            w += x;
        if (w >= min_weight && w <= max_weight)
            out.push_back(Code(e));
    };
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == e.size()) {
            emit();
            return;
        }
        for (int x = 0; x <= max_weight; ++x) {
            e[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Exponents padded(const Code& v, int n)
{
    Exponents e(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= v.size(); ++i)
        e[static_cast<std::size_t>(i - 1)] = v.at(i);
    return e;
}

} // namespace

TEST_CASE("transition step golden examples")
{
    const TransitionStep a = transition(Code::parse("0,1"));
    CHECK(a.k == 2);
    CHECK(a.vprime == Code());
    CHECK(a.psi == std::vector<Code>{Code::parse("1")});

    const TransitionStep b = transition(Code::parse("1,1"));
    CHECK(b.k == 2);
    CHECK(b.vprime == Code::parse("1"));
    CHECK(b.psi.empty());

    const TransitionStep c = transition(Code::parse("2"));
    CHECK(c.k == 1);
    CHECK(c.vprime == Code::parse("1"));
    CHECK(c.psi.empty());

    const TransitionStep d = transition(Code::parse("2,0,3"));
    CHECK(d.k == 3);
    CHECK(d.vprime == Code::parse("2,0,2"));
    REQUIRE(d.psi.size() == 2);
    CHECK(std::count(d.psi.begin(), d.psi.end(), Code::parse("4,0,1")) == 1);
    CHECK(std::count(d.psi.begin(), d.psi.end(), Code::parse("2,3")) == 1);

    CHECK_THROWS(static_cast<void>(transition(Code())));
}

TEST_CASE("transition identity Y_v = x_k Y_v' + sum Y_u")
{
    for (const Code& v : codes_up_to(3, 1, 4)) {
        const TransitionStep step = transition(v);
        int n = v.size();
        SparsePolynomial rhs = schubert_expand_transition(step.vprime).extended(n).times_var(step.k);
        for (const Code& u : step.psi) {
            n = std::max(n, u.size());
            rhs = rhs.extended(n) + schubert_expand_transition(u).extended(n);
        }
        CHECK(schubert_expand_transition(v).extended(n) == rhs);
    }
}

TEST_CASE("expansion golden examples")
{
    SparsePolynomial h2(2);
    h2.add_term({2, 0}, 1);
    h2.add_term({1, 1}, 1);
    h2.add_term({0, 2}, 1);
    CHECK(schubert_expand_transition(Code::parse("0,2")) == h2);

    SparsePolynomial x1x2(2);
    x1x2.add_term({1, 1}, 1);
    CHECK(schubert_expand_transition(Code::parse("1,1")) == x1x2);

    SparsePolynomial dom(2);
    dom.add_term({2, 1}, 1);
    CHECK(schubert_expand_transition(Code::parse("2,1")) == dom);

    CHECK(schubert_expand_transition(Code()) == SparsePolynomial::constant(0, 1));
}

TEST_CASE("dominant codes expand to a single monomial")
{
    for (const Code& v : codes_up_to(4, 0, 5)) {
        if (!v.dominant())
            continue;
        const SparsePolynomial f = schubert_expand_transition(v);
        CHECK(f.term_count() == 1);
        CHECK(f.coeff(padded(v, v.size())) == 1);
    }
}

TEST_CASE("divided difference route golden examples")
{
    SparsePolynomial x1x2(2);
    x1x2.add_term({1, 1}, 1);
    CHECK(schubert_expand_dd(Code::parse("1,1")) == x1x2);

    SparsePolynomial x1(1);
    x1.add_term({1}, 1);
    CHECK(schubert_expand_dd(Code::parse("1")) == x1);

    SparsePolynomial h1(2);
    h1.add_term({1, 0}, 1);
    h1.add_term({0, 1}, 1);
    CHECK(schubert_expand_dd(Code::parse("0,1")) == h1);

    CHECK(schubert_expand_dd(Code()) == SparsePolynomial::constant(0, 1));
}

TEST_CASE("dual routes agree at unit scale")
{
    for (const Code& v : codes_up_to(3, 0, 4))
        CHECK(schubert_expand_dd(v) == schubert_expand_transition(v));
}

TEST_CASE("complete homogeneous special case")
{
    // Y_(0,...,0,w) with k-1 zeros is h_w(x_1..x_k).
    for (int k = 1; k <= 3; ++k)
        for (int w = 1; w <= 4; ++w) {
            std::vector<int> e(static_cast<std::size_t>(k), 0);
            e.back() = w;
            CHECK(schubert_expand_transition(Code(e)) == complete_homogeneous_expand(w, k));
        }
}

TEST_CASE("antidominant codes expand to Schur polynomials")
{
    for (const Code& v : codes_up_to(3, 1, 5)) {
        if (!v.antidominant())
            continue;
        const int k = v.size();
        std::vector<int> alpha;
        for (int i = k; i >= 1; --i)
            alpha.push_back(v.at(i));
        CHECK(schubert_expand_transition(v) == schur_expand(Code(alpha), k));
    }
}

TEST_CASE("reverse dominance predicate")
{
    CHECK(reverse_dominates(Code::parse("0,1"), Code::parse("1")));
    CHECK_FALSE(reverse_dominates(Code::parse("1"), Code::parse("0,1")));
    CHECK(reverse_dominates(Code::parse("2,0,3"), Code::parse("2,0,3")));
    CHECK_FALSE(reverse_dominates(Code::parse("1"), Code::parse("2")));  // unequal weights
}

TEST_CASE("expansion support is reverse dominated with unit leading coefficient")
{
    for (const Code& v : codes_up_to(3, 0, 4)) {
        const SparsePolynomial f = schubert_expand_transition(v);
        for (const auto& [e, c] : f.terms())
            CHECK(reverse_dominates(v, Code(e)));
        CHECK(f.coeff(padded(v, std::max(v.size(), f.nvars()))) == 1);
    }
}

TEST_CASE("homogeneity and variable support")
{
    for (const Code& v : codes_up_to(3, 1, 4)) {
        const SparsePolynomial f = schubert_expand_transition(v);
        CHECK(f.homogeneous());
        CHECK(f.degree() == v.weight());
        CHECK(f.nvars() == v.size());  // Y_v lives in x_1..x_k, k = length(v)
    }
}

TEST_CASE("coefficient bound")
{
    for (const Code& v : codes_up_to(3, 0, 4)) {
        const int n = std::max(1, v.size());
        const Int bound = k_bound(v, n);
        const SparsePolynomial f = schubert_expand_transition(v);
        for (const auto& [e, c] : f.terms())
            CHECK(Int(abs(c)) <= bound);  // force the gmp expression before CHECK
    }
}

TEST_CASE("k_bound golden values")
{
    CHECK(k_bound(Code::parse("1"), 2) == 256);
    CHECK(k_bound(Code::parse("0"), 1) == 1);
    CHECK(k_bound(Code::parse("1,1"), 2) == 23726567);  // ceil(2^24 * sqrt(2))
    CHECK_THROWS(static_cast<void>(k_bound(Code::parse("1,1"), 1)));
}

TEST_CASE("evaluation golden examples")
{
    CHECK(schubert_eval(Code::parse("1"), {5, 7}) == 5);
    CHECK(schubert_eval(Code::parse("0,2"), {1, 1, 1}) == 3);

    const Code v = Code::parse("2,0,3");
    Int coeff_sum = 0;
    const SparsePolynomial fv = schubert_expand_transition(v);
    for (const auto& [e, c] : fv.terms())
        coeff_sum += c;
    CHECK(schubert_eval(v, {1, 1, 1}) == coeff_sum);

    CHECK(schubert_eval(Code(), {}) == 1);
    CHECK_THROWS(static_cast<void>(schubert_eval(Code::parse("1"), {})));       // too short
    CHECK_THROWS(static_cast<void>(schubert_eval(Code::parse("1"), {Int(-1)})));  // negative
}

TEST_CASE("evaluation agrees with expansion")
{
    std::mt19937 rng(101);
    for (const Code& v : codes_up_to(3, 0, 4)) {
        const SparsePolynomial f = schubert_expand_transition(v).extended(3);
        for (int trial = 0; trial < 4; ++trial) {
            Point a = {Int(static_cast<long>(rng() % 21)), Int(static_cast<long>(rng() % 21)),
                       Int(static_cast<long>(rng() % 21))};
            CHECK(schubert_eval(v, a) == f.evaluate(a));
        }
    }
}

TEST_CASE("fixed-code evaluator matches the one-shot evaluation")
{
    std::mt19937 rng(555);
    for (const Code& v : {Code::parse("2,0,3"), Code::parse("1,2"), Code()}) {
        const SchubertEvaluator ev(v);
        CHECK(ev.code() == v);
        for (int trial = 0; trial < 5; ++trial) {
            Point a = {Int(static_cast<long>(rng() % 13)), Int(static_cast<long>(rng() % 13)),
                       Int(static_cast<long>(rng() % 13))};
            CHECK(ev.eval(a) == schubert_eval(v, a));
        }
    }
    CHECK_THROWS(static_cast<void>(SchubertEvaluator(Code::parse("1")).eval({})));
    CHECK_THROWS(static_cast<void>(SchubertEvaluator(Code::parse("1")).eval({Int(-2)})));
}
