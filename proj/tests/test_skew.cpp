#include "doctest.h"

#include "schub/code.hpp"
#include "schub/schubert.hpp"
#include "schub/skew.hpp"

#include <algorithm>
#include <vector>

using namespace schub;

namespace {

std::vector<Permutation> symmetric_group(int n)
{
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        images[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Permutation> all;
    do {
        all.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return all;
}

} // namespace

TEST_CASE("labeled edges golden examples")
{
    const auto from_id = labeled_edges(Permutation(), 3);
    REQUIRE(from_id.size() == 2);
    CHECK(from_id[0].label == ChainLabel{1, 1});
    CHECK(from_id[0].target == Permutation::parse("2,1"));
    CHECK(from_id[1].label == ChainLabel{2, 2});
    CHECK(from_id[1].target == Permutation::parse("1,3,2"));

    CHECK(labeled_edges(Permutation::parse("3,2,1"), 3).empty());

    // Covers of [2,1,3]: tau_{13} to [3,1,2] (labels (1,2),(2,2)) and
    // tau_{23} to [2,3,1] (label (2,1)); output ordered by label.
    const auto from_s1 = labeled_edges(Permutation::parse("2,1"), 3);
    REQUIRE(from_s1.size() == 3);
    CHECK(from_s1[0].label == ChainLabel{1, 2});
    CHECK(from_s1[0].target == Permutation::parse("3,1,2"));
    CHECK(from_s1[0].s == 1);
    CHECK(from_s1[0].t == 3);
    CHECK(from_s1[1].label == ChainLabel{2, 1});
    CHECK(from_s1[1].target == Permutation::parse("2,3,1"));
    CHECK(from_s1[2].label == ChainLabel{2, 2});
    CHECK(from_s1[2].target == Permutation::parse("3,1,2"));
}

TEST_CASE("labeled edges: every cover contributes t-s edges with b = sigma(s)")
{
    for (const Permutation& sigma : symmetric_group(4)) {
        const auto edges = labeled_edges(sigma, 4);
        long expected = 0;
        for (const Cover& c : bruhat_covers(sigma, 4))
            expected += c.k - c.i;
        CHECK(static_cast<long>(edges.size()) == expected);
        for (const auto& e : edges) {
            CHECK(e.target == apply_transposition(sigma, e.s, e.t));
            CHECK(e.label.second == sigma.image(e.s));
            CHECK(e.label.first >= e.s);
            CHECK(e.label.first < e.t);
            CHECK(e.target.length() == sigma.length() + 1);
        }
    }
}

TEST_CASE("increasing chains golden examples")
{
    // sigma = pi: exactly one empty chain.
    const auto trivial = increasing_chains(Permutation::parse("2,1"), Permutation::parse("2,1"), 3);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].empty());

    // identity up to the longest element of S_3: exactly one chain, e(C) = (2,1).
    const auto full = increasing_chains(Permutation(), Permutation::longest(3), 3);
    REQUIRE(full.size() == 1);
    std::vector<int> e(2, 0);
    for (const ChainLabel& l : full[0])
        ++e[static_cast<std::size_t>(l.first - 1)];
    CHECK(e == std::vector<int>{2, 1});

    // sigma with code (1,1): one chain with e(C) = (1,0).
    const auto one = increasing_chains(Permutation::parse("2,3,1"), Permutation::longest(3), 3);
    REQUIRE(one.size() == 1);
    std::vector<int> e2(2, 0);
    for (const ChainLabel& l : one[0])
        ++e2[static_cast<std::size_t>(l.first - 1)];
    CHECK(e2 == std::vector<int>{1, 0});

    // sigma not below pi: no chains.
    CHECK(increasing_chains(Permutation::parse("2,1"), Permutation(), 3).empty());
}

TEST_CASE("increasing chains have strictly increasing labels and correct length")
{
    const Permutation pi0 = Permutation::longest(4);
    for (const Permutation& sigma : symmetric_group(4)) {
        const auto chains = increasing_chains(sigma, pi0, 4);
        for (const auto& chain : chains) {
            CHECK(static_cast<long>(chain.size()) == pi0.length() - sigma.length());
            for (std::size_t i = 1; i < chain.size(); ++i)
                CHECK(chain[i - 1] < chain[i]);
        }
    }
}

TEST_CASE("skew expansion golden examples")
{
    SparsePolynomial dom(2);
    dom.add_term({2, 1}, 1);
    CHECK(skew_expand(Code::parse("2,1"), Code::parse("2,1")) == dom);

    CHECK(skew_expand(Code(), Code::parse("2,1")) == SparsePolynomial::constant(2, 1));

    SparsePolynomial x1(2);
    x1.add_term({1, 0}, 1);
    CHECK(skew_expand(Code::parse("1"), Code::parse("2,1")) == x1);

    // Incomparable pair: zero polynomial.
    CHECK(skew_expand(Code::parse("2,1"), Code::parse("1")).is_zero());
}

TEST_CASE("skew expansion properties")
{
    const Code w0 = Code::parse("3,2,1");  // longest element of S_4
    for (const Permutation& sigma : symmetric_group(4)) {
        const Code v = to_code(sigma);
        const SparsePolynomial f = skew_expand(v, w0);
        CHECK(f.homogeneous());
        // N(N-1)/2 - (|w0| - |v|) with N = 4 and |w0| = 6.
        CHECK(f.degree() == v.weight());
        for (const auto& [e, c] : f.terms())
            CHECK(c > 0);
    }
}

TEST_CASE("skew specialization recovers Schubert polynomials")
{
    // Y_{pi_0/sigma} = Y_sigma inside S_4.
    const Code w0 = Code::parse("3,2,1");
    for (const Permutation& sigma : symmetric_group(4)) {
        const Code v = to_code(sigma);
        CHECK(skew_expand(v, w0) == schubert_expand_transition(v).extended(3));
    }
}

TEST_CASE("skew evaluation golden examples")
{
    CHECK(skew_eval(Code::parse("1"), Code::parse("2,1"), {4, 9}) == 4);
    CHECK(skew_eval(Code::parse("2,1"), Code::parse("2,1"), {2, 3}) == 12);
    CHECK(skew_eval(Code::parse("1,1"), Code::parse("2,1"), {2, 3}) == 6);
    CHECK(skew_eval(Code::parse("2,1"), Code::parse("1"), {5, 5}) == 0);
    CHECK_THROWS(static_cast<void>(skew_eval(Code::parse("1"), Code::parse("2,1"), {4})));
}

TEST_CASE("skew evaluation agrees with expansion, including zero coordinates")
{
    const Code w0 = Code::parse("3,2,1");
    const std::vector<Point> points = {{2, 3, 5}, {1, 0, 4}, {0, 0, 0}, {7, 1, 2}};
    for (const Permutation& sigma : symmetric_group(4)) {
        const Code v = to_code(sigma);
        const SparsePolynomial f = skew_expand(v, w0);
        for (const Point& a : points)
            CHECK(skew_eval(v, w0, a) == f.evaluate(a));
    }
}

TEST_CASE("arithmetization golden examples")
{
    CHECK(arithmetization_eval(Code::parse("1,1"), Code::parse("2,1"), {2, 3, 1}) == 6);
    CHECK(arithmetization_eval(Code::parse("2,1"), Code::parse("2,1"), {2, 3, 1}) == 12);
    CHECK(arithmetization_eval(Code::parse("1"), Code::parse("2,1"), {4, 9, 1}) == 4);
}

TEST_CASE("arithmetization guards")
{
    // Embedding size 4 exceeds the N <= 3 guard.
    CHECK_THROWS(static_cast<void>(
        arithmetization_eval(Code::parse("1"), Code::parse("3,2,1"), {1, 1, 1, 1})));
    // Weight difference 3 exceeds the m <= 2 guard.
    CHECK_THROWS(static_cast<void>(
        arithmetization_eval(Code(), Code::parse("2,1"), {1, 1, 1})));
    // Coordinates must be strictly positive.
    CHECK_THROWS(static_cast<void>(
        arithmetization_eval(Code::parse("1,1"), Code::parse("2,1"), {2, 0, 1})));
}

TEST_CASE("arithmetization equals chain evaluation on all in-guard pairs")
{
    const std::vector<Point> points = {{2, 3, 1}, {1, 1, 1}, {5, 2, 4}};
    for (const Permutation& sigma : symmetric_group(3))
        for (const Permutation& pi : symmetric_group(3)) {
            const Code v = to_code(sigma), w = to_code(pi);
            if (w.weight() - v.weight() > 2 || w.weight() < v.weight())
                continue;
            for (const Point& a : points)
                CHECK(arithmetization_eval(v, w, a) == skew_eval(v, w, a));
        }
}
