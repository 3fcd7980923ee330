#include "schub/poly.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace schub {

using json = nlohmann::ordered_json;

SparsePolynomial::SparsePolynomial(int nvars) : nvars_(nvars)
{
    if (nvars < 0)
        throw std::invalid_argument("nvars must be nonnegative");
}

SparsePolynomial SparsePolynomial::constant(int nvars, const Int& c)
{
    SparsePolynomial f(nvars);
    f.add_term(Exponents(nvars, 0), c);
    return f;
}

SparsePolynomial SparsePolynomial::monomial(int nvars, Exponents exp, const Int& c)
{
    SparsePolynomial f(nvars);
    f.check_exp(exp);
    f.add_term(exp, c);
    return f;
}

void SparsePolynomial::check_exp(const Exponents& exp) const
{
    if (static_cast<int>(exp.size()) != nvars_)
        throw std::invalid_argument("exponent vector has wrong length");
    for (int e : exp)
        if (e < 0)
            throw std::invalid_argument("exponents must be nonnegative");
}

long SparsePolynomial::degree() const
{
    long deg = -1;
    for (const auto& [exp, c] : terms_) {
        long d = 0;
        for (int e : exp)
            d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

bool SparsePolynomial::homogeneous() const
{
    long deg = -1;
    for (const auto& [exp, c] : terms_) {
        long d = 0;
        for (int e : exp)
            d += e;
        if (deg == -1)
            deg = d;
        else if (d != deg)
            return false;
    }
    return true;
}

const Int& SparsePolynomial::coeff(const Exponents& exp) const
{
    static const Int zero = 0;
    auto it = terms_.find(exp);
    return it == terms_.end() ? zero : it->second;
}

void SparsePolynomial::add_term(const Exponents& exp, const Int& c)
{
    check_exp(exp);
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& g)
{
    if (g.nvars_ != nvars_)
        throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [exp, c] : g.terms_)
        add_term(exp, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& g)
{
    if (g.nvars_ != nvars_)
        throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [exp, c] : g.terms_)
        add_term(exp, -c);
    return *this;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& g) const
{
    SparsePolynomial r = *this;
    r += g;
    return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& g) const
{
    SparsePolynomial r = *this;
    r -= g;
    return r;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& g) const
{
    if (g.nvars_ != nvars_)
        throw std::invalid_argument("polynomial arity mismatch");
    SparsePolynomial r(nvars_);
    Exponents exp(nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : g.terms_) {
            for (int i = 0; i < nvars_; ++i)
                exp[i] = e1[i] + e2[i];
            r.add_term(exp, c1 * c2);
        }
    }
    return r;
}

SparsePolynomial SparsePolynomial::operator-() const
{
    SparsePolynomial r(nvars_);
    for (const auto& [exp, c] : terms_)
        r.terms_.emplace(exp, -c);
    return r;
}

SparsePolynomial SparsePolynomial::operator*(const Int& c) const
{
    SparsePolynomial r(nvars_);
    if (c == 0)
        return r;
    for (const auto& [exp, k] : terms_)
        r.terms_.emplace(exp, k * c);
    return r;
}

SparsePolynomial SparsePolynomial::times_var(int k) const
{
    if (k < 1 || k > nvars_)
        throw std::invalid_argument("times_var: variable out of range");
    SparsePolynomial r(nvars_);
    for (const auto& [exp, c] : terms_) {
        Exponents e = exp;
        ++e[k - 1];
        r.terms_.emplace(std::move(e), c);
    }
    return r;
}

Int SparsePolynomial::evaluate(const Point& point) const
{
    if (static_cast<int>(point.size()) < nvars_)
        throw std::invalid_argument("evaluation point has too few coordinates");
    // Power tables per variable, up to the largest exponent that occurs.
    std::vector<int> maxdeg(nvars_, 0);
    for (const auto& [exp, c] : terms_)
        for (int i = 0; i < nvars_; ++i)
            maxdeg[i] = std::max(maxdeg[i], exp[i]);
    std::vector<std::vector<Int>> pow(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        pow[i].resize(maxdeg[i] + 1);
        pow[i][0] = 1;
        for (int e = 1; e <= maxdeg[i]; ++e)
            pow[i][e] = pow[i][e - 1] * point[i];
    }
    Int sum = 0;
    Int term;
    for (const auto& [exp, c] : terms_) {
        term = c;
        for (int i = 0; i < nvars_; ++i)
            if (exp[i] > 0)
                term *= pow[i][exp[i]];
        sum += term;
    }
    return sum;
}

SparsePolynomial SparsePolynomial::extended(int k) const
{
    if (k < nvars_)
        throw std::invalid_argument("extended: cannot shrink arity");
    SparsePolynomial r(k);
    for (const auto& [exp, c] : terms_) {
        Exponents e = exp;
        e.resize(k, 0);
        r.terms_.emplace(std::move(e), c);
    }
    return r;
}

SparsePolynomial SparsePolynomial::restricted(int k) const
{
    if (k < 0 || k > nvars_)
        throw std::invalid_argument("restricted: bad arity");
    SparsePolynomial r(k);
    for (const auto& [exp, c] : terms_) {
        for (int i = k; i < nvars_; ++i)
            if (exp[i] != 0)
                throw std::invalid_argument("restricted: variable past the cut is used");
        Exponents e(exp.begin(), exp.begin() + k);
        r.terms_.emplace(std::move(e), c);
    }
    return r;
}

std::string SparsePolynomial::to_json() const
{
    json j;
    j["nvars"] = nvars_;
    j["terms"] = json::array();
    for (const auto& [exp, c] : terms_) {
        json t;
        t["exp"] = exp;
        t["coeff"] = to_decimal(c);
        j["terms"].push_back(std::move(t));
    }
    return j.dump();
}

SparsePolynomial SparsePolynomial::from_json(const std::string& text)
{
    json j = json::parse(text);
    if (!j.is_object() || !j.contains("nvars") || !j.contains("terms"))
        throw std::invalid_argument("polynomial JSON needs 'nvars' and 'terms'");
    SparsePolynomial f(j.at("nvars").get<int>());
    for (const auto& t : j.at("terms")) {
        Exponents exp = t.at("exp").get<Exponents>();
        const std::string c = t.at("coeff").get<std::string>();
        f.add_term(exp, Int(c, 10));
    }
    return f;
}

SparsePolynomial divided_difference(const SparsePolynomial& f, int i)
{
    if (i < 1 || i >= f.nvars())
        throw std::invalid_argument("divided_difference: need 1 <= i < nvars");
    // Termwise: for c * x_i^p * x_{i+1}^q * m the quotient is the exact
    // geometric sum c * m * sum_j x_i^a x_{i+1}^b over the exponent band
    // between p and q, so no remainder ever arises.
    SparsePolynomial r(f.nvars());
    const int a = i - 1;
    const int b = i;
    for (const auto& [exp, c] : f.terms()) {
        const int p = exp[a];
        const int q = exp[b];
        if (p == q)
            continue;
        Exponents e = exp;
        if (p > q) {
            for (int j = 0; j < p - q; ++j) {
                e[a] = q + j;
                e[b] = p - 1 - j;
                r.add_term(e, c);
            }
        } else {
            for (int j = 0; j < q - p; ++j) {
                e[a] = p + j;
                e[b] = q - 1 - j;
                r.add_term(e, -c);
            }
        }
    }
    return r;
}

} // namespace schub
