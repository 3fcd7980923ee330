#include "schub/schur.hpp"

#include <stdexcept>

namespace schub {

Int complete_homogeneous_eval(int l, const Point& point)
{
    if (l < 0)
        return 0;
    // h_l(x_1..x_j) = h_l(x_1..x_{j-1}) + x_j h_{l-1}(x_1..x_j)
    std::vector<Int> h(l + 1);
    h[0] = 1;
    for (const Int& a : point)
        for (int d = 1; d <= l; ++d)
            h[d] += a * h[d - 1];
    return h[l];
}

SparsePolynomial complete_homogeneous_expand(int l, int k)
{
    if (k < 0)
        throw std::invalid_argument("complete_homogeneous_expand: k < 0");
    SparsePolynomial f(k);
    if (l < 0)
        return f;
    // All monomials of total degree l in k variables, built rightmost first.
    Exponents exp(k, 0);
    auto rec = [&](auto&& self, int var, int rest) -> void {
        if (var == k - 1 || k == 0) {
            if (k == 0) {
                if (rest == 0)
                    f.add_term(exp, 1);
                return;
            }
            exp[var] = rest;
            f.add_term(exp, 1);
            exp[var] = 0;
            return;
        }
        for (int e = 0; e <= rest; ++e) {
            exp[var] = e;
            self(self, var + 1, rest - e);
        }
        exp[var] = 0;
    };
    if (k == 0) {
        if (l == 0)
            f.add_term(exp, 1);
        return f;
    }
    rec(rec, 0, l);
    return f;
}

Int integer_determinant(std::vector<std::vector<Int>> m)
{
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("determinant of a non-square matrix");
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                Int quot;
                if (!divide_exact(num, prev, quot))
                    throw std::logic_error("Bareiss elimination: inexact division");
                m[i][j] = std::move(quot);
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return n == 0 ? Int(1) : Int(sign * m[n - 1][n - 1]);
}

namespace {

void require_partition(const Code& alpha)
{
    if (!alpha.dominant())
        throw std::invalid_argument("not a partition: " + alpha.str());
}

SparsePolynomial polynomial_determinant(const std::vector<std::vector<SparsePolynomial>>& m,
                                        std::vector<int> cols, int row, int k)
{
    if (cols.empty())
        return SparsePolynomial::constant(k, 1);
    SparsePolynomial det(k);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const SparsePolynomial& entry = m[row][cols[c]];
        if (entry.is_zero())
            continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t c2 = 0; c2 < cols.size(); ++c2)
            if (c2 != c)
                rest.push_back(cols[c2]);
        SparsePolynomial minor = polynomial_determinant(m, std::move(rest), row + 1, k);
        if (c % 2 == 0)
            det += entry * minor;
        else
            det -= entry * minor;
    }
    return det;
}

} // namespace

Int schur_eval(const Code& alpha, const Point& point)
{
    require_partition(alpha);
    const int r = alpha.size();
    if (static_cast<int>(point.size()) < r)
        throw std::invalid_argument("schur_eval: point shorter than the partition");
    // Entry (i, j) needs h of degree at most alpha_1 + r; one shared table.
    const int maxdeg = alpha.empty() ? 0 : alpha.at(1) + r;
    std::vector<Int> h(maxdeg + 1);
    h[0] = 1;
    for (const Int& a : point)
        for (int d = 1; d <= maxdeg; ++d)
            h[d] += a * h[d - 1];
    std::vector<std::vector<Int>> m(r, std::vector<Int>(r));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) {
            const int deg = alpha.at(i) - i + j;
            m[i - 1][j - 1] = deg < 0 ? Int(0) : h[deg];
        }
    return integer_determinant(std::move(m));
}

SparsePolynomial schur_expand(const Code& alpha, int k)
{
    require_partition(alpha);
    const int r = alpha.size();
    if (k < r)
        throw std::invalid_argument("schur_expand: fewer variables than rows");
    std::vector<std::vector<SparsePolynomial>> m(r, std::vector<SparsePolynomial>(r));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            m[i - 1][j - 1] = complete_homogeneous_expand(alpha.at(i) - i + j, k);
    std::vector<int> cols(r);
    for (int c = 0; c < r; ++c)
        cols[c] = c;
    return polynomial_determinant(m, std::move(cols), 0, k);
}

} // namespace schub
