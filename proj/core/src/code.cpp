#include "schub/code.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace schub {

namespace {

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    if (text.empty())
        return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("malformed integer list: '" + text + "'");
        out.push_back(value);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

std::string join(const std::vector<int>& xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(xs[i]);
    }
    return s;
}

} // namespace

Code::Code(std::vector<int> entries) : entries_(std::move(entries))
{
    for (int e : entries_)
        if (e < 0)
            throw std::invalid_argument("code entries must be nonnegative");
    while (!entries_.empty() && entries_.back() == 0)
        entries_.pop_back();
}

Code Code::parse(const std::string& text) { return Code(parse_int_list(text)); }

int Code::at(int i) const
{
    if (i < 1)
        throw std::out_of_range("code positions are 1-based");
    return i <= size() ? entries_[i - 1] : 0;
}

long Code::weight() const
{
    return std::accumulate(entries_.begin(), entries_.end(), 0L);
}

bool Code::dominant() const
{
    return std::is_sorted(entries_.rbegin(), entries_.rend());
}

bool Code::antidominant() const
{
    return std::is_sorted(entries_.begin(), entries_.end());
}

std::string Code::str() const { return join(entries_); }

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    const int n = static_cast<int>(images_.size());
    std::vector<char> seen(n, 0);
    for (int v : images_) {
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[v - 1] = 1;
    }
    while (!images_.empty() && images_.back() == static_cast<int>(images_.size()))
        images_.pop_back();
}

Permutation Permutation::parse(const std::string& text)
{
    return Permutation(parse_int_list(text));
}

Permutation Permutation::longest(int n)
{
    if (n < 0)
        throw std::invalid_argument("longest element needs n >= 0");
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i)
        im[i] = n - i;
    return Permutation(std::move(im));
}

int Permutation::image(int i) const
{
    if (i < 1)
        throw std::out_of_range("permutation positions are 1-based");
    return i <= size() ? images_[i - 1] : i;
}

long Permutation::length() const
{
    long inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (images_[i] > images_[j])
                ++inv;
    return inv;
}

std::string Permutation::str() const { return join(images_); }

Permutation to_permutation(const Code& v)
{
    const int n = v.size();
    int N = 0;
    for (int i = 1; i <= n; ++i)
        N = std::max(N, v.at(i) + i);
    std::vector<int> images(N);
    std::vector<char> used(N + 1, 0);
    for (int i = 1; i <= N; ++i) {
        int skip = i <= n ? v.at(i) : 0;
        int value = 0;
        for (int cand = 1; cand <= N; ++cand) {
            if (used[cand])
                continue;
            if (skip == 0) {
                value = cand;
                break;
            }
            --skip;
        }
        images[i - 1] = value;
        used[value] = 1;
    }
    return Permutation(std::move(images));
}

Code to_code(const Permutation& sigma)
{
    const int n = sigma.size();
    std::vector<int> entries(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (sigma.images()[j] < sigma.images()[i])
                ++entries[i];
    return Code(std::move(entries));
}

int embedding_size(const Code& v)
{
    int N = 0;
    for (int i = 1; i <= v.size(); ++i)
        N = std::max(N, v.at(i) + i);
    return N;
}

Permutation apply_transposition(const Permutation& sigma, int i, int k)
{
    if (i < 1 || k <= i)
        throw std::out_of_range("apply_transposition needs 1 <= i < k");
    std::vector<int> images(std::max(k, sigma.size()));
    for (int pos = 1; pos <= static_cast<int>(images.size()); ++pos)
        images[pos - 1] = sigma.image(pos);
    std::swap(images[i - 1], images[k - 1]);
    return Permutation(std::move(images));
}

std::vector<Cover> bruhat_covers(const Permutation& sigma, int n)
{
    if (n < sigma.size())
        throw std::invalid_argument("bruhat_covers: n smaller than the support of sigma");
    std::vector<Cover> covers;
    for (int i = 1; i <= n; ++i) {
        for (int k = i + 1; k <= n; ++k) {
            if (sigma.image(i) >= sigma.image(k))
                continue;
            bool blocked = false;
            for (int j = i + 1; j < k && !blocked; ++j)
                if (sigma.image(i) < sigma.image(j) && sigma.image(j) < sigma.image(k))
                    blocked = true;
            if (!blocked)
                covers.push_back({i, k, apply_transposition(sigma, i, k)});
        }
    }
    return covers;
}

} // namespace schub
