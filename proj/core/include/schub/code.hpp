// Codes (finite sequences of nonnegative integers) and permutations of
// {1, ..., N}, together with the bijection between codes and permutations
// and the Bruhat cover relation.
//
// Both objects are kept in a canonical form: codes carry no trailing zeros,
// permutations no trailing fixed points.  A permutation is identified with
// all of its extensions by fixed points, so [2,1] and [2,1,3] denote the
// same element.

#ifndef SCHUB_CODE_HPP
#define SCHUB_CODE_HPP

#include <compare>
#include <string>
#include <vector>

namespace schub {

class Code {
public:
    Code() = default;
    explicit Code(std::vector<int> entries);

    // Parses a comma separated list such as "2,0,3"; "" is the empty code.
    static Code parse(const std::string& text);

    const std::vector<int>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }

    // 1-based access; positions past the stored length read as 0.
    int at(int i) const;

    long weight() const;

    bool dominant() const;      // entries weakly decreasing
    bool antidominant() const;  // entries weakly increasing

    std::string str() const;

    auto operator<=>(const Code&) const = default;

private:
    std::vector<int> entries_;
};

class Permutation {
public:
    Permutation() = default;  // identity
    explicit Permutation(std::vector<int> images);

    // Parses one-line notation such as "3,1,6,2,4,5".
    static Permutation parse(const std::string& text);

    // The longest element of S_n, [n, n-1, ..., 1].
    static Permutation longest(int n);

    const std::vector<int>& images() const { return images_; }
    int size() const { return static_cast<int>(images_.size()); }

    // 1-based image; positions past the stored support are fixed points.
    int image(int i) const;

    // Number of inversions.
    long length() const;

    std::string str() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

// The permutation whose Lehmer code is v: sigma(i) is the (v_i + 1)-th
// smallest value not used by sigma(1), ..., sigma(i-1).
Permutation to_permutation(const Code& v);

// The Lehmer code of sigma: v_i = #{j > i : sigma(j) < sigma(i)}.
Code to_code(const Permutation& sigma);

// Smallest N with to_permutation(v) in S_N: max_i(v_i + i), 0 if v is empty.
int embedding_size(const Code& v);

// Swaps the values at positions i < k (right multiplication by the
// transposition of i and k).
Permutation apply_transposition(const Permutation& sigma, int i, int k);

// A Bruhat cover sigma < pi obtained by swapping positions i < k.
struct Cover {
    int i = 0;
    int k = 0;
    Permutation target;

    bool operator==(const Cover&) const = default;
};

// All covers of sigma inside S_n, in increasing (i, k) order.  A pair (i, k)
// gives a cover iff sigma(i) < sigma(k) and no j strictly between i and k
// has sigma(i) < sigma(j) < sigma(k).
std::vector<Cover> bruhat_covers(const Permutation& sigma, int n);

} // namespace schub

#endif
