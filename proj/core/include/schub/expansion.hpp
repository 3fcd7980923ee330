// A finite linear combination of basis elements indexed by codes.

#ifndef SCHUB_EXPANSION_HPP
#define SCHUB_EXPANSION_HPP

#include "schub/code.hpp"
#include "schub/numeric.hpp"

#include <map>
#include <string>

namespace schub {

struct Expansion {
    std::string basis;        // "monomial", "schur" or "schubert"
    std::map<Code, Int> terms;  // canonical labels, nonzero coefficients

    Expansion() = default;
    explicit Expansion(std::string basis_name) : basis(std::move(basis_name)) {}

    void add(const Code& label, const Int& c);
    const Int& coeff(const Code& label) const;
    bool operator==(const Expansion&) const = default;

    // {"basis": "...", "terms": [{"label": [...], "coeff": "<decimal>"}]}
    // with terms in ascending lexicographic label order.
    std::string to_json() const;
    static Expansion from_json(const std::string& text);
};

} // namespace schub

#endif
