#include "schub/expansion.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace schub {

void Expansion::add(const Code& label, const Int& c) {
    if (c == 0) return;
    auto it = terms.find(label);
    if (it == terms.end()) {
        terms.emplace(label, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

const Int& Expansion::coeff(const Code& label) const {
    static const Int zero = 0;
    auto it = terms.find(label);
    return it == terms.end() ? zero : it->second;
}

std::string Expansion::to_json() const {
    nlohmann::ordered_json j;
    j["basis"] = basis;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [label, c] : terms) {
        nlohmann::ordered_json t;
        t["label"] = label.entries();
        t["coeff"] = to_decimal(c);
        j["terms"].push_back(std::move(t));
    }
    return j.dump();
}

Expansion Expansion::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms"))
        throw std::invalid_argument("expansion JSON must have \"basis\" and \"terms\"");
    Expansion e(j.at("basis").get<std::string>());
    if (e.basis != "monomial" && e.basis != "schur" && e.basis != "schubert")
        throw std::invalid_argument("unknown basis: " + e.basis);
    for (const auto& t : j.at("terms")) {
        Code label(t.at("label").get<std::vector<int>>());
        if (e.basis == "schur" && !label.dominant())
            throw std::invalid_argument("schur labels must be partitions");
        Int c(t.at("coeff").get<std::string>());
        if (c == 0) throw std::invalid_argument("expansion coefficients must be nonzero");
        if (e.terms.count(label))
            throw std::invalid_argument("duplicate label in expansion");
        e.terms.emplace(std::move(label), std::move(c));
    }
    return e;
}

} // namespace schub
