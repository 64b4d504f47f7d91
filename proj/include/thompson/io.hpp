#pragma once

/**
 * @file io.hpp
 * @brief JSON forms of trees and elements.
 *
 *     tree:    {"k": 3, "leaves": ["00","01","02","1","2"]}
 *     element: {"k": 3, "plus": [...], "minus": [...]}
 */

#include <string>
#include <vector>

#include "json.hpp"

#include "thompson/element.hpp"

namespace thompson {

using Json = nlohmann::json;

inline Json address_list(const KTree& t) {
    Json out = Json::array();
    for (const auto& a : t.leaf_addresses()) out.push_back(a.digits);
    return out;
}

inline Json tree_to_json(const KTree& t) { return {{"k", t.arity()}, {"leaves", address_list(t)}}; }

inline Json element_to_json(const Element& g) {
    return {{"k", g.arity()}, {"plus", address_list(g.plus())}, {"minus", address_list(g.minus())}};
}

namespace detail {

inline KTree tree_from_list(int arity, const Json& list) {
    if (!list.is_array()) throw ParseError("leaf list must be an array", 0);
    std::vector<Address> leaves;
    for (const auto& a : list) {
        if (!a.is_string()) throw ParseError("leaf address must be a string", 0);
        leaves.push_back(Address{a.get<std::string>()});
    }
    return KTree::from_addresses(arity, leaves);
}

inline int arity_field(const Json& j) {
    if (!j.is_object() || !j.contains("k") || !j["k"].is_number_integer()) throw ParseError("missing integer field k", 0);
    return j["k"].get<int>();
}

}  // namespace detail

inline KTree tree_from_json(const Json& j) {
    if (!j.contains("leaves")) throw ParseError("missing field leaves", 0);
    return detail::tree_from_list(detail::arity_field(j), j["leaves"]);
}

struct ParsedElement {
    Element element;
    bool was_unreduced = false;
};

/// Reduces on ingest; was_unreduced flags input that carried opposing carets.
inline ParsedElement element_from_json(const Json& j) {
    const int k = detail::arity_field(j);
    if (!j.contains("plus") || !j.contains("minus")) throw ParseError("missing field plus or minus", 0);
    KTree plus = detail::tree_from_list(k, j["plus"]);
    KTree minus = detail::tree_from_list(k, j["minus"]);
    Element g(plus, minus);
    bool unreduced = g.leaf_count() != plus.leaf_count();
    return {g, unreduced};
}

inline ParsedElement element_from_string(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
    return element_from_json(j);
}

}  // namespace thompson
