#pragma once

/**
 * @file suites.hpp
 * @brief Exhaustive and seeded verification sweeps with JSON reports.
 */

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "thompson/io.hpp"
#include "thompson/subgroups.hpp"

namespace thompson {

struct SuiteParams {
    int k = 3;
    std::size_t max_splits = 3;
    std::size_t depth = 8;
    std::uint64_t seed = 20240607;
    std::size_t n = 6;
    std::string family = "y";
};

struct SuiteReport {
    std::string suite;
    Json parameters = Json::object();
    bool pass = true;
    std::size_t checked = 0;
    std::vector<Json> counterexamples;
    Json notes = Json::object();
    double runtime_seconds = 0;

    void fail(Json counterexample) {
        pass = false;
        counterexamples.push_back(std::move(counterexample));
    }

    Json to_json() const {
        return {{"suite", suite},           {"parameters", parameters},
                {"pass", pass},             {"checked", checked},
                {"counterexamples", counterexamples}, {"notes", notes},
                {"runtime_seconds", runtime_seconds}};
    }
};

/// Count of k-ary trees with m internal nodes, binom(km, m) / ((k-1)m + 1).
inline BigInt fuss_catalan(int k, std::size_t m) {
    BigInt num = 1, den = 1;
    const auto km = static_cast<std::size_t>(k) * m;
    for (std::size_t i = 0; i < m; ++i) {
        num *= km - i;
        den *= i + 1;
    }
    return num / den / ((k - 1) * m + 1);
}

/// Random word in u_i, v_i, w_i with indices <= max_index.
inline OrientedWord random_oriented_word(std::mt19937_64& rng, std::size_t max_len, std::size_t max_index) {
    std::uniform_int_distribution<std::size_t> len(1, max_len), idx(0, max_index);
    std::uniform_int_distribution<int> tag(0, 2), sign(0, 1);
    OrientedWord w;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i)
        push_letter(w, {{static_cast<OTag>(tag(rng)), idx(rng)}, sign(rng) ? 1 : -1});
    return w;
}

/// Random word in y_0 .. y_max_index of F_arity.
inline GenWord random_word(std::mt19937_64& rng, int arity, std::size_t max_len, std::size_t max_index) {
    std::uniform_int_distribution<std::size_t> len(1, max_len), idx(0, max_index);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<Letter> letters;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) letters.push_back({idx(rng), sign(rng) ? 1 : -1});
    return make_word(arity, letters);
}

inline Family family_by_name(const std::string& name, int k) {
    if (name == "y") return [k](std::size_t i) { return elementary(k, i); };
    if (name == "w" || name == "gk") return [k](std::size_t i) { return gk_gen(k, i); };
    if (name == "u") return [](std::size_t i) { return ogen_element({OTag::u, i}); };
    if (name == "v") return [](std::size_t i) { return ogen_element({OTag::v, i}); };
    if (name == "wo") return [](std::size_t i) { return ogen_element({OTag::w, i}); };
    if (name == "phi") return [k](std::size_t i) { return phi_k(k, elementary(2 * k - 1, i)); };
    throw Error("unknown family '" + name + "'");
}

/// Arity of the presentation a family is checked against.
inline int family_arity(const std::string& name, int k) {
    if (name == "u" || name == "v" || name == "wo") return 3;
    if (name == "phi") return 2 * k - 1;
    return k;
}

namespace suites {

inline void prop1(const SuiteParams& p, SuiteReport& r) {
    r.parameters = {{"k", 3}, {"max_splits", p.max_splits}};
    for (const auto& g : enumerate_elements_upto(3, p.max_splits)) {
        ++r.checked;
        auto gamma = gamma_of(g);
        auto colours = two_colouring(gamma);
        bool by_weights = weight_parity_criterion(g.plus(), g.minus());
        if (colours.has_value() != by_weights) {
            r.fail({{"element", element_to_json(g)}, {"bipartite", colours.has_value()}, {"weight_parity", by_weights}});
            continue;
        }
        auto w = leaf_weights(g);
        for (const auto* side : {&w.plus, &w.minus}) {
            for (std::size_t i = 2; i < side->size(); i += 2)
                if ((*side)[i] != (*side)[i - 1]) r.fail({{"element", element_to_json(g)}, {"leaf", i}, {"rule", "c(2i)=c(2i-1)"}});
            if (!colours) continue;
            for (std::size_t j = 0; j < colours->size(); ++j) {
                bool even = (*side)[2 * j] % 2 == 0;
                if (even != ((*colours)[j] == Colour::plus))
                    r.fail({{"element", element_to_json(g)}, {"vertex", j}, {"rule", "colour sign"}});
            }
        }
    }
}

inline void relations(const SuiteParams& p, SuiteReport& r) {
    const int arity = family_arity(p.family, p.k);
    const std::size_t n = std::max<std::size_t>(p.n, static_cast<std::size_t>(arity));
    r.parameters = {{"family", p.family}, {"k", p.k}, {"n", n}, {"presentation_arity", arity}};
    r.checked = n * (n + 1) / 2;
    if (auto bad = relation_check(family_by_name(p.family, p.k), arity, n))
        r.fail({{"n", bad->first}, {"l", bad->second}});
}

inline void decompose_suite(const SuiteParams& p, SuiteReport& r, std::size_t random_words = 500) {
    r.parameters = {{"max_splits", p.max_splits}, {"seed", p.seed}, {"random_words", random_words}};
    auto check = [&](const Element& g, const std::string& origin) {
        ++r.checked;
        auto w = reduce_index(decompose(g));
        bool small = w.empty() || w.max_index() <= 2;
        if (!small || !(eval_oriented(w) == g))
            r.fail({{"element", element_to_json(g)}, {"origin", origin}, {"word", to_string(w)}});
    };
    for (const auto& g : enumerate_elements_upto(3, p.max_splits))
        if (is_oriented(g)) check(g, "exhaustive");
    std::mt19937_64 rng(p.seed);
    for (std::size_t i = 0; i < random_words; ++i) {
        auto w = random_oriented_word(rng, 6, 4);
        check(eval_oriented(w), to_string(w));
    }
}

inline void gk(const SuiteParams& p, SuiteReport& r) {
    r.parameters = {{"k", p.k}, {"max_splits", p.max_splits}};
    for (const auto& g : enumerate_elements_upto(p.k, p.max_splits)) {
        ++r.checked;
        if (in_Gk(g) != (length_parity(g) == 0)) r.fail({{"element", element_to_json(g)}});
    }
    Element y0 = elementary(p.k, 0);
    if (in_Gk(y0) || length_parity(y0) != 1) r.fail({{"witness", "y0"}});
}

inline std::vector<std::pair<std::string, Element>> nine_generators() {
    std::vector<std::pair<std::string, Element>> out;
    for (OTag t : {OTag::u, OTag::v, OTag::w})
        for (std::size_t i = 0; i <= 2; ++i) {
            OrientedWord w;
            push_letter(w, {{t, i}, 1});
            out.emplace_back(to_string(w), ogen_element({t, i}));
        }
    return out;
}

inline void stabilizer(const SuiteParams& p, SuiteReport& r) {
    r.parameters = {{"depth", p.depth}};
    for (const auto& [name, g] : nine_generators()) {
        ++r.checked;
        if (auto t = preserves_Z(g, p.depth)) r.fail({{"generator", name}, {"address", "." + t->digits}});
    }
    Element y0 = elementary(3, 0);
    for (const auto& [name, g] : {std::pair<std::string, Element>{"y0", y0}, {"y0^2", power(y0, 2)}}) {
        ++r.checked;
        auto t = preserves_Z(g, p.depth);
        if (!t) r.fail({{"element", name}, {"expected", "a counterexample"}});
        else r.notes[name] = "." + t->digits;
    }
}

inline void fixedpoints(const SuiteParams&, SuiteReport& r) {
    r.parameters = {{"k", Json::array({2, 3, 4, 5})}};
    for (int k = 2; k <= 5; ++k) {
        ++r.checked;
        // letters are the generators of F_k itself here
        auto word = parse_word("y0 y" + std::to_string(k - 1) + " y" + std::to_string(k) + "^-1", k);
        auto fix = fixed_points(eval_word(word));
        if (!fix.empty()) {
            Json pts = Json::array();
            for (const auto& x : fix.points) pts.push_back(format_rational(x));
            r.fail({{"k", k}, {"fixed_points", pts}});
        }
    }
}

inline void chr(const SuiteParams& p, SuiteReport& r) {
    r.parameters = {{"max_splits", p.max_splits}, {"seed", p.seed}};
    for (const auto& g : enumerate_elements_upto(3, p.max_splits)) {
        ++r.checked;
        Rational v = chr_value(g, 2);
        bool oriented = is_oriented(g);
        if (v != (oriented ? 2 : 0)) r.fail({{"element", element_to_json(g)}, {"chr2", format_rational(v)}});
    }
    std::mt19937_64 rng(p.seed);
    std::vector<Element> sample;
    for (int i = 0; i < 12; ++i) sample.push_back(eval_word(random_word(rng, 3, 4, 3)));
    for (long long q : {2, 3}) {
        double lambda = gram_min_eigenvalue(sample, q);
        r.notes["gram_min_eigenvalue_Q" + std::to_string(q) + " (float)"] = lambda;
        if (lambda < -1e-8) r.fail({{"Q", q}, {"gram_min_eigenvalue", lambda}});
    }
}

inline void enumeration(const SuiteParams& p, SuiteReport& r) {
    r.parameters = {{"k", p.k}, {"max_splits", p.max_splits}};
    Json counts = Json::array();
    for (std::size_t m = 0; m <= p.max_splits; ++m) {
        ++r.checked;
        auto n = enumerate_trees(p.k, m).size();
        counts.push_back(n);
        if (BigInt(n) != fuss_catalan(p.k, m)) r.fail({{"m", m}, {"count", n}, {"expected", fuss_catalan(p.k, m).str()}});
    }
    r.notes["counts"] = counts;
}

inline void coset(const SuiteParams& p, SuiteReport& r) {
    r.parameters = {{"max_splits", p.max_splits}};
    for (const auto& g : enumerate_elements_upto(3, p.max_splits)) {
        if (is_oriented(g)) continue;
        ++r.checked;
        auto c = coset_normalize(g);
        bool even = true;
        for (const auto& l : normal_form(c.h).letters) even = even && l.index % 2 == 0;
        bool ok = is_positive(c.h) && even && !is_oriented(c.h) && is_oriented(c.f1) && is_oriented(c.f2) &&
                  multiply(multiply(c.f1, g), c.f2) == c.h;
        if (!ok) r.fail({{"element", element_to_json(g)}});
    }
}

}  // namespace suites

inline const std::map<std::string, std::function<void(const SuiteParams&, SuiteReport&)>>& suite_table() {
    static const std::map<std::string, std::function<void(const SuiteParams&, SuiteReport&)>> table{
        {"prop1", suites::prop1},
        {"relations", suites::relations},
        {"decompose", [](const SuiteParams& p, SuiteReport& r) { suites::decompose_suite(p, r); }},
        {"gk", suites::gk},
        {"stabilizer", suites::stabilizer},
        {"fixedpoints", suites::fixedpoints},
        {"chr", suites::chr},
        {"enumeration", suites::enumeration},
        {"coset", suites::coset},
    };
    return table;
}

inline SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
    auto it = suite_table().find(name);
    if (it == suite_table().end()) throw Error("unknown suite '" + name + "'");
    SuiteReport r;
    r.suite = name;
    auto start = std::chrono::steady_clock::now();
    it->second(params, r);
    r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace thompson
