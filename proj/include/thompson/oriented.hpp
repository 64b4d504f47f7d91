#pragma once

/**
 * @file oriented.hpp
 * @brief The oriented subgroup of F_3: weights, membership, the invariant
 *        set Z, and decomposition over the u/v/w generators.
 *
 * u_i = y_{2i+1}^2,  v_i = y_{2i} y_{2i+2},  w_i = y_{2i} y_{2i+3}.
 */

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <set>
#include <tuple>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "thompson/gamma.hpp"

namespace thompson {

/// Weight of a ternary path: number of 1s, plus 2s read while an even number
/// of 1s has been seen, plus 0s read while an odd number has been seen.
inline long long weight_of_path(const Address& p) {
    long long ones = 0, weight = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        int d = p[i];
        if (d > 2) throw InvalidDigit("ternary path digit out of range in " + p.dotted());
        if (d == 1) {
            ++ones;
            ++weight;
        } else if (d == 2 && ones % 2 == 0) {
            ++weight;
        } else if (d == 0 && ones % 2 == 1) {
            ++weight;
        }
    }
    return weight;
}

/// Number of middle edges on the path.
inline long long d_of_path(const Address& p) {
    long long ones = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        int d = p[i];
        if (d > 2) throw InvalidDigit("ternary path digit out of range in " + p.dotted());
        ones += d == 1;
    }
    return ones;
}

struct LeafWeights {
    std::vector<long long> plus;
    std::vector<long long> minus;
};

inline std::vector<long long> tree_weights(const KTree& t) {
    std::vector<long long> out;
    for (const auto& a : t.leaf_addresses()) out.push_back(weight_of_path(a));
    return out;
}

inline LeafWeights leaf_weights(const Element& g) {
    if (g.arity() != 3) throw UnsupportedArity(g.arity());
    return {tree_weights(g.plus()), tree_weights(g.minus())};
}

/// c_+(i) and c_-(i) agree mod 2 for every leaf.
inline bool weight_parity_criterion(const KTree& plus, const KTree& minus) {
    auto a = tree_weights(plus);
    auto b = tree_weights(minus);
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((a[i] - b[i]) % 2 != 0) return false;
    return true;
}

/// Membership in the oriented subgroup (F_3, or F_2 through iota).
inline bool is_oriented(const Element& g) {
    Element t = as_ternary(g);
    bool by_graph = is_bipartite(gamma_of(t));
    bool by_weights = weight_parity_criterion(t.plus(), t.minus());
    if (by_graph != by_weights)
        throw InconsistentCriteria("Γ-bipartiteness and weight parity disagree on diagram " +
                                   t.plus().shape_string() + "/" + t.minus().shape_string());
    return by_graph;
}

/// Even number of 1s and even weight.
inline bool in_Z(const Address& t) { return d_of_path(t) % 2 == 0 && weight_of_path(t) % 2 == 0; }

/// First digit string, shortest first and lexicographic within a length, of
/// length <= depth whose Z-membership differs from that of its image.
/// Strings too short to select a leaf of the top tree are skipped.
inline std::optional<Address> preserves_Z(const Element& g, std::size_t depth) {
    if (g.arity() != 3) throw UnsupportedArity(g.arity());
    std::vector<Address> level{Address{}};
    for (std::size_t len = 0; len <= depth; ++len) {
        for (const auto& t : level) {
            try {
                if (in_Z(t) != in_Z(apply_digits(g, t))) return t;
            } catch (const InsufficientDepth&) {
            }
        }
        if (len == depth) break;
        std::vector<Address> next;
        next.reserve(level.size() * 3);
        for (const auto& t : level)
            for (int d = 0; d < 3; ++d) next.push_back(t.child(d));
        level = std::move(next);
    }
    return std::nullopt;
}

enum class OTag { u, v, w };

inline char otag_char(OTag t) { return t == OTag::u ? 'u' : t == OTag::v ? 'v' : 'w'; }

struct OrientedGen {
    OTag tag = OTag::u;
    std::size_t index = 0;

    friend bool operator==(const OrientedGen&, const OrientedGen&) = default;
    friend auto operator<=>(const OrientedGen&, const OrientedGen&) = default;
};

struct OrientedLetter {
    OrientedGen gen;
    long long exponent = 1;

    friend bool operator==(const OrientedLetter&, const OrientedLetter&) = default;
};

struct OrientedWord {
    std::vector<OrientedLetter> letters;

    bool empty() const noexcept { return letters.empty(); }
    std::size_t max_index() const {
        std::size_t m = 0;
        for (const auto& l : letters) m = std::max(m, l.gen.index);
        return m;
    }

    friend bool operator==(const OrientedWord&, const OrientedWord&) = default;
};

/// Appends with merging of equal neighbours.
inline void push_letter(OrientedWord& w, OrientedLetter l) {
    if (l.exponent == 0) return;
    if (!w.letters.empty() && w.letters.back().gen == l.gen) {
        w.letters.back().exponent += l.exponent;
        if (w.letters.back().exponent == 0) w.letters.pop_back();
        return;
    }
    w.letters.push_back(l);
}

inline OrientedWord concat(const OrientedWord& a, const OrientedWord& b) {
    OrientedWord out = a;
    for (const auto& l : b.letters) push_letter(out, l);
    return out;
}

inline OrientedWord inverse_word(const OrientedWord& w) {
    OrientedWord out;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) push_letter(out, {it->gen, -it->exponent});
    return out;
}

inline std::string to_string(const OrientedWord& w) {
    if (w.letters.empty()) return "id";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) os << ' ';
        os << otag_char(w.letters[i].gen.tag) << w.letters[i].gen.index;
        if (w.letters[i].exponent != 1) os << '^' << w.letters[i].exponent;
    }
    return os.str();
}

inline OrientedWord parse_oriented_word(const std::string& text) {
    OrientedWord w;
    std::istringstream is(text);
    std::string tok;
    std::size_t offset = 0;
    while (is >> tok) {
        offset = text.find(tok, offset);
        if (tok == "id") continue;
        OTag tag;
        if (tok[0] == 'u') tag = OTag::u;
        else if (tok[0] == 'v') tag = OTag::v;
        else if (tok[0] == 'w') tag = OTag::w;
        else throw ParseError("unknown oriented generator '" + tok + "'", offset);
        auto caret = tok.find('^');
        std::string idx = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        if (idx.empty() || idx.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("malformed generator index", offset + 1);
        long long e = 1;
        if (caret != std::string::npos) {
            std::string es = tok.substr(caret + 1);
            std::size_t used = 0;
            try {
                e = std::stoll(es, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (es.empty() || used != es.size() || e == 0) throw ParseError("malformed exponent", offset + caret + 1);
        }
        push_letter(w, {{tag, std::stoull(idx)}, e});
        offset += tok.size();
    }
    return w;
}

inline Element ogen_element(const OrientedGen& g) {
    const std::size_t i = g.index;
    switch (g.tag) {
        case OTag::u: return power(elementary(3, 2 * i + 1), 2);
        case OTag::v: return multiply(elementary(3, 2 * i), elementary(3, 2 * i + 2));
        default: return multiply(elementary(3, 2 * i), elementary(3, 2 * i + 3));
    }
}

inline Element eval_oriented(const OrientedWord& w) {
    Element acc = Element::identity(3);
    for (const auto& l : w.letters) acc = multiply(acc, power(ogen_element(l.gen), l.exponent));
    return acc;
}

struct PositiveSplit {
    Element p;
    Element q;
    std::size_t expansions = 0;
};

/// g = p * q^{-1} with p, q positive and oriented.
///
/// Opposing carets are inserted until the Γ colouring reads +,-,+,-,...; both
/// trees are then cut against the right comb with the same leaf count. An
/// expansion at the even leaf 2j puts a vertex of the opposite colour right
/// after vertex j, so one expansion per equal-coloured neighbour pair suffices.
inline PositiveSplit split_positive(const Element& g, std::size_t max_expansions = 8) {
    if (g.arity() != 3) throw UnsupportedArity(g.arity());
    if (!is_oriented(g)) throw PreconditionViolated("split_positive needs an oriented element");
    KTree plus = g.plus(), minus = g.minus();
    std::size_t expansions = 0;
    for (std::size_t j = 0;; ++j) {
        auto colours = two_colouring(gamma_of_trees(plus, minus));
        if (!colours) throw InconsistentCriteria("opposing carets changed bipartiteness");
        if (j + 1 >= colours->size()) break;
        if ((*colours)[j] != (*colours)[j + 1]) continue;
        if (++expansions > max_expansions)
            throw ExpansionBoundExceeded("alternating colouring needs more than " + std::to_string(max_expansions) +
                                         " expansions");
        plus = plus.expand_at(2 * j);
        minus = minus.expand_at(2 * j);
    }
    KTree comb = right_comb(3, plus.internal_count());
    return {Element(plus, comb), Element(minus, comb), expansions};
}

namespace detail {

inline std::size_t max_letter_index(const GenWord& w) {
    std::size_t m = 0;
    for (const auto& l : w.letters) m = std::max(m, l.index);
    return m;
}

// Peels generators off the right of a positive oriented element; the result
// lists them leftmost first.
inline OrientedWord decompose_positive(Element p) {
    std::vector<OrientedGen> peeled;
    while (!p.is_identity()) {
        auto nf = normal_form(p);
        const long long len = word_length(nf);
        const std::size_t top = max_letter_index(nf) / 2 + 2;
        bool found = false;
        for (std::size_t i = 0; i <= top && !found; ++i) {
            for (OTag tag : {OTag::v, OTag::u, OTag::w}) {
                OrientedGen gen{tag, i};
                Element rest = multiply(p, ogen_element(gen).inverse());
                if (!is_positive(rest) || word_length(normal_form(rest)) >= len || !is_oriented(rest)) continue;
                peeled.push_back(gen);
                p = rest;
                found = true;
                break;
            }
        }
        if (!found)
            throw NoConfigurationFound("no generator peels off positive oriented element " + to_string(nf));
    }
    OrientedWord w;
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) push_letter(w, {*it, 1});
    return w;
}

}  // namespace detail

/// Word in u_i, v_i, w_i evaluating to the oriented element g.
inline OrientedWord decompose(const Element& g, std::size_t max_expansions = 8) {
    auto split = split_positive(g, max_expansions);
    return concat(detail::decompose_positive(split.p), inverse_word(detail::decompose_positive(split.q)));
}

/// Rewrites every generator of index >= 3 through x_n = x_0^{-1} x_{n-2} x_0.
inline OrientedWord reduce_index(const OrientedWord& w) {
    OrientedWord out;
    auto emit = [&](auto&& self, OrientedGen g, long long e) -> void {
        if (g.index <= 2) {
            push_letter(out, {g, e});
            return;
        }
        OrientedGen base{g.tag, 0};
        push_letter(out, {base, -1});
        self(self, OrientedGen{g.tag, g.index - 2}, e);
        push_letter(out, {base, 1});
    };
    for (const auto& l : w.letters) emit(emit, l.gen, l.exponent);
    return out;
}

struct CosetRepresentative {
    Element h;
    Element f1;
    Element f2;
    OrientedWord f1_word;
    OrientedWord f2_word;
};

namespace detail {

// y_{2k} y_{2k+3}^{-1}
inline OrientedWord odd_step(std::size_t k) {
    OrientedWord w;
    push_letter(w, {{OTag::w, k}, 1});
    push_letter(w, {{OTag::u, k + 1}, -1});
    return w;
}

struct CosetNode {
    Element h;
    OrientedWord f1, f2;
    std::size_t depth = 0;
};

inline std::pair<long long, long long> odd_weight(const GenWord& nf) {
    long long odd = 0, sum = 0;
    for (const auto& l : nf.letters) {
        if (l.index % 2) odd += std::llabs(l.exponent);
        sum += static_cast<long long>(l.index) * std::llabs(l.exponent);
    }
    return {odd, sum};
}

}  // namespace detail

/// Positive h = f1 g f2 with f1, f2 oriented and only even letters in the
/// normal form of h.
///
/// Negative letters are killed on the right by u_i or v_i. The positive word
/// is then rewritten by single-letter moves that keep it positive:
///
///     left  y_j -> y_{j-3}  (j odd),   y_j -> y_{j+3}  (j even)
///     right y_j -> y_{j-1}  (j odd),   y_j -> y_{j+1}  (j even)
///
/// each realized by multiplying with y_{2k} y_{2k+3}^{-1} = w_k u_{k+1}^{-1} or
/// its inverse, together with conjugation by v_0. Moves are searched best
/// first on depth + 3 * (odd letters).
inline CosetRepresentative coset_normalize(const Element& g, std::size_t max_nodes = 20000) {
    if (g.arity() != 3) throw UnsupportedArity(g.arity());
    if (is_oriented(g)) throw PreconditionViolated("coset_normalize needs a non-oriented element");

    detail::CosetNode start{g, {}, {}, 0};
    for (std::size_t guard = 0;; ++guard) {
        auto nf = normal_form(start.h);
        if (nf.letters.empty() || nf.letters.back().exponent > 0) break;
        if (guard > 4 * static_cast<std::size_t>(word_length(normal_form(g))) + 8)
            throw NoConfigurationFound("negative letters did not clear for " + to_string(normal_form(g)));
        const std::size_t i = nf.letters.back().index;
        OrientedGen gen = i % 2 ? OrientedGen{OTag::u, (i - 1) / 2} : OrientedGen{OTag::v, i / 2};
        start.h = multiply(start.h, ogen_element(gen));
        push_letter(start.f2, {gen, 1});
    }

    std::size_t cap = detail::max_letter_index(normal_form(start.h)) + 16;
    using Key = std::tuple<long long, long long, std::string>;
    std::map<Key, detail::CosetNode> open;
    std::set<std::string> seen;
    auto key_of = [](const detail::CosetNode& n) {
        auto nf = normal_form(n.h);
        auto [odd, sum] = detail::odd_weight(nf);
        return Key{static_cast<long long>(n.depth) + 3 * odd, sum, to_string(nf)};
    };
    auto offer = [&](detail::CosetNode n) {
        if (!is_positive(n.h)) return;
        auto key = key_of(n);
        if (seen.count(std::get<2>(key))) return;
        if (detail::max_letter_index(normal_form(n.h)) > cap) return;
        open.emplace(std::move(key), std::move(n));
    };
    open.emplace(key_of(start), start);

    const OrientedGen v0{OTag::v, 0};
    const Element v0e = ogen_element(v0);
    std::size_t expanded = 0;
    while (!open.empty() && expanded < max_nodes) {
        auto node = open.begin()->second;
        auto label = std::get<2>(open.begin()->first);
        open.erase(open.begin());
        if (!seen.insert(label).second) continue;
        ++expanded;
        auto nf = normal_form(node.h);
        if (detail::odd_weight(nf).first == 0) {
            CosetRepresentative out{node.h, eval_oriented(node.f1), eval_oriented(node.f2), node.f1, node.f2};
            if (!(multiply(multiply(out.f1, g), out.f2) == out.h) || is_oriented(out.h))
                throw InconsistentCriteria("coset representative failed its own check");
            return out;
        }
        const std::size_t top = detail::max_letter_index(nf);
        for (std::size_t j = 0; j <= top + 3; ++j) {
            Element yj = elementary(3, j);
            if ((j % 2 == 0 || j >= 3) && is_positive(multiply(yj.inverse(), node.h))) {
                OrientedWord x = j % 2 ? detail::odd_step((j - 3) / 2) : inverse_word(detail::odd_step(j / 2));
                detail::CosetNode next{multiply(eval_oriented(x), node.h), concat(x, node.f1), node.f2, node.depth + 1};
                offer(std::move(next));
            }
            if (is_positive(multiply(node.h, yj.inverse()))) {
                OrientedWord x = j % 2 ? detail::odd_step((j - 1) / 2) : inverse_word(detail::odd_step(j / 2));
                detail::CosetNode next{multiply(node.h, eval_oriented(x)), node.f1, concat(node.f2, x), node.depth + 1};
                offer(std::move(next));
            }
        }
        OrientedWord left, right;
        push_letter(left, {v0, -1});
        push_letter(right, {v0, 1});
        offer({conjugate(node.h, v0e), concat(left, node.f1), concat(node.f2, right), node.depth + 1});
    }
    throw NoConfigurationFound("no even positive representative found for " + to_string(normal_form(g)) +
                               " within " + std::to_string(max_nodes) + " nodes");
}

}  // namespace thompson
