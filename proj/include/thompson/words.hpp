#pragma once

/**
 * @file words.hpp
 * @brief Words in the infinite generating set of F_k and their normal form.
 *
 * The presentation is y_n y_l = y_l y_{n+k-1} for l < n. The normal form is
 *
 *     y_{i1}^{a1} ... y_{in}^{an} y_{jm}^{-bm} ... y_{j1}^{-b1}
 *
 * with i1 < ... < in, j1 < ... < jm, and whenever y_i and y_i^{-1} both
 * occur some y_j^{+-1} with i < j < i+k occurs too.
 */

#include <cctype>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "thompson/element.hpp"

namespace thompson {

enum class Alphabet { y, x, z };

inline char alphabet_char(Alphabet a) {
    switch (a) {
        case Alphabet::x: return 'x';
        case Alphabet::z: return 'z';
        default: return 'y';
    }
}

struct Letter {
    std::size_t index = 0;
    long long exponent = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in generators of F_arity. `alphabet` only affects rendering.
struct GenWord {
    int arity = 3;
    std::vector<Letter> letters;
    Alphabet alphabet = Alphabet::y;

    bool empty() const noexcept { return letters.empty(); }

    /// True when no two adjacent letters share an index.
    bool is_merged() const {
        for (std::size_t i = 1; i < letters.size(); ++i)
            if (letters[i].index == letters[i - 1].index) return false;
        return true;
    }

    friend bool operator==(const GenWord&, const GenWord&) = default;
};

inline GenWord make_word(int arity, std::vector<Letter> letters, Alphabet alphabet = Alphabet::y) {
    GenWord w{arity, {}, alphabet};
    for (const auto& l : letters) {
        if (l.exponent == 0) continue;
        if (!w.letters.empty() && w.letters.back().index == l.index) {
            w.letters.back().exponent += l.exponent;
            if (w.letters.back().exponent == 0) w.letters.pop_back();
        } else {
            w.letters.push_back(l);
        }
    }
    return w;
}

inline GenWord concat(const GenWord& a, const GenWord& b) {
    if (a.arity != b.arity) throw ArityMismatch(a.arity, b.arity);
    auto letters = a.letters;
    letters.insert(letters.end(), b.letters.begin(), b.letters.end());
    return make_word(a.arity, letters, a.alphabet);
}

inline GenWord inverse_word(const GenWord& w) {
    GenWord out{w.arity, {}, w.alphabet};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back({it->index, -it->exponent});
    return out;
}

inline long long word_length(const GenWord& w) {
    long long n = 0;
    for (const auto& l : w.letters) n += std::llabs(l.exponent);
    return n;
}

inline std::string to_string(const GenWord& w) {
    if (w.letters.empty()) return "id";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) os << ' ';
        os << alphabet_char(w.alphabet) << w.letters[i].index;
        if (w.letters[i].exponent != 1) os << '^' << w.letters[i].exponent;
    }
    return os.str();
}

/// Tokens `y<n>`, `x<n>`, `z<n>` with optional `^<int>`, or `id`.
/// y-words live in F_k, x-words in F_2 and z-words in F_{2k-1}.
inline GenWord parse_word(const std::string& text, int k) {
    GenWord w{k, {}, Alphabet::y};
    bool seen_letter = false;
    std::size_t pos = 0;
    std::vector<Letter> letters;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string tok = text.substr(start, pos - start);
        if (tok == "id") continue;
        char a = tok[0];
        Alphabet alpha;
        int arity;
        if (a == 'y') {
            alpha = Alphabet::y;
            arity = k;
        } else if (a == 'x') {
            alpha = Alphabet::x;
            arity = 2;
        } else if (a == 'z') {
            alpha = Alphabet::z;
            arity = 2 * k - 1;
        } else {
            throw ParseError("unknown generator '" + tok + "'", start);
        }
        if (seen_letter && alpha != w.alphabet) throw ParseError("mixed alphabets in one word", start);
        w.alphabet = alpha;
        w.arity = arity;
        seen_letter = true;
        std::size_t i = 1;
        std::size_t digits_start = i;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
        if (i == digits_start) throw ParseError("missing generator index", start + i);
        std::size_t index = std::stoull(tok.substr(digits_start, i - digits_start));
        long long exponent = 1;
        if (i < tok.size()) {
            if (tok[i] != '^') throw ParseError("unexpected character", start + i);
            ++i;
            std::size_t exp_start = i;
            if (i < tok.size() && (tok[i] == '-' || tok[i] == '+')) ++i;
            std::size_t exp_digits = i;
            while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
            if (i == exp_digits || i != tok.size()) throw ParseError("malformed exponent", start + exp_start);
            exponent = std::stoll(tok.substr(exp_start));
            if (exponent == 0) throw ParseError("zero exponent", start + exp_start);
        }
        letters.push_back({index, exponent});
    }
    if (w.arity < 2) throw UnsupportedArity(w.arity);
    return make_word(w.arity, letters, w.alphabet);
}

/// The generator y_n of F_arity as a reduced tree pair.
inline Element elementary(int arity, std::size_t n) {
    std::size_t q = n / static_cast<std::size_t>(arity - 1);
    KTree plus = right_comb(arity, q + 1).expand_at(n);
    return Element(plus, right_comb(arity, q + 2));
}

inline Element eval_word(const GenWord& w) {
    Element acc = Element::identity(w.arity);
    for (const auto& l : w.letters) acc = multiply(acc, power(elementary(w.arity, l.index), l.exponent));
    return acc;
}

namespace detail {

// Letters of a positive word equal to (tree, right comb), leftmost first.
inline std::vector<std::size_t> positive_letters(const KTree& tree) {
    std::vector<std::size_t> reversed;
    KTree t = tree;
    for (;;) {
        std::size_t last = t.leaf_count() - 1;
        std::size_t pick = last;
        for (auto c : t.caret_positions())
            if (c + static_cast<std::size_t>(t.arity()) - 1 != last) pick = c;
        if (pick == last) break;  // only the right comb is left
        reversed.push_back(pick);
        t = t.collapse_caret(pick);
    }
    return {reversed.rbegin(), reversed.rend()};
}

// Sort a positive word with y_n y_l -> y_l y_{n+k-1} (l < n).
inline std::map<std::size_t, long long> sorted_exponents(std::vector<std::size_t> letters, int arity) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
            if (letters[i] > letters[i + 1]) {
                std::size_t n = letters[i];
                letters[i] = letters[i + 1];
                letters[i + 1] = n + static_cast<std::size_t>(arity - 1);
                changed = true;
            }
        }
    }
    std::map<std::size_t, long long> exps;
    for (auto l : letters) ++exps[l];
    return exps;
}

inline bool has_between(const std::map<std::size_t, long long>& m, std::size_t lo, std::size_t hi) {
    auto it = m.upper_bound(lo);
    return it != m.end() && it->first < hi;
}

inline std::map<std::size_t, long long> shifted_down(const std::map<std::size_t, long long>& m, std::size_t above,
                                                     std::size_t by) {
    std::map<std::size_t, long long> out;
    for (const auto& [i, e] : m) {
        if (e == 0) continue;
        out[i > above ? i - by : i] += e;
    }
    return out;
}

}  // namespace detail

/// Unique normal form of g.
inline GenWord normal_form(const Element& g) {
    const int k = g.arity();
    auto pos = detail::sorted_exponents(detail::positive_letters(g.plus()), k);
    auto neg = detail::sorted_exponents(detail::positive_letters(g.minus()), k);
    const auto km1 = static_cast<std::size_t>(k - 1);
    for (;;) {
        bool cancelled = false;
        for (const auto& [i, e] : pos) {
            auto it = neg.find(i);
            if (e <= 0 || it == neg.end() || it->second <= 0) continue;
            const std::size_t hi = i + static_cast<std::size_t>(k);
            if (detail::has_between(pos, i, hi) || detail::has_between(neg, i, hi)) continue;
            std::size_t idx = i;
            if (--pos[idx] == 0) pos.erase(idx);
            if (--neg[idx] == 0) neg.erase(idx);
            pos = detail::shifted_down(pos, idx, km1);
            neg = detail::shifted_down(neg, idx, km1);
            cancelled = true;
            break;
        }
        if (!cancelled) break;
    }
    GenWord w{k, {}, Alphabet::y};
    for (const auto& [i, e] : pos) w.letters.push_back({i, e});
    for (auto it = neg.rbegin(); it != neg.rend(); ++it) w.letters.push_back({it->first, -it->second});
    return w;
}

/// Shape constraints of a normal form, including the uniqueness condition.
inline bool is_normal_form_shaped(const GenWord& w) {
    std::size_t i = 0;
    std::map<std::size_t, long long> pos, neg;
    while (i < w.letters.size() && w.letters[i].exponent > 0) {
        if (i && w.letters[i].index <= w.letters[i - 1].index) return false;
        pos[w.letters[i].index] = w.letters[i].exponent;
        ++i;
    }
    std::size_t first_neg = i;
    for (; i < w.letters.size(); ++i) {
        if (w.letters[i].exponent >= 0) return false;
        if (i > first_neg && w.letters[i].index >= w.letters[i - 1].index) return false;
        neg[w.letters[i].index] = -w.letters[i].exponent;
    }
    for (const auto& [idx, e] : pos) {
        if (!neg.count(idx)) continue;
        std::size_t hi = idx + static_cast<std::size_t>(w.arity);
        if (!detail::has_between(pos, idx, hi) && !detail::has_between(neg, idx, hi)) return false;
    }
    return true;
}

inline int length_parity(const Element& g) { return static_cast<int>(word_length(normal_form(g)) % 2); }

/// Replace each y_i of the normal form of g by image(i) and evaluate.
template <class Image>
Element substitute(const Element& g, int target_arity, Image&& image) {
    Element acc = Element::identity(target_arity);
    for (const auto& l : normal_form(g).letters) acc = multiply(acc, power(image(l.index), l.exponent));
    return acc;
}

}  // namespace thompson
