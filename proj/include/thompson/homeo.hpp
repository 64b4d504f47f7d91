#pragma once

/**
 * @file homeo.hpp
 * @brief Exact piecewise-linear semantics of F_k elements.
 *
 * Leaf i of the top tree is the standard k-adic interval of its address;
 * the element maps it affinely onto the interval of leaf i of the bottom
 * tree. All arithmetic is exact.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "thompson/element.hpp"

namespace thompson {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string format_rational(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + s + "'");
    return Rational(BigInt(s.substr(0, slash)), den);
}

inline Rational power_of(int base, long long e) {
    BigInt p = boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e < 0 ? -e : e));
    return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

/// Value of the k-adic expansion .d1d2...dn.
inline Rational rational_of(const Address& digits, int arity) {
    BigInt num = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        int d = digits[i];
        if (d >= arity) throw InvalidDigit("digit " + std::to_string(d) + " not below arity " + std::to_string(arity));
        num = num * arity + d;
    }
    return Rational(num, boost::multiprecision::pow(BigInt(arity), static_cast<unsigned>(digits.size())));
}

/// Increasing PL homeomorphism of [0,1] with k-adic breakpoints and slopes k^n.
class PLMap {
public:
    /// Identity map.
    explicit PLMap(int arity = 2) : arity_(arity), breaks_{0, 1}, values_{0, 1}, log_slopes_{0} {}

    explicit PLMap(const Element& g) : arity_(g.arity()) {
        auto plus = g.plus().leaf_addresses();
        auto minus = g.minus().leaf_addresses();
        for (std::size_t i = 0; i < plus.size(); ++i) {
            long long slope = static_cast<long long>(plus[i].size()) - static_cast<long long>(minus[i].size());
            Rational b = rational_of(plus[i], arity_);
            Rational v = rational_of(minus[i], arity_);
            if (!log_slopes_.empty() && log_slopes_.back() == slope) continue;
            breaks_.push_back(b);
            values_.push_back(v);
            log_slopes_.push_back(slope);
        }
        breaks_.push_back(1);
        values_.push_back(1);
    }

    int arity() const noexcept { return arity_; }
    const std::vector<Rational>& breakpoints() const noexcept { return breaks_; }
    const std::vector<Rational>& values() const noexcept { return values_; }
    /// Base-arity logarithm of each segment slope.
    const std::vector<long long>& log_slopes() const noexcept { return log_slopes_; }
    std::size_t segments() const noexcept { return log_slopes_.size(); }

    Rational operator()(const Rational& x) const {
        if (x < 0 || x > 1) throw Error("point outside [0,1]");
        std::size_t s = segment_of(x);
        return values_[s] + (x - breaks_[s]) * power_of(arity_, log_slopes_[s]);
    }

    friend bool operator==(const PLMap&, const PLMap&) = default;

private:
    std::size_t segment_of(const Rational& x) const {
        auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
        std::size_t s = static_cast<std::size_t>(it - breaks_.begin());
        if (s == 0) return 0;
        return std::min(s - 1, log_slopes_.size() - 1);
    }

    int arity_;
    std::vector<Rational> breaks_;
    std::vector<Rational> values_;
    std::vector<long long> log_slopes_;
};

inline PLMap to_plmap(const Element& g) { return PLMap(g); }

/// Image of the digit string under g: bottom-leaf address followed by the unread suffix.
inline Address apply_digits(const Element& g, const Address& t) {
    auto plus = g.plus().leaf_addresses();
    auto minus = g.minus().leaf_addresses();
    for (std::size_t i = 0; i < plus.size(); ++i) {
        if (plus[i].is_prefix_of(t)) return Address(minus[i].digits + t.digits.substr(plus[i].size()));
        if (t.is_prefix_of(plus[i])) {
            std::size_t need = plus[i].size();
            for (std::size_t j = i + 1; j < plus.size() && t.is_prefix_of(plus[j]); ++j)
                need = std::max(need, plus[j].size());
            throw InsufficientDepth(need);
        }
    }
    throw InvalidDigit("digit string " + t.dotted() + " is not over the tree alphabet");
}

inline long long log_slope_at_0(const Element& g) { return to_plmap(g).log_slopes().front(); }
inline long long log_slope_at_1(const Element& g) { return to_plmap(g).log_slopes().back(); }

struct ClosedInterval {
    Rational lo;
    Rational hi;
    friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

/// Fixed points of g inside (0,1): isolated crossings and maximal fixed intervals.
struct FixedSet {
    std::vector<Rational> points;
    std::vector<ClosedInterval> intervals;

    bool empty() const { return points.empty() && intervals.empty(); }
};

inline FixedSet fixed_points(const Element& g) {
    PLMap f(g);
    FixedSet out;
    const auto& b = f.breakpoints();
    const auto& v = f.values();
    auto add_point = [&](const Rational& x) {
        if (x <= 0 || x >= 1) return;
        for (const auto& iv : out.intervals)
            if (iv.lo <= x && x <= iv.hi) return;
        if (out.points.empty() || out.points.back() != x) out.points.push_back(x);
    };
    for (std::size_t s = 0; s < f.segments(); ++s) {
        const Rational& a = b[s];
        const Rational& c = v[s];
        if (f.log_slopes()[s] == 0) {
            if (a == c) {
                if (!out.intervals.empty() && out.intervals.back().hi == a) {
                    out.intervals.back().hi = b[s + 1];
                } else {
                    if (!out.points.empty() && out.points.back() == a) out.points.pop_back();
                    out.intervals.push_back({a, b[s + 1]});
                }
            }
            continue;
        }
        Rational slope = power_of(f.arity(), f.log_slopes()[s]);
        Rational x = (c - a * slope) / (1 - slope);
        if (a <= x && x <= b[s + 1]) add_point(x);
    }
    return out;
}

inline bool stabilizes_point(const Element& g, const Rational& x) {
    if (x <= 0 || x >= 1) throw Error("point must lie in (0,1)");
    return to_plmap(g)(x) == x;
}

}  // namespace thompson
