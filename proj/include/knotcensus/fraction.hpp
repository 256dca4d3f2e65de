#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace knotcensus {

using Int = boost::multiprecision::cpp_int;

// Reduced rational p/q with the sign carried by the numerator and q >= 0.
// q == 0 encodes the infinity tangle, stored canonically as 1/0; the zero
// tangle is 0/1.
struct Fraction {
    Int p = 0;
    Int q = 1;

    Fraction() = default;

    Fraction(Int num, Int den) : p(std::move(num)), q(std::move(den)) {
        if (q == 0) {
            if (p == 0) throw std::invalid_argument("0/0 is not a fraction");
            p = 1;
            return;
        }
        if (q < 0) {
            p = -p;
            q = -q;
        }
        Int g = gcd(p, q);
        if (g > 1) {
            p /= g;
            q /= g;
        }
    }

    explicit Fraction(long long n) : p(n), q(1) {}

    bool is_infinity() const { return q == 0; }
    bool is_zero() const { return p == 0; }
    bool is_integral() const { return q == 1; }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.p == b.p && a.q == b.q;
    }

    // Total order by value; infinity compares greater than every finite
    // fraction. Valid because q >= 0 and 1/0 is the only q = 0 form.
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
        Int lhs = a.p * b.q;
        Int rhs = b.p * a.q;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        if (a.is_infinity() || b.is_infinity())
            throw std::invalid_argument("cannot add an infinite fraction");
        return Fraction(a.p * b.q + b.p * a.q, a.q * b.q);
    }

    friend Fraction operator-(const Fraction& a, const Fraction& b) {
        if (a.is_infinity() || b.is_infinity())
            throw std::invalid_argument("cannot subtract an infinite fraction");
        return Fraction(a.p * b.q - b.p * a.q, a.q * b.q);
    }

    // Representative of the fraction mod 1 in [0, 1).
    Fraction mod1() const {
        if (is_infinity())
            throw std::invalid_argument("the infinity tangle has no residue mod 1");
        Int r = p % q;
        if (r < 0) r += q;
        return Fraction(r, q);
    }

    std::string str() const { return p.str() + "/" + q.str(); }
};

namespace detail {

inline bool is_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

}  // namespace detail

// Accepts "p/q" or a bare integer "p"; whitespace around tokens is ignored.
inline Fraction parse_fraction(std::string_view text) {
    std::string_view num = detail::trim(text);
    std::string_view den = "1";
    if (std::size_t slash = num.find('/'); slash != std::string_view::npos) {
        den = detail::trim(num.substr(slash + 1));
        num = detail::trim(num.substr(0, slash));
    }
    if (!detail::is_integer_token(num) || !detail::is_integer_token(den))
        throw std::invalid_argument("bad fraction '" + std::string(text) + "', expected p/q");
    return Fraction(Int(std::string(num)), Int(std::string(den)));
}

}  // namespace knotcensus
