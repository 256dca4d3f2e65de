#pragma once

#include "fraction.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotcensus {

enum class Axis { horizontal, vertical };

struct TwistMove {
    Axis axis;
    Int count;
};

// Twist instructions applied left to right. The empty word is the 0-tangle.
// A word's first move fixes the seed diagram it twists: horizontal-leading
// words start from the 0-tangle, vertical-leading words from the infinity
// tangle. With that seed, h<k> words build the integer tangles and v<k>
// words build the 1/k tangles, and bottom twists fix the 0-tangle as they
// should.
struct TwistWord {
    std::vector<TwistMove> moves;
};

// Evaluates the continued-fraction value of a twist word. A horizontal move
// of count k acts by f -> f + k, a vertical move by f -> 1/(k + 1/f), with
// 1/0 = infinity and 1/infinity = 0. On a reduced pair (p, q) these are the
// unimodular updates p += k q and q += k p, so the result needs no further
// reduction.
inline Fraction fraction_of(const TwistWord& word) {
    if (word.moves.empty()) return Fraction(0, 1);
    Int p = 0, q = 1;
    if (word.moves.front().axis == Axis::vertical) {
        p = 1;
        q = 0;
    }
    for (const TwistMove& mv : word.moves) {
        if (mv.axis == Axis::horizontal)
            p += mv.count * q;
        else
            q += mv.count * p;
    }
    return Fraction(p, q);
}

inline bool are_equivalent(const TwistWord& a, const TwistWord& b) {
    return fraction_of(a) == fraction_of(b);
}

struct TangleSum {
    std::optional<Fraction> sum;  // present only when the sum is rational
    bool is_rational = false;
};

// Side-by-side tangle addition. The sum is a rational tangle exactly when
// one summand is integral; otherwise only the flag is meaningful.
inline TangleSum add_tangles(const Fraction& f1, const Fraction& f2) {
    if (f1.is_infinity() || f2.is_infinity())
        throw std::invalid_argument("infinity tangle addition undefined here");
    TangleSum out;
    out.is_rational = f1.is_integral() || f2.is_integral();
    if (out.is_rational) out.sum = f1 + f2;
    return out;
}

// How the two strands pair up the four boundary points NW, NE, SW, SE.
enum class EndpointPairing {
    zero,      // NW-NE and SW-SE
    infinity,  // NW-SW and NE-SE
    one,       // NW-SE and NE-SW
};

inline const char* to_string(EndpointPairing p) {
    switch (p) {
        case EndpointPairing::zero: return "zero";
        case EndpointPairing::infinity: return "infinity";
        default: return "one";
    }
}

// Parity rule: the pairing of a rational tangle depends only on p, q mod 2.
inline EndpointPairing endpoint_pairing(const Fraction& f) {
    if (f.p % 2 == 0) return EndpointPairing::zero;
    if (f.q % 2 == 0) return EndpointPairing::infinity;
    return EndpointPairing::one;
}

inline std::string to_string(const TwistWord& word) {
    std::string out;
    for (const TwistMove& mv : word.moves) {
        if (!out.empty()) out += ' ';
        out += (mv.axis == Axis::horizontal) ? 'h' : 'v';
        out += mv.count.str();
    }
    return out;
}

// Accepts the space-separated form produced by to_string, e.g. "v7 h2 v-3".
inline TwistWord parse_word(const std::string& text) {
    TwistWord word;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        Axis axis;
        if (tok[0] == 'h')
            axis = Axis::horizontal;
        else if (tok[0] == 'v')
            axis = Axis::vertical;
        else
            throw std::invalid_argument("bad twist move '" + tok + "', expected h<count> or v<count>");
        std::string count = tok.substr(1);
        if (!detail::is_integer_token(count))
            throw std::invalid_argument("bad twist count in '" + tok + "'");
        word.moves.push_back({axis, Int(count)});
    }
    return word;
}

}  // namespace knotcensus
