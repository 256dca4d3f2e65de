#pragma once

#include "errors.hpp"
#include "tangle.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knotcensus {

// Cyclic left-to-right sum of rational tangles, recorded by its ordered
// fraction list. After normalize() every entry has q >= 2.
struct MontesinosLink {
    std::vector<Fraction> entries;

    friend bool operator==(const MontesinosLink& a, const MontesinosLink& b) {
        return a.entries == b.entries;
    }
};

// Absorbs integral entries into their right cyclic neighbor,
// (k, p/q) -> (k q + p)/q, until none remain. The fraction sum is
// preserved. A description with only integral entries does not name a
// tangle sum of the kind modeled here and is rejected.
inline MontesinosLink normalize(std::vector<Fraction> entries) {
    if (entries.empty()) throw std::invalid_argument("empty Montesinos description");
    bool any_non_integral = false;
    for (const Fraction& f : entries) {
        if (f.is_infinity())
            throw std::invalid_argument("infinity entry in Montesinos description");
        if (!f.is_integral()) any_non_integral = true;
    }
    if (!any_non_integral) throw std::invalid_argument("degenerate Montesinos description");

    for (;;) {
        std::size_t i = 0;
        while (i < entries.size() && !entries[i].is_integral()) ++i;
        if (i == entries.size()) break;
        std::size_t j = (i + 1) % entries.size();
        entries[j] = Fraction(entries[i].p * entries[j].q + entries[j].p, entries[j].q);
        entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(i));
    }
    return MontesinosLink{std::move(entries)};
}

// The one-parameter family: 2n+1 vertical tangles 1/7, 1/9, ..., 1/(4n+7).
inline MontesinosLink build_family(unsigned long long n) {
    if (n < 1) throw std::invalid_argument("family index must be at least 1");
    std::vector<Fraction> entries;
    entries.reserve(2 * n + 1);
    for (unsigned long long i = 1; i <= 2 * n + 1; ++i)
        entries.push_back(Fraction(Int(1), Int(2 * i + 5)));
    return MontesinosLink{std::move(entries)};
}

// Generalized family K(1/t_1, ..., 1/t_m): odd length at least 3, each t_i
// odd and greater than 6.
inline MontesinosLink build_generalized(const std::vector<long long>& t_list) {
    if (t_list.size() < 3) throw std::invalid_argument("fewer than three tangles");
    if (t_list.size() % 2 == 0) throw std::invalid_argument("even number of tangles");
    std::vector<Fraction> entries;
    entries.reserve(t_list.size());
    for (std::size_t i = 0; i < t_list.size(); ++i) {
        std::string name = "t_" + std::to_string(i + 1);
        if (t_list[i] % 2 == 0) throw std::invalid_argument(name + " even");
        if (t_list[i] <= 6) throw std::invalid_argument(name + " not greater than 6");
        entries.push_back(Fraction(Int(1), Int(t_list[i])));
    }
    return MontesinosLink{std::move(entries)};
}

// Number of link components: each tangle contributes its endpoint pairing,
// tangles are glued cyclically left to right (NE_i to NW_{i+1}, SE_i to
// SW_{i+1}), and the components are the cycles of the resulting graph.
inline std::size_t component_count(const MontesinosLink& m) {
    constexpr int NW = 0, NE = 1, SW = 2, SE = 3;
    const std::size_t n = m.entries.size();
    std::vector<std::size_t> parent(4 * n);
    for (std::size_t x = 0; x < parent.size(); ++x) parent[x] = x;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

    for (std::size_t i = 0; i < n; ++i) {
        switch (endpoint_pairing(m.entries[i])) {
            case EndpointPairing::zero:
                unite(4 * i + NW, 4 * i + NE);
                unite(4 * i + SW, 4 * i + SE);
                break;
            case EndpointPairing::infinity:
                unite(4 * i + NW, 4 * i + SW);
                unite(4 * i + NE, 4 * i + SE);
                break;
            case EndpointPairing::one:
                unite(4 * i + NW, 4 * i + SE);
                unite(4 * i + NE, 4 * i + SW);
                break;
        }
        unite(4 * i + NE, 4 * ((i + 1) % n) + NW);
        unite(4 * i + SE, 4 * ((i + 1) % n) + SW);
    }
    std::size_t cycles = 0;
    for (std::size_t x = 0; x < parent.size(); ++x)
        if (find(x) == x) ++cycles;
    return cycles;
}

// Diagram-level hyperbolicity check for links of vertical tangles: at least
// two twist regions, each with at least six crossings. A vertical tangle
// 1/t is one twist region with |t| crossings.
inline bool is_hyperbolic_witness(const MontesinosLink& m) {
    for (const Fraction& f : m.entries)
        if (f.p != 1 && f.p != -1)
            throw std::invalid_argument("witness applies to vertical-tangle diagrams only");
    if (m.entries.size() < 2) return false;
    for (const Fraction& f : m.entries)
        if (f.q < 6) return false;
    return true;
}

// True when every entry is 1/t with t positive, which makes the standard
// diagram alternating.
inline bool is_alternating_vertical(const MontesinosLink& m) {
    for (const Fraction& f : m.entries)
        if (f.p != 1) return false;
    return true;
}

inline std::string serialize(const MontesinosLink& m) {
    std::string out = "(";
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
        if (i) out += ',';
        out += m.entries[i].str();
    }
    out += ')';
    return out;
}

// Accepts "(p/q,p/q,...)" with optional whitespace; entries are returned as
// written, without normalization.
inline std::vector<Fraction> parse_montesinos(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("bad Montesinos description '" + std::string(text) +
                                    "', expected (p/q,...)");
    s = s.substr(1, s.size() - 2);
    std::vector<Fraction> entries;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        std::string_view tok = (comma == std::string_view::npos) ? s.substr(start)
                                                                 : s.substr(start, comma - start);
        entries.push_back(parse_fraction(tok));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return entries;
}

}  // namespace knotcensus
