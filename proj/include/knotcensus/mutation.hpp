#pragma once

#include "montesinos.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knotcensus {

namespace detail {

inline void check_mutation_index(const MontesinosLink& m, std::size_t a) {
    if (a < 1 || a >= m.entries.size())
        throw std::invalid_argument("mutation index out of range");
}

}  // namespace detail

// Mutation along the sphere enclosing tangles a and a+1 (1-based): the two
// fractions trade places, everything else is fixed.
inline MontesinosLink mutate(const MontesinosLink& m, std::size_t a) {
    detail::check_mutation_index(m, a);
    MontesinosLink out = m;
    std::swap(out.entries[a - 1], out.entries[a]);
    return out;
}

// The mutation sphere is essential exactly when both of its sides contain
// at least two non-integral tangles; the enclosed side always has two, so
// the condition is four or more entries in total.
inline bool sphere_is_essential(const MontesinosLink& m, std::size_t a) {
    detail::check_mutation_index(m, a);
    return m.entries.size() >= 4;
}

// The mutation fixes unlinked strand pairs when both enclosed tangles pair
// their endpoints NW-SE and NE-SW.
inline bool mutation_is_unlinked(const MontesinosLink& m, std::size_t a) {
    detail::check_mutation_index(m, a);
    return endpoint_pairing(m.entries[a - 1]) == EndpointPairing::one &&
           endpoint_pairing(m.entries[a]) == EndpointPairing::one;
}

// Complete equivalence invariant: the lexicographically least dihedral
// image (rotations and reversal) of the entrywise mod-1 residues, plus the
// exact fraction sum.
struct CanonicalKey {
    std::vector<Fraction> residues;
    Fraction total;

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < residues.size(); ++i) {
            if (i) out += ',';
            out += residues[i].str();
        }
        out += ")|";
        out += total.str();
        return out;
    }
};

namespace detail {

inline std::vector<Fraction> dihedral_min(const std::vector<Fraction>& residues) {
    const std::size_t m = residues.size();
    std::vector<Fraction> best;
    std::vector<Fraction> cur = residues;
    std::vector<Fraction> img(m);
    for (int rev = 0; rev < 2; ++rev) {
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t i = 0; i < m; ++i) img[i] = cur[(i + r) % m];
            if (best.empty() || img < best) best = img;
        }
        std::reverse(cur.begin(), cur.end());
    }
    return best;
}

// The dihedral invariant is complete only for links of three or more
// tangles whose denominator reciprocals sum to at most m - 2.
inline void check_classification_hypothesis(const MontesinosLink& m) {
    if (m.entries.size() < 3) throw std::invalid_argument("classification hypothesis not met");
    Fraction sum(0, 1);
    for (const Fraction& f : m.entries) sum = sum + Fraction(Int(1), f.q);
    if (sum > Fraction(Int(m.entries.size()) - 2, Int(1)))
        throw std::invalid_argument("classification hypothesis not met");
}

inline CanonicalKey key_unchecked(const std::vector<Fraction>& entries) {
    std::vector<Fraction> residues;
    residues.reserve(entries.size());
    Fraction total(0, 1);
    for (const Fraction& f : entries) {
        residues.push_back(f.mod1());
        total = total + f;
    }
    return CanonicalKey{dihedral_min(residues), std::move(total)};
}

}  // namespace detail

inline CanonicalKey canonical_key(const MontesinosLink& m) {
    detail::check_classification_hypothesis(m);
    return detail::key_unchecked(m.entries);
}

// Canonical keys of every arrangement of the entries. Adjacent
// transpositions generate all permutations, so this is the orbit of the
// mutation moves; its size is the number of pairwise inequivalent mutants.
inline std::set<CanonicalKey> enumerate_mutant_classes(const MontesinosLink& m,
                                                       std::size_t cap = 11) {
    detail::check_classification_hypothesis(m);
    if (m.entries.size() > cap)
        throw std::invalid_argument(
            "too many entries to enumerate; use distinct_count_formula instead");

    Fraction total(0, 1);
    for (const Fraction& f : m.entries) total = total + f;

    // Entries are permuted together with their precomputed residues; equal
    // entries collapse, so each distinct arrangement is visited once.
    std::vector<std::pair<Fraction, Fraction>> perm;
    perm.reserve(m.entries.size());
    for (const Fraction& f : m.entries) perm.emplace_back(f, f.mod1());
    std::sort(perm.begin(), perm.end());

    std::set<CanonicalKey> classes;
    std::vector<Fraction> residues(perm.size());
    do {
        for (std::size_t i = 0; i < perm.size(); ++i) residues[i] = perm[i].second;
        classes.insert(CanonicalKey{detail::dihedral_min(residues), total});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return classes;
}

// (2n)!/2, the number of inequivalent arrangements of 2n+1 distinct
// fractions under the dihedral identifications.
inline Int distinct_count_formula(unsigned long long n) {
    if (n < 2) throw std::invalid_argument("count formula requires n at least 2");
    Int f = 1;
    for (unsigned long long k = 2; k <= 2 * n; ++k) f *= k;
    return f / 2;
}

}  // namespace knotcensus
