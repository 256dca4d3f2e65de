#include <catch2/catch_amalgamated.hpp>

#include <knotcensus/mutation.hpp>

#include "oracles.hpp"

#include <algorithm>
#include <random>
#include <vector>

using namespace knotcensus;

namespace {

std::vector<Fraction> F(std::initializer_list<std::pair<long long, long long>> pairs) {
    std::vector<Fraction> out;
    for (const auto& [p, q] : pairs) out.push_back(Fraction(p, q));
    return out;
}

Fraction fraction_sum(const MontesinosLink& m) {
    Fraction s(0, 1);
    for (const Fraction& f : m.entries) s = s + f;
    return s;
}

}  // namespace

TEST_CASE("mutation swaps adjacent fractions") {
    MontesinosLink fam = build_family(2);
    CHECK(mutate(fam, 1).entries == F({{1, 9}, {1, 7}, {1, 11}, {1, 13}, {1, 15}}));
    CHECK(mutate(fam, 4).entries == F({{1, 7}, {1, 9}, {1, 11}, {1, 15}, {1, 13}}));

    SECTION("is an involution") {
        for (std::size_t a = 1; a < fam.entries.size(); ++a)
            CHECK(mutate(mutate(fam, a), a) == fam);
    }
    SECTION("fixes equal entries") {
        MontesinosLink rep{F({{1, 7}, {1, 7}, {1, 9}})};
        CHECK(mutate(rep, 1) == rep);
    }
    SECTION("rejects out-of-range indices") {
        CHECK_THROWS_AS(mutate(fam, 0), std::invalid_argument);
        CHECK_THROWS_AS(mutate(fam, 5), std::invalid_argument);
    }
}

TEST_CASE("essential sphere condition") {
    CHECK(sphere_is_essential(build_family(2), 1));
    CHECK_FALSE(sphere_is_essential(build_family(1), 1));
    CHECK(sphere_is_essential(build_family(3), 3));
    for (std::size_t a = 1; a <= 2; ++a) CHECK_FALSE(sphere_is_essential(build_family(1), a));
    MontesinosLink four{F({{1, 3}, {1, 3}, {1, 3}, {1, 3}})};
    for (std::size_t a = 1; a <= 3; ++a) CHECK(sphere_is_essential(four, a));
    CHECK_THROWS_AS(sphere_is_essential(build_family(2), 0), std::invalid_argument);
}

TEST_CASE("unlinked mutation condition") {
    MontesinosLink fam = build_family(3);
    for (std::size_t a = 1; a < fam.entries.size(); ++a) CHECK(mutation_is_unlinked(fam, a));

    MontesinosLink with_half = normalize(F({{1, 2}, {1, 7}, {1, 9}, {1, 7}}));
    CHECK_FALSE(mutation_is_unlinked(with_half, 1));
    CHECK(mutation_is_unlinked(with_half, 2));
    CHECK(mutation_is_unlinked(with_half, 3));

    MontesinosLink rep{F({{1, 7}, {1, 7}, {1, 7}, {1, 7}, {1, 7}})};
    CHECK(mutation_is_unlinked(rep, 2));
}

TEST_CASE("canonical keys identify dihedral rearrangements") {
    MontesinosLink a{F({{1, 9}, {1, 7}, {1, 11}, {1, 13}, {1, 15}})};
    MontesinosLink b{F({{1, 15}, {1, 13}, {1, 11}, {1, 7}, {1, 9}})};
    CHECK(canonical_key(a) == canonical_key(b));

    MontesinosLink fam = build_family(2);
    CHECK(canonical_key(fam) != canonical_key(a));

    MontesinosLink rep{F({{1, 7}, {1, 7}, {1, 7}})};
    CanonicalKey key = canonical_key(rep);
    CHECK(key.residues == F({{1, 7}, {1, 7}, {1, 7}}));
    CHECK(key.total == Fraction(3, 7));
    CHECK(key.str() == "(1/7,1/7,1/7)|3/7");
}

TEST_CASE("canonical key is constant on dihedral images") {
    std::mt19937 rng(9021);
    std::uniform_int_distribution<long long> q_dist(5, 19);
    std::uniform_int_distribution<long long> p_dist(1, 4);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Fraction> entries;
        int len = 3 + static_cast<int>(rng() % 5);
        for (int i = 0; i < len; ++i) {
            long long q = q_dist(rng);
            long long p = p_dist(rng);
            entries.push_back(Fraction(p % q == 0 ? 1 : p, q));
        }
        MontesinosLink link{entries};
        CanonicalKey base = canonical_key(link);
        for (int r = 0; r < len; ++r) {
            std::vector<Fraction> rot(entries.begin() + r, entries.end());
            rot.insert(rot.end(), entries.begin(), entries.begin() + r);
            CHECK(canonical_key(MontesinosLink{rot}) == base);
            std::reverse(rot.begin(), rot.end());
            CHECK(canonical_key(MontesinosLink{rot}) == base);
        }
    }
}

TEST_CASE("canonical key separates equal residues with different sums") {
    MontesinosLink fam = build_family(1);
    MontesinosLink shifted{F({{8, 7}, {1, 9}, {1, 11}})};
    CanonicalKey k1 = canonical_key(fam);
    CanonicalKey k2 = canonical_key(shifted);
    CHECK(k1.residues == k2.residues);
    CHECK(k1.total != k2.total);
    CHECK(k1 != k2);
}

TEST_CASE("classification hypothesis is enforced") {
    CHECK_THROWS_WITH(canonical_key(MontesinosLink{F({{1, 2}, {1, 2}, {1, 2}})}),
                      "classification hypothesis not met");
    CHECK_THROWS_WITH(canonical_key(MontesinosLink{F({{1, 2}, {1, 2}})}),
                      "classification hypothesis not met");
    CHECK_THROWS_AS(enumerate_mutant_classes(MontesinosLink{F({{1, 2}, {1, 2}, {1, 2}})}),
                    std::invalid_argument);
    CHECK_NOTHROW(canonical_key(MontesinosLink{F({{1, 7}, {-1, 9}, {1, 11}})}));
}

TEST_CASE("mutant class enumeration matches the count formula") {
    CHECK(enumerate_mutant_classes(build_family(2)).size() == 12);
    CHECK(distinct_count_formula(2) == 12);
    CHECK(enumerate_mutant_classes(build_family(3)).size() == 360);
    CHECK(distinct_count_formula(3) == 360);
    CHECK(distinct_count_formula(10) == Int("1216451004088320000"));
    CHECK(distinct_count_formula(10) == oracle::factorial(20) / 2);
    CHECK_THROWS_AS(distinct_count_formula(1), std::invalid_argument);

    SECTION("enumeration cap points at the formula") {
        std::vector<Fraction> many(12, Fraction(1, 7));
        std::vector<long long> qs = {7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27, 29};
        many.clear();
        for (long long q : qs) many.push_back(Fraction(1, q));
        CHECK_THROWS_AS(enumerate_mutant_classes(MontesinosLink{many}), std::invalid_argument);
    }
}

TEST_CASE("repeated entries collapse to the multiset class count") {
    MontesinosLink multi{F({{1, 7}, {1, 7}, {1, 9}, {1, 9}, {1, 11}})};
    std::set<CanonicalKey> classes = enumerate_mutant_classes(multi);
    CHECK(classes.size() == 4);

    SECTION("matches the naive all-pairs oracle") {
        std::vector<Fraction> perm = multi.entries;
        std::sort(perm.begin(), perm.end());
        std::vector<std::vector<Fraction>> perms;
        do {
            perms.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(perms.size() == 30);

        std::vector<int> oracle_groups = oracle::dihedral_partition_all_pairs(perms);
        int group_count = *std::max_element(oracle_groups.begin(), oracle_groups.end()) + 1;
        CHECK(group_count == 4);

        std::vector<std::string> keys;
        for (const auto& p : perms) keys.push_back(canonical_key(MontesinosLink{p}).str());
        CHECK(oracle::canonical_labels(keys) == oracle_groups);
    }
}

TEST_CASE("mutations preserve the link invariants") {
    std::mt19937 rng(9022);
    for (unsigned long long n = 2; n <= 4; ++n) {
        MontesinosLink fam = build_family(n);
        Fraction sum = fraction_sum(fam);
        MontesinosLink cur = fam;
        std::uniform_int_distribution<std::size_t> a_dist(1, fam.entries.size() - 1);
        for (int step = 0; step < 60; ++step) {
            cur = mutate(cur, a_dist(rng));
            CHECK(component_count(cur) == 1);
            CHECK(is_alternating_vertical(cur));
            CHECK(is_hyperbolic_witness(cur));
            CHECK(fraction_sum(cur) == sum);
        }
    }
}

TEST_CASE("mutation orbits stay inside the enumerated class set") {
    MontesinosLink fam = build_family(2);
    std::set<CanonicalKey> classes = enumerate_mutant_classes(fam);
    std::mt19937 rng(9023);
    std::uniform_int_distribution<std::size_t> a_dist(1, fam.entries.size() - 1);
    MontesinosLink cur = fam;
    for (int step = 0; step < 200; ++step) {
        cur = mutate(cur, a_dist(rng));
        CHECK(classes.count(canonical_key(cur)) == 1);
    }
}
