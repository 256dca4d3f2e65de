#pragma once

#include "errors.hpp"
#include "montesinos.hpp"
#include "mutation.hpp"
#include "volume.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <cstdint>
#include <exception>
#include <fstream>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace knotcensus {

// One census row: the n-th family link, its mutant-class counts (for knots
// and for the closed manifolds they bound), volume bounds, and the growth
// verdict. enumerated says whether knot_class_count came from exhaustive
// enumeration rather than the formula.
struct CensusRecord {
    std::uint64_t n = 0;
    std::string fractions;
    Int knot_class_count = 0;
    Int formula_count = 0;
    Int closed_class_count = 0;
    VolumeBound bounds;
    Fraction closed_upper_oct;
    bool growth_holds = false;
    bool enumerated = false;
};

namespace detail {

inline CensusRecord census_record(std::uint64_t n, std::size_t enumerate_cap) {
    const MontesinosLink fam = build_family(n);
    const std::size_t m = fam.entries.size();
    const std::string name = "family n=" + std::to_string(n);

    if (std::size_t c = component_count(fam); c != 1)
        throw invariant_violation(name + " has " + std::to_string(c) +
                                  " components, expected a knot");
    if (!is_hyperbolic_witness(fam))
        throw invariant_violation(name + " fails the hyperbolicity witness");
    if (!is_alternating_vertical(fam))
        throw invariant_violation(name + " is not alternating vertical");
    for (std::size_t a = 1; a < m; ++a) {
        if (!sphere_is_essential(fam, a))
            throw invariant_violation(name + " mutation sphere " + std::to_string(a) +
                                      " is not essential");
        if (!mutation_is_unlinked(fam, a))
            throw invariant_violation(name + " mutation " + std::to_string(a) +
                                      " is not unlinked");
    }

    CensusRecord rec;
    rec.n = n;
    rec.fractions = serialize(fam);
    rec.formula_count = distinct_count_formula(n);
    if (m <= enumerate_cap) {
        rec.knot_class_count = Int(enumerate_mutant_classes(fam, enumerate_cap).size());
        rec.enumerated = true;
        if (rec.knot_class_count != rec.formula_count)
            throw invariant_violation(name + " enumerated " + rec.knot_class_count.str() +
                                      " classes, formula gives " + rec.formula_count.str());
    } else {
        rec.knot_class_count = rec.formula_count;
        rec.enumerated = false;
    }
    rec.closed_class_count = rec.formula_count;
    rec.bounds = volume_bounds(n);
    rec.closed_upper_oct = rec.bounds.upper_oct;
    rec.growth_holds = growth_certificate(n).holds;
    return rec;
}

}  // namespace detail

// Builds and checks each family link in [n_min, n_max]. Links with at most
// enumerate_cap tangles have their classes enumerated exhaustively and
// cross-checked against the formula; longer ones use the formula directly.
// A family member failing any of its certified predicates is reported as an
// invariant violation, never papered over.
//
// Records for distinct n are independent, so they are computed by a small
// worker pool and merged in n order; the first failure in n order wins.
inline std::vector<CensusRecord> run_census(std::uint64_t n_min, std::uint64_t n_max,
                                            std::size_t enumerate_cap = 11) {
    if (n_min < 2 || n_min > n_max)
        throw std::invalid_argument("census range must satisfy 2 <= n_min <= n_max");
    detail::use_working_precision();

    const std::uint64_t count = n_max - n_min + 1;
    std::vector<CensusRecord> out(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::uint64_t> cursor{0};
    auto work = [&] {
        for (std::uint64_t i; (i = cursor.fetch_add(1)) < count;) {
            try {
                out[i] = detail::census_record(n_min + i, enumerate_cap);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const std::uint64_t workers =
        std::min<std::uint64_t>(count, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::uint64_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (std::thread& t : pool) t.join();

    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

// ------------------------------------------------------------------ JSON

inline nlohmann::json bounds_to_json(const VolumeBound& b) {
    return {{"lower_oct", b.lower_oct.str()},
            {"upper_oct", b.upper_oct.str()},
            {"lower", to_decimal_string(b.lower)},
            {"upper", to_decimal_string(b.upper)}};
}

inline VolumeBound bounds_from_json(const nlohmann::json& j) {
    detail::use_working_precision();
    VolumeBound b;
    b.lower_oct = parse_fraction(j.at("lower_oct").get<std::string>());
    b.upper_oct = parse_fraction(j.at("upper_oct").get<std::string>());
    b.lower = Real(j.at("lower").get<std::string>());
    b.upper = Real(j.at("upper").get<std::string>());
    return b;
}

inline nlohmann::json record_to_json(const CensusRecord& r) {
    return {{"n", r.n},
            {"fractions", r.fractions},
            {"knot_class_count", r.knot_class_count.str()},
            {"formula_count", r.formula_count.str()},
            {"closed_class_count", r.closed_class_count.str()},
            {"bounds", bounds_to_json(r.bounds)},
            {"closed_upper_oct", r.closed_upper_oct.str()},
            {"growth_holds", r.growth_holds},
            {"enumerated", r.enumerated}};
}

inline CensusRecord record_from_json(const nlohmann::json& j) {
    CensusRecord r;
    r.n = j.at("n").get<std::uint64_t>();
    r.fractions = j.at("fractions").get<std::string>();
    r.knot_class_count = Int(j.at("knot_class_count").get<std::string>());
    r.formula_count = Int(j.at("formula_count").get<std::string>());
    r.closed_class_count = Int(j.at("closed_class_count").get<std::string>());
    r.bounds = bounds_from_json(j.at("bounds"));
    r.closed_upper_oct = parse_fraction(j.at("closed_upper_oct").get<std::string>());
    r.growth_holds = j.at("growth_holds").get<bool>();
    r.enumerated = j.at("enumerated").get<bool>();
    return r;
}

inline nlohmann::json certificate_to_json(const GrowthCertificate& c) {
    nlohmann::json chain = nlohmann::json::array();
    for (const ChainStep& step : c.chain)
        chain.push_back({{"label", step.label},
                         {"lhs", to_decimal_string(step.lhs)},
                         {"rhs", to_decimal_string(step.rhs)},
                         {"holds", step.holds}});
    return {{"n", c.n},
            {"v_upper", to_decimal_string(c.v_upper)},
            {"log_count", to_decimal_string(c.log_count)},
            {"log_target", to_decimal_string(c.log_target)},
            {"holds", c.holds},
            {"chain", chain}};
}

// -------------------------------------------------------------- classify

struct ClassifyGroup {
    std::string key;
    std::vector<std::pair<int, std::string>> members;  // line number, text
};

struct ClassifyReport {
    std::vector<ClassifyGroup> groups;
    std::vector<std::pair<int, std::string>> rejected;  // line number, reason
};

// Reads one Montesinos description per line and groups equivalent links.
// Lines that fail to parse or fall outside the classification hypothesis
// are reported individually; processing continues.
inline ClassifyReport classify_stream(std::istream& in) {
    ClassifyReport report;
    std::map<std::string, std::size_t> group_index;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view text = detail::trim(line);
        if (text.empty()) continue;
        try {
            MontesinosLink link = normalize(parse_montesinos(text));
            std::string key = canonical_key(link).str();
            auto [it, inserted] = group_index.try_emplace(key, report.groups.size());
            if (inserted) report.groups.push_back({key, {}});
            report.groups[it->second].members.emplace_back(lineno, std::string(text));
        } catch (const std::invalid_argument& e) {
            report.rejected.emplace_back(lineno, e.what());
        }
    }
    return report;
}

inline ClassifyReport classify_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return classify_stream(in);
}

}  // namespace knotcensus
