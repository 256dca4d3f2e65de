#pragma once

#include "errors.hpp"
#include "fraction.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotcensus {

using Real = boost::multiprecision::mpfr_float;

namespace detail {

inline constexpr unsigned default_digits = 50;
inline constexpr const char* precision_env_name = "KNOTCENSUS_PRECISION";

inline std::atomic<unsigned>& configured_digits() {
    static std::atomic<unsigned> digits{0};
    return digits;
}

inline unsigned read_precision_env() {
    const char* raw = std::getenv(precision_env_name);
    if (!raw || !*raw) return default_digits;
    char* end = nullptr;
    unsigned long v = std::strtoul(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 2 || v > 100000)
        throw std::invalid_argument(std::string("invalid ") + precision_env_name + " value '" +
                                    raw + "', expected decimal digits in 2..100000");
    return static_cast<unsigned>(v);
}

// Applies the configured working precision to new mpfr values in the
// calling thread. Every public entry point of this module calls it, so
// worker threads pick up the configuration without extra plumbing.
inline void use_working_precision() {
    unsigned d = configured_digits().load(std::memory_order_relaxed);
    if (d == 0) {
        d = read_precision_env();
        configured_digits().store(d, std::memory_order_relaxed);
    }
    Real::default_precision(d);
}

inline Real to_real(const Int& x) { return Real(x.str()); }

inline Real to_real(const Fraction& f) {
    if (f.is_infinity()) throw std::invalid_argument("cannot convert infinity to a real");
    return to_real(f.p) / to_real(f.q);
}

// Comparisons closer to a tie than this are treated as indeterminate and
// fail, except where a tie is proved exact by rational arithmetic.
inline Real comparison_margin() { return Real("1e-20"); }

}  // namespace detail

inline void set_working_precision(unsigned digits) {
    if (digits < 2 || digits > 100000)
        throw std::invalid_argument("working precision must be in 2..100000 digits");
    detail::configured_digits().store(digits);
    Real::default_precision(digits);
}

inline unsigned working_precision() {
    detail::use_working_precision();
    return detail::configured_digits().load();
}

inline std::string to_decimal_string(const Real& x, int digits = 30) {
    std::ostringstream out;
    out << std::setprecision(digits) << x;
    return out.str();
}

// Volume of the regular ideal octahedron: four times Catalan's constant.
inline Real v_oct() {
    detail::use_working_precision();
    Real catalan{0};
    mpfr_const_catalan(catalan.backend().data(), MPFR_RNDN);
    return 4 * catalan;
}

// Two-sided volume bounds for the n-th family member, exact as multiples
// of v_oct and evaluated at working precision.
struct VolumeBound {
    Fraction lower_oct;
    Fraction upper_oct;
    Real lower;
    Real upper;
};

inline VolumeBound volume_bounds(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("volume bounds require n at least 2");
    detail::use_working_precision();
    VolumeBound b;
    b.lower_oct = Fraction(Int(2 * n - 1), Int(2));
    b.upper_oct = Fraction(Int(4 * n + 2), Int(1));
    const Real oct = v_oct();
    b.lower = detail::to_real(b.lower_oct) * oct;
    b.upper = detail::to_real(b.upper_oct) * oct;
    return b;
}

// log n! as lngamma(n+1), correctly rounded at working precision.
inline Real log_factorial(std::uint64_t n) {
    detail::use_working_precision();
    return lgamma(Real(n) + 1);
}

// log of the factorial lower estimate sqrt(2 pi n) (n/e)^n.
inline Real stirling_lower_log(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("the factorial estimate requires n at least 1");
    detail::use_working_precision();
    Real pi{0};
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    Real x(n);
    return log(2 * pi * x) / 2 + x * (log(x) - 1);
}

inline Real stirling_lower(std::uint64_t n) { return exp(stirling_lower_log(n)); }

struct ChainStep {
    std::string label;
    Real lhs;
    Real rhs;
    bool holds = false;
};

struct GrowthCertificate {
    std::uint64_t n = 0;
    Real v_upper;
    Real log_count;
    Real log_target;
    bool holds = false;
    std::vector<ChainStep> chain;
};

namespace detail {

// Final-claim gap log((2n)!/2) - (v/8) log v at v = (4n+2) v_oct. Written
// exactly like the certificate fields so the two paths agree bit for bit.
inline Real growth_gap(std::uint64_t n, const Real& oct) {
    const Real v = Real(4 * n + 2) * oct;
    return (lgamma(Real(2 * n) + 1) - log(Real(2))) - (v / 8) * log(v);
}

}  // namespace detail

// Certifies log((2n)!/2) >= (v/8) log v at the upper-bound volume
// v = (4n+2) v_oct, recording every inequality of the derivation in the
// log domain. Since x -> x^(x/8) increases for x >= 1, a success here
// covers every admissible volume below the bound. Strict steps must clear
// the 1e-20 margin; the middle step is an exact identity at this volume
// (the v_oct multiples cancel by rational arithmetic), so both sides are
// produced by the same reduced expression and compared without margin.
inline GrowthCertificate growth_certificate(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("growth certificate requires n at least 2");
    detail::use_working_precision();
    const Real margin = detail::comparison_margin();

    GrowthCertificate cert;
    cert.n = n;
    const Real oct = v_oct();
    const Real v = Real(4 * n + 2) * oct;
    cert.v_upper = v;
    cert.log_count = lgamma(Real(2 * n) + 1) - log(Real(2));

    const Real two_n(2 * n);
    const Real power_log = two_n * (log(two_n) - 1);  // log((2n/e)^(2n))

    ChainStep s1{"count_vs_power", cert.log_count, power_log, false};
    s1.holds = (s1.lhs - s1.rhs) > margin;
    cert.chain.push_back(s1);

    // v/(2 v_oct) = (4n+2)/2 = 2n+1 exactly, so the volume form
    // (v/(2 e v_oct) - 1/e)^(v/(2 v_oct) - 1) reduces to (2n/e)^(2n).
    Fraction half_multiple(Int(4) * Int(n) + 2, Int(2));
    Fraction reduced = half_multiple - Fraction(1, 1);
    if (reduced != Fraction(Int(2) * Int(n), Int(1)))
        throw invariant_violation("volume multiple failed to reduce exactly");
    const Real reduced_real = detail::to_real(reduced);
    const Real volume_form_log = reduced_real * (log(reduced_real) - 1);
    ChainStep s2{"power_vs_volume_form", power_log, volume_form_log, false};
    s2.holds = s2.lhs >= s2.rhs;
    cert.chain.push_back(s2);

    ChainStep s3{"volume_form_vs_constants", volume_form_log, Real(0), false};
    const Real base = v / 20 - exp(Real(-1));
    const Real expo = v / 7.5 - 1;
    s3.rhs = expo * log(base);
    s3.holds = (s3.lhs - s3.rhs) > margin;
    cert.chain.push_back(s3);

    cert.log_target = (v / 8) * log(v);
    cert.holds = (cert.log_count - cert.log_target) > margin;
    return cert;
}

// Least n whose certificate holds. The gap is negative for every probe
// the doubling phase visits and positive from the returned value on; the
// acceptance suite additionally scans a persistence window above it.
inline std::uint64_t find_growth_threshold() {
    detail::use_working_precision();
    const Real margin = detail::comparison_margin();
    const Real oct = v_oct();
    auto gap_holds = [&](std::uint64_t n) { return detail::growth_gap(n, oct) > margin; };

    std::uint64_t lo = 2;
    if (gap_holds(lo)) return lo;
    std::uint64_t hi = 4;
    while (!gap_holds(hi)) {
        lo = hi;
        if (hi > (std::uint64_t(1) << 60))
            throw invariant_violation("growth threshold not found below 2^60");
        hi *= 2;
    }
    while (hi - lo > 1) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (gap_holds(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}  // namespace knotcensus
