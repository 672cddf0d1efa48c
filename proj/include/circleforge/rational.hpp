// Exact arithmetic primitives shared by all modules. Weights, counting
// tables and kappa coefficients are GMP rationals end to end; floats enter
// only at the analytic layer (quadrature, exponentials).
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace circleforge {

using Int = mpz_class;
using Rat = mpq_class;

inline Int ipow(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    out.canonicalize();
    return out;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline long long powmod_ll(long long base, unsigned long e, long long m) {
    Int b(base), mm(m), out;
    mpz_powm_ui(out.get_mpz_t(), b.get_mpz_t(), e, mm.get_mpz_t());
    return out.get_si();
}

// "num/den" with "/den" omitted when the value is integral
std::string rat_to_string(const Rat& x);
// accepts "a", "a/b", optional sign; throws std::invalid_argument on junk
Rat rat_from_string(const std::string& s);

// exact conversion: every finite double is a dyadic rational
Rat rat_from_double(double x);

// best rational approximation to x among fractions with denominator
// <= max_den (Stern-Brocot walk over continued-fraction convergents)
Rat snap_to_denominator(const Rat& x, const Int& max_den);

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// splitmix64; used everywhere randomness is needed so that runs are
// reproducible across platforms (std::uniform_real_distribution is not)
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }
};

}  // namespace circleforge
