// Weighted sets: generators, the counting functions A(X) and A(q,b;X),
// residue distribution profiles kappa(q,b), and the structural predicates
// (Sidon digit sets, convexity, logarithmic density).
#pragma once

#include "circleforge/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace circleforge {

enum class SetKind { Naturals, Primes, Ellipsephic, Smooth, Explicit, FromFile };

struct WeightedSet {
    long long bound = 0;  // X
    // support elements in increasing order with strictly positive weights
    std::vector<std::pair<long long, Rat>> weights;
    std::string label;
    SetKind kind = SetKind::Explicit;
    // generator parameters kept for closed-form kappa synthesis
    long long ell_p = 0;
    std::vector<long long> ell_digits;

    std::size_t size() const { return weights.size(); }
    // A(X) = sum_{n <= X} a_n, exact
    Rat count_up_to(long long X) const;
    // A(q,b;X), exact
    Rat residue_count(long long q, long long b, long long X) const;
    std::vector<long long> support() const;
    Rat max_weight() const;

    void finalize();  // sorts, validates invariants, builds prefix sums

  private:
    std::vector<Rat> prefix_;
};

struct SpecNaturals {};
struct SpecPrimes {};
struct SpecEllipsephic {
    long long p = 0;
    std::vector<long long> digits;
};
struct SpecSmooth {
    long long Q = 0;
};
struct SpecExplicit {
    std::vector<std::pair<long long, Rat>> pairs;
};
struct SpecFromFile {
    std::string path;
};
using SetSpec = std::variant<SpecNaturals, SpecPrimes, SpecEllipsephic, SpecSmooth,
                             SpecExplicit, SpecFromFile>;

WeightedSet generate_set(const SetSpec& spec, long long X);

std::vector<long long> sieve_primes(long long X);

// ---------------------------------------------------------------------------
// Distribution profiles
// ---------------------------------------------------------------------------

enum class ProfileMode { Exact, Empirical };

struct DistributionProfile {
    ProfileMode mode = ProfileMode::Empirical;
    long long level_qd = 0;  // largest profiled q
    std::string label;

    // closed-form backend for Exact mode; rows are synthesized on demand so
    // that large-q use does not pin memory
    enum class Form { None, Uniform, PrimeUnits, Ellipsephic };
    Form form = Form::None;
    long long ell_p = 0;
    std::vector<char> ell_digit_mask;

    // materialized rows (always present in Empirical mode)
    std::map<long long, std::vector<Rat>> rows;
    std::map<long long, Rat> error_bound;  // observed E-proxy per modulus

    bool profiled(long long q) const;
    // dense row of length q; throws if unprofiled
    std::vector<Rat> row(long long q) const;
    Rat kappa_at(long long q, long long b) const;

    // classical kappa = 1/q profile for the full set of integers
    static DistributionProfile classical(long long level);
};

// empirical rationalization cap: nearest rational with denominator
// <= lcm(q, den_cap), then renormalized so each row sums to 1 exactly
struct KappaConfig {
    long long den_cap = 720;
};

DistributionProfile estimate_kappa(const WeightedSet& A, long long q_max,
                                   const std::vector<long long>& grid,
                                   const KappaConfig& cfg = {});

// ---------------------------------------------------------------------------
// Hypothesis (C) and the teaser predicates
// ---------------------------------------------------------------------------

struct ConditionCReport {
    struct Pair {
        long long q = 0, qp = 0;
        bool holds = true;
        // first counterexample, if any
        long long bad_b = -1, bad_bp = -1;
        Rat lhs, rhs;
    };
    std::vector<Pair> pairs;
    // per modulus: kappa takes a single nonzero value on its support
    std::map<long long, bool> equidistributed_shape;
    bool all_hold = true;
};

ConditionCReport check_condition_C(const DistributionProfile& profile,
                                   const std::vector<std::pair<long long, long long>>& pairs);

struct SidonReport {
    bool ok = true;
    long long order = 0;                  // m
    long long max_count = 0;              // over the tested range n <= m*p
    long long witness_n = -1;             // first n with count > m!
    long long witness_count = 0;
    std::vector<long long> counts;        // counts[n] for 0 <= n <= m*p
    std::vector<long long> beyond_counts; // counts for m*p < n <= m*(p-1), reported only
};

SidonReport verify_sidon(const std::vector<long long>& digits, long long m, long long p);

struct LogDensityReport {
    double lambda = 0.0;  // min over grid of log A(X)/log X (liminf proxy)
    std::vector<std::pair<long long, double>> trace;
};

LogDensityReport log_density(const WeightedSet& A, const std::vector<long long>& grid);

struct ConvexityReport {
    bool ok = true;
    long long violation_index = -1;  // 1-based index n of the first bad gap pair
    long long gap_n = 0, gap_n1 = 0;
};

ConvexityReport check_convexity(const WeightedSet& A);

}  // namespace circleforge
