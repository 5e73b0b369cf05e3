#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "primcensus/ntheory.hpp"

namespace primcensus {

// Progression parameters. a = 0 is allowed only for q = 1 (the full census);
// otherwise gcd(a, q) = 1 is enforced at construction.
struct ResidueClass {
    std::uint64_t q = 1;
    std::uint64_t a = 0;

    ResidueClass() = default;
    ResidueClass(std::uint64_t q_, std::uint64_t a_);  // domain_error on invalid (q, a)

    bool contains(std::uint64_t n) const { return n % q == a; }
    bool operator==(const ResidueClass&) const = default;
};

struct CensusResult {
    std::uint64_t x = 0;
    ResidueClass cls;
    std::int64_t u = 0;
    std::uint64_t pi = 0;        // all class primes <= x
    std::uint64_t pi_u = 0;      // those with u a primitive root (p not dividing u)
    std::uint64_t skipped = 0;   // class primes dividing u, excluded from the test
    double sum_phi_ratio = 0.0;  // sum of phi(p-1)/(p-1) over tested primes
    double sum_phi_over_p = 0.0; // sum of phi(p-1)/p over tested primes
};

struct IntervalDecomposition {
    std::uint64_t x = 0;  // primes range over (x, 2x]
    ResidueClass cls;
    std::int64_t u = 0;
    std::uint64_t psi_sum = 0;  // count of primes in range with u a primitive root
    double main_term = 0.0;     // sum of phi(p-1)/p
    double error_term = 0.0;    // sum of ([u generates] - phi(p-1)/p), same double per term
};

struct BrunTitchmarshCheck {
    std::uint64_t x = 0;
    ResidueClass cls;
    std::uint64_t lhs = 0;  // pi(2x,q,a) - pi(x,q,a)
    double rhs = 0.0;       // 3x / (phi(q) ln x)
    bool satisfied = false;
};

// #{p <= x : p prime, p in cls}. Requires x >= 2.
std::uint64_t count_primes_ap(std::uint64_t x, const ResidueClass& cls, unsigned workers = 1);

// Full census in one pass over the class primes: pi counts all of them,
// primes dividing u go to skipped, the rest are order-tested and feed the
// totient sums. u = 0 is a domain error; negative u is reduced mod p per prime.
CensusResult count_pr_primes(std::uint64_t x, const ResidueClass& cls, std::int64_t u,
                             unsigned workers = 1);

// sum over class primes p <= x of phi(p-1)/(p-1), compensated accumulation.
double totient_ratio_sum(std::uint64_t x, const ResidueClass& cls, unsigned workers = 1);

// Same with denominator p.
double totient_over_p_sum(std::uint64_t x, const ResidueClass& cls, unsigned workers = 1);

// Exact split over primes in (x, 2x]: psi_sum = main_term + error_term holds
// by construction (each phi(p-1)/p enters both aggregates as the same double).
IntervalDecomposition interval_decomposition(std::uint64_t x, const ResidueClass& cls,
                                             std::int64_t u, unsigned workers = 1);

// pi(2x,q,a) - pi(x,q,a) <= 3x/(phi(q) ln x). Requires x >= 3.
BrunTitchmarshCheck brun_titchmarsh_check(std::uint64_t x, const ResidueClass& cls,
                                          unsigned workers = 1);

// Advisory notes for a census configuration (u trivial or a perfect square,
// q outside the regime where the error terms mean anything).
std::vector<std::string> census_warnings(std::uint64_t x, const ResidueClass& cls,
                                         std::int64_t u);

}  // namespace primcensus
