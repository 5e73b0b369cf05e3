#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace primcensus {

struct FactorPower {
    std::uint64_t prime = 0;
    std::uint32_t exponent = 0;

    bool operator==(const FactorPower&) const = default;
};

/// Prime factorization with factors sorted ascending; n = 1 is the empty list.
struct Factorization {
    std::vector<FactorPower> factors;

    /// Reconstructs the factored integer (1 for the empty factorization).
    std::uint64_t value() const;

    bool operator==(const Factorization&) const = default;
};

/// A prime p bundled with the data every downstream computation needs:
/// the factorization of p-1, phi(p-1), and the smallest primitive root tau.
struct PrimeRecord {
    std::uint64_t p = 0;
    Factorization p_minus_1_factors;
    std::uint64_t phi_p_minus_1 = 0;
    std::uint64_t tau = 0;

    bool operator==(const PrimeRecord&) const = default;
};

/// All primes in [2, limit], ascending. Segmented Eratosthenes; segment_hint
/// overrides the default segment length. Throws std::domain_error for limit < 2.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit,
                                        std::optional<std::uint64_t> segment_hint = {});

/// Primes in the half-open interval (lo, hi], ascending.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// Deterministic Miller-Rabin, exact for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Trial division by sieved primes up to 1e6, then deterministic Brent-rho
/// splitting (fixed polynomial and start points, no randomness).
/// Throws std::domain_error for n = 0.
Factorization factorize(std::uint64_t n);

std::uint64_t euler_phi(const Factorization& f);
std::uint64_t euler_phi(std::uint64_t n);  // factorizes; domain_error for n = 0

/// 0 if any exponent >= 2, else (-1)^(number of prime factors).
int mobius(const Factorization& f);

/// (a * b) mod m through a 128-bit intermediate.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// base^exp mod modulus; exp = 0 gives 1 mod modulus.
/// Throws std::domain_error for modulus < 2.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus);

/// Least k >= 1 with u^k = 1 mod p, found by stripping prime factors of p-1.
/// Throws std::domain_error when p divides u.
std::uint64_t multiplicative_order(std::uint64_t u, std::uint64_t p);
std::uint64_t multiplicative_order(std::uint64_t u, std::uint64_t p,
                                   const Factorization& p_minus_1);

/// True iff u generates the full multiplicative group mod p. u = 0 mod p
/// returns false rather than throwing.
bool is_primitive_root(std::uint64_t u, std::uint64_t p);
bool is_primitive_root(std::uint64_t u, std::uint64_t p, const Factorization& p_minus_1);

/// Least tau >= 1 that is a primitive root mod p (1 for p = 2).
std::uint64_t smallest_primitive_root(std::uint64_t p);

/// Full PrimeRecord for a prime p.
PrimeRecord make_prime_record(std::uint64_t p);

/// Reduces a signed value into [0, m-1].
std::uint64_t reduce_mod(std::int64_t v, std::uint64_t m);

}  // namespace primcensus
