#pragma once

#include <cstdint>

#include "primcensus/census.hpp"

namespace primcensus {

inline constexpr std::uint64_t kDefaultTruncationP = 1'000'000;

// Truncated Euler product for the density constant attached to (q, a),
// with a rigorous relative tail bound.
struct DensityConstant {
    std::uint64_t q = 1;
    std::uint64_t a = 0;
    std::uint64_t truncation_P = 0;  // largest prime admitted to the product
    double value = 0.0;
    double tail_bound = 0.0;  // relative error bound 1/P for the omitted factors
};

struct DensityEstimate {
    std::uint64_t x = 0;
    std::uint64_t q = 1;
    std::uint64_t a = 0;
    std::int64_t u = 0;
    double delta_hat = 0.0;  // pi_u / pi
    double a_u_hat = 0.0;    // delta_hat * phi(q) / A_q — an estimate, never ground truth
};

// prod over primes p | gcd(a-1, q) of (1 - 1/p), times prod over primes
// p <= P, p not dividing q, of (1 - 1/(p(p-1))). For a = 1 the first product
// runs over p | q (gcd(0, q) = q). Requires gcd(a, q) = 1 and P >= 2.
DensityConstant truncated_Aq(std::uint64_t q, std::uint64_t a, std::uint64_t P);

// li(x) = integral from 2 to x of dt/ln t, adaptive quadrature, absolute
// error < 1e-6. Requires x >= 2.
double log_integral(double x);

// delta_hat = pi_u/pi; a_u_hat scales by phi(q)/A_q with A_q truncated at
// P = 1e6. Requires census.pi > 0.
DensityEstimate empirical_density(const CensusResult& census);

}  // namespace primcensus
