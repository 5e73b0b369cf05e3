#include "primcensus/density.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "primcensus/ntheory.hpp"

namespace primcensus {

namespace {

double integrand(double t) { return 1.0 / std::log(t); }

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

// Adaptive Simpson with Richardson acceptance; the integrand is smooth on
// [2, x] so the recursion stays shallow away from the left endpoint.
double adaptive(double a, double b, double fa, double fm, double fb, double whole, double tol,
                int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = integrand(lm);
    const double frm = integrand(rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

DensityConstant truncated_Aq(std::uint64_t q, std::uint64_t a, std::uint64_t P) {
    if (q < 1) throw std::domain_error("truncated_Aq: q must be >= 1");
    if (std::gcd(a, q) != 1) throw std::domain_error("truncated_Aq: gcd(a, q) must be 1");
    if (P < 2) throw std::domain_error("truncated_Aq: P must be >= 2");

    DensityConstant result;
    result.q = q;
    result.a = a;
    result.truncation_P = P;
    result.tail_bound = 1.0 / static_cast<double>(P);

    double value = 1.0;
    // First product: primes dividing gcd(a-1, q); a = 1 makes that gcd q itself.
    if (q > 1) {
        const std::uint64_t d = std::gcd(a - 1, q);
        for (const auto& fp : factorize(d).factors)
            value *= 1.0 - 1.0 / static_cast<double>(fp.prime);
    }
    // Second product: primes up to the truncation limit, skipping p | q.
    for (std::uint64_t p : sieve_primes(P)) {
        if (q % p == 0) continue;
        const auto pd = static_cast<double>(p);
        value *= 1.0 - 1.0 / (pd * (pd - 1.0));
    }
    result.value = value;
    return result;
}

double log_integral(double x) {
    if (!(x >= 2.0)) throw std::domain_error("log_integral: x must be >= 2");
    if (x == 2.0) return 0.0;
    const double fa = integrand(2.0);
    const double fb = integrand(x);
    const double fm = integrand(0.5 * (2.0 + x));
    const double whole = simpson(2.0, x, fa, fm, fb);
    return adaptive(2.0, x, fa, fm, fb, whole, 1e-7, 60);
}

DensityEstimate empirical_density(const CensusResult& census) {
    if (census.pi == 0)
        throw std::domain_error("empirical_density: census counted no primes");
    DensityEstimate estimate;
    estimate.x = census.x;
    estimate.q = census.cls.q;
    estimate.a = census.cls.a;
    estimate.u = census.u;
    estimate.delta_hat =
        static_cast<double>(census.pi_u) / static_cast<double>(census.pi);
    const double aq = truncated_Aq(census.cls.q, census.cls.a, kDefaultTruncationP).value;
    const auto phi_q = static_cast<double>(euler_phi(factorize(census.cls.q)));
    estimate.a_u_hat = estimate.delta_hat * phi_q / aq;
    return estimate;
}

}  // namespace primcensus
