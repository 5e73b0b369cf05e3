#include "primcensus/charfun.hpp"

#include <numeric>
#include <stdexcept>

#include "primcensus/complexsum.hpp"
#include "primcensus/errors.hpp"
#include "primcensus/ntheory.hpp"

namespace primcensus {

namespace {

void require_prime(std::uint64_t p, const char* who) {
    if (p < 2 || !is_prime(p)) throw std::domain_error(std::string(who) + ": p must be prime");
}

std::uint64_t require_nonzero_residue(std::uint64_t u, std::uint64_t p, const char* who) {
    u %= p;
    if (u == 0) throw std::domain_error(std::string(who) + ": p divides u");
    return u;
}

void require_primitive_root(std::uint64_t tau, std::uint64_t p, const Factorization& f,
                            const char* who) {
    if (!is_primitive_root(tau, p, f))
        throw std::domain_error(std::string(who) + ": tau is not a primitive root");
}

}  // namespace

std::string psi_method_name(PsiMethod method) {
    switch (method) {
        case PsiMethod::divisor: return "divisor";
        case PsiMethod::expsum_exact: return "expsum_exact";
        case PsiMethod::expsum_numeric: return "expsum_numeric";
    }
    throw std::domain_error("psi_method_name: unknown method");
}

int psi_divisor(std::uint64_t u, std::uint64_t p) {
    require_prime(p, "psi_divisor");
    u = require_nonzero_residue(u, p, "psi_divisor");
    const Factorization f = factorize(p - 1);
    return is_primitive_root(u, p, f) ? 1 : 0;
}

int psi_expsum_exact(std::uint64_t u, std::uint64_t p, std::uint64_t tau) {
    require_prime(p, "psi_expsum_exact");
    u = require_nonzero_residue(u, p, "psi_expsum_exact");
    const Factorization f = factorize(p - 1);
    require_primitive_root(tau, p, f, "psi_expsum_exact");

    // The inner character sum collapses to p·[tau^n = u]; dividing by p leaves
    // a count of coprime n hitting u. Walk the powers once.
    int count = 0;
    std::uint64_t power = 1;
    for (std::uint64_t n = 1; n <= p - 1; ++n) {
        power = mul_mod(power, tau % p, p);
        if (power == u && std::gcd(n, p - 1) == 1) ++count;
    }
    return count;
}

std::complex<double> psi_expsum_numeric(std::uint64_t u, std::uint64_t p, std::uint64_t tau,
                                        std::uint64_t ceiling) {
    require_prime(p, "psi_expsum_numeric");
    u = require_nonzero_residue(u, p, "psi_expsum_numeric");
    const Factorization f = factorize(p - 1);
    require_primitive_root(tau, p, f, "psi_expsum_numeric");
    if (p > ceiling)
        throw ResourceError("psi_expsum_numeric: p exceeds the evaluation ceiling");

    const auto zeta = roots_of_unity(p);
    ComplexKahan total;
    std::uint64_t power = 1;
    for (std::uint64_t n = 1; n <= p - 1; ++n) {
        power = mul_mod(power, tau % p, p);
        if (std::gcd(n, p - 1) != 1) continue;
        // sum over k of zeta^{(tau^n - u) k}
        const std::uint64_t delta = (power + p - u) % p;
        std::uint64_t idx = 0;
        for (std::uint64_t k = 0; k < p; ++k) {
            total.add(zeta[idx]);
            idx += delta;
            if (idx >= p) idx -= p;
        }
    }
    const auto v = total.value();
    return {v.real() / static_cast<double>(p), v.imag() / static_cast<double>(p)};
}

PsiEvaluation evaluate_psi(std::uint64_t u, std::uint64_t p, PsiMethod method,
                           std::uint64_t ceiling) {
    PsiEvaluation eval;
    eval.p = p;
    eval.u = u % p;
    eval.method = method;
    switch (method) {
        case PsiMethod::divisor:
            eval.value_exact = psi_divisor(u, p);
            break;
        case PsiMethod::expsum_exact:
            eval.tau = smallest_primitive_root(p);
            eval.value_exact = psi_expsum_exact(u, p, eval.tau);
            break;
        case PsiMethod::expsum_numeric: {
            eval.tau = smallest_primitive_root(p);
            const auto z = psi_expsum_numeric(u, p, eval.tau, ceiling);
            eval.value_numeric = z.real();
            eval.value_exact = psi_expsum_exact(u, p, eval.tau);
            break;
        }
    }
    return eval;
}

}  // namespace primcensus
