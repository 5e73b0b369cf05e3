#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace primcensus {

// Ceiling on p for the literal double-sum evaluation; it walks p*phi(p-1)
// terms and exists to validate the closed forms, not for production counts.
inline constexpr std::uint64_t kPsiNumericDefaultCeiling = 5000;

enum class PsiMethod { divisor, expsum_exact, expsum_numeric };

std::string psi_method_name(PsiMethod method);

// One evaluation of the primitive-root indicator. value_numeric is set only
// by the floating route and must agree with value_exact to 1e-6.
struct PsiEvaluation {
    std::uint64_t p = 0;
    std::uint64_t u = 0;
    std::uint64_t tau = 0;  // generator used by the exponential-sum routes; 0 when unused
    int value_exact = 0;
    std::optional<double> value_numeric;
    PsiMethod method = PsiMethod::divisor;
};

// Divisor test: u generates iff u^((p-1)/r) != 1 for every prime r | p-1.
// u is reduced mod p on entry; u == 0 mod p is a domain error.
int psi_divisor(std::uint64_t u, std::uint64_t p);

// Group-theoretic route: count n in [1, p-1] with gcd(n, p-1) = 1 and
// tau^n = u. The count is provably 0 or 1; it is 1 exactly when u generates.
// tau must itself be a primitive root.
int psi_expsum_exact(std::uint64_t u, std::uint64_t p, std::uint64_t tau);

// Literal double sum (1/p) * sum_{gcd(n,p-1)=1} sum_{k=0}^{p-1} e^{2pi i (tau^n - u) k / p},
// Kahan-accumulated in index order. The real part lands within 1e-6 of the
// exact indicator and the imaginary part within 1e-6 of zero. Throws
// ResourceError when p exceeds the ceiling.
std::complex<double> psi_expsum_numeric(std::uint64_t u, std::uint64_t p, std::uint64_t tau,
                                        std::uint64_t ceiling = kPsiNumericDefaultCeiling);

PsiEvaluation evaluate_psi(std::uint64_t u, std::uint64_t p, PsiMethod method,
                           std::uint64_t ceiling = kPsiNumericDefaultCeiling);

}  // namespace primcensus
