#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "primcensus/charfun.hpp"
#include "primcensus/errors.hpp"
#include "primcensus/ntheory.hpp"

using namespace primcensus;

TEST_CASE("psi_divisor detects primitive roots") {
    CHECK(psi_divisor(3, 7) == 1);
    CHECK(psi_divisor(2, 7) == 0);
    CHECK(psi_divisor(1, 2) == 1);
    CHECK_THROWS_AS(psi_divisor(7, 7), std::domain_error);
    CHECK_THROWS_AS(psi_divisor(3, 8), std::domain_error);

    // A square has order dividing (p-1)/2, so 4 never generates for p > 5.
    for (std::uint64_t p : sieve_primes(500)) {
        if (p <= 5) continue;
        CAPTURE(p);
        REQUIRE(psi_divisor(4, p) == 0);
    }
}

TEST_CASE("psi_expsum_exact agrees with the examples and rejects bad tau") {
    CHECK(psi_expsum_exact(3, 7, 3) == 1);
    CHECK(psi_expsum_exact(2, 7, 3) == 0);
    CHECK(psi_expsum_exact(5, 7, 3) == 1);
    CHECK_THROWS_AS(psi_expsum_exact(3, 7, 2), std::domain_error);  // 2 has order 3 mod 7
    CHECK_THROWS_AS(psi_expsum_exact(0, 7, 3), std::domain_error);
}

TEST_CASE("psi_expsum_numeric tracks the exact value") {
    const auto z1 = psi_expsum_numeric(3, 7, 3);
    CHECK(std::abs(z1.real() - 1.0) < 1e-6);
    CHECK(std::abs(z1.imag()) < 1e-6);
    const auto z0 = psi_expsum_numeric(2, 7, 3);
    CHECK(std::abs(z0.real()) < 1e-6);
    const auto one = psi_expsum_numeric(1, 5, 2);
    CHECK(std::abs(one.real()) < 1e-6);

    const std::uint64_t tau = smallest_primitive_root(5003);
    CHECK_THROWS_AS(psi_expsum_numeric(2, 5003, tau), ResourceError);
    // The ceiling is adjustable.
    CHECK_NOTHROW(psi_expsum_numeric(2, 5003, tau, 6000));
}

TEST_CASE("the three routes agree across small primes") {
    for (std::uint64_t p : sieve_primes(200)) {
        const std::uint64_t tau = smallest_primitive_root(p);
        for (std::uint64_t u = 1; u < p; ++u) {
            CAPTURE(p);
            CAPTURE(u);
            const int divisor = psi_divisor(u, p);
            REQUIRE(psi_expsum_exact(u, p, tau) == divisor);
            if (p <= 60) {
                const auto z = psi_expsum_numeric(u, p, tau);
                REQUIRE(std::abs(z.real() - divisor) < 1e-6);
                REQUIRE(std::abs(z.imag()) < 1e-6);
            }
        }
    }
}

TEST_CASE("psi totals recover the primitive-root count") {
    for (std::uint64_t p : sieve_primes(300)) {
        const std::uint64_t tau = smallest_primitive_root(p);
        std::uint64_t total = 0;
        for (std::uint64_t u = 1; u < p; ++u)
            total += static_cast<std::uint64_t>(psi_expsum_exact(u, p, tau));
        CAPTURE(p);
        REQUIRE(total == euler_phi(factorize(p - 1)));
    }
}

TEST_CASE("psi_expsum_exact is independent of the generator chosen") {
    for (std::uint64_t p : sieve_primes(200)) {
        if (p < 3) continue;
        const auto f = factorize(p - 1);
        const std::uint64_t tau = smallest_primitive_root(p);
        // Walk the other generators and compare against the smallest one.
        for (std::uint64_t cand = tau + 1; cand < p; ++cand) {
            if (!is_primitive_root(cand, p, f)) continue;
            for (std::uint64_t u : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{3},
                                    p - 1, p / 2}) {
                if (u % p == 0) continue;
                CAPTURE(p);
                CAPTURE(cand);
                CAPTURE(u);
                REQUIRE(psi_expsum_exact(u, p, cand) == psi_expsum_exact(u, p, tau));
            }
        }
    }
}

TEST_CASE("evaluate_psi carries method metadata") {
    const auto divisor = evaluate_psi(3, 7, PsiMethod::divisor);
    CHECK(divisor.value_exact == 1);
    CHECK(divisor.tau == 0);
    CHECK_FALSE(divisor.value_numeric.has_value());
    CHECK(psi_method_name(divisor.method) == "divisor");

    const auto exact = evaluate_psi(3, 7, PsiMethod::expsum_exact);
    CHECK(exact.value_exact == 1);
    CHECK(exact.tau == 3);

    const auto numeric = evaluate_psi(2, 7, PsiMethod::expsum_numeric);
    CHECK(numeric.value_exact == 0);
    REQUIRE(numeric.value_numeric.has_value());
    CHECK(std::abs(*numeric.value_numeric - numeric.value_exact) < 1e-6);
    CHECK(psi_method_name(numeric.method) == "expsum_numeric");
}
