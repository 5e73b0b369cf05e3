#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "primcensus/complexsum.hpp"
#include "primcensus/density.hpp"
#include "primcensus/ntheory.hpp"

using namespace primcensus;
using doctest::Approx;

TEST_CASE("truncated_Aq reproduces Artin's constant for q = 2") {
    const auto c = truncated_Aq(2, 1, 1'000'000);
    CHECK(c.value == Approx(0.3739558).epsilon(1e-6));
    CHECK(c.tail_bound == Approx(1e-6));
    CHECK(c.truncation_P == 1'000'000);

    // Independent route: exponentiate a compensated log-sum of the same factors.
    KahanAccumulator logsum;
    logsum.add(std::log1p(-0.5));  // first product: p = 2 divides gcd(a-1, q) = 2
    for (std::uint64_t p : sieve_primes(1'000'000)) {
        if (p == 2) continue;
        const double pd = static_cast<double>(p);
        logsum.add(std::log1p(-1.0 / (pd * (pd - 1.0))));
    }
    CHECK(c.value == Approx(std::exp(logsum.value())).epsilon(1e-12));
}

TEST_CASE("truncated_Aq handles the progression-dependent first product") {
    // a = 2, q = 3: gcd(a-1, q) = 1 so the first product is empty.
    CHECK(truncated_Aq(3, 2, 1'000'000).value == Approx(0.4487470).epsilon(1e-6));
    // a = 1, q = 3: gcd(0, 3) = 3 contributes (1 - 1/3).
    CHECK(truncated_Aq(3, 1, 1'000'000).value ==
          Approx((2.0 / 3.0) * 0.44874698).epsilon(1e-6));
    // q = 1 keeps every prime in the second product and has no first product.
    CHECK(truncated_Aq(1, 0, 1'000'000).value == Approx(0.3739558).epsilon(1e-6));

    CHECK_THROWS_AS(truncated_Aq(4, 2, 1'000), std::domain_error);
    CHECK_THROWS_AS(truncated_Aq(2, 1, 1), std::domain_error);
    CHECK_THROWS_AS(truncated_Aq(0, 1, 100), std::domain_error);
}

TEST_CASE("truncated_Aq is monotone in P with the promised tail") {
    const auto coarse = truncated_Aq(2, 1, 1'000);
    const auto mid = truncated_Aq(2, 1, 100'000);
    const auto fine = truncated_Aq(2, 1, 1'000'000);
    CHECK(mid.value <= coarse.value);
    CHECK(fine.value <= mid.value);
    CHECK(coarse.value - mid.value <= coarse.value * coarse.tail_bound);
    CHECK(mid.value - fine.value <= mid.value * mid.tail_bound);
    CHECK(coarse.tail_bound == Approx(1e-3));
}

TEST_CASE("log_integral reference values") {
    CHECK(log_integral(2.0) == 0.0);
    CHECK(log_integral(100.0) == Approx(29.08098).epsilon(1e-5));
    CHECK(log_integral(1'000'000.0) == Approx(78626.503995).epsilon(1e-7));
    CHECK_THROWS_AS(log_integral(1.9), std::domain_error);
    CHECK_THROWS_AS(log_integral(-5.0), std::domain_error);
}

TEST_CASE("log_integral is additive over subintervals") {
    // Composite Simpson on [50, 300] as an independent quadrature.
    const double a = 50.0, b = 300.0;
    const int n = 10'000;
    const double h = (b - a) / n;
    double total = 1.0 / std::log(a) + 1.0 / std::log(b);
    for (int i = 1; i < n; ++i)
        total += (i % 2 == 1 ? 4.0 : 2.0) / std::log(a + i * h);
    total *= h / 3.0;
    CHECK(log_integral(b) - log_integral(a) == Approx(total).epsilon(1e-9));
}

TEST_CASE("log_integral obeys the first-order asymptote envelope") {
    for (double x : {1e4, 1e5, 1e6}) {
        const double li = log_integral(x);
        const double main = x / std::log(x);
        CHECK(std::abs(li - main) <= 3.0 * x / (std::log(x) * std::log(x)));
    }
}

TEST_CASE("empirical_density from a census") {
    const auto census = count_pr_primes(100, ResidueClass(2, 1), 2);
    const auto est = empirical_density(census);
    CHECK(est.delta_hat == Approx(12.0 / 24.0));
    CHECK(est.a_u_hat == Approx(0.5 / 0.3739558).epsilon(1e-5));
    CHECK(est.x == 100);
    CHECK(est.u == 2);

    const auto squares = count_pr_primes(1'000, ResidueClass(2, 1), 9);
    CHECK(empirical_density(squares).delta_hat == 0.0);

    CensusResult empty;
    empty.x = 2;
    empty.cls = ResidueClass(2, 1);
    empty.u = 2;
    CHECK_THROWS_AS(empirical_density(empty), std::domain_error);
}
