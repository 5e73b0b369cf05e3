#include <doctest.h>

#include <stdexcept>

#include <numeric>

#include "primcensus/ntheory.hpp"

using namespace primcensus;

namespace {

// Simple O(sqrt n) oracle, independent of the library's sieve machinery.
bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Linear-sieve totients: an independent route to phi for bulk comparison.
std::vector<std::uint64_t> totient_table(std::uint64_t n) {
    std::vector<std::uint64_t> phi(n + 1);
    std::vector<std::uint64_t> primes;
    phi[1] = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (phi[i] == 0) {
            phi[i] = i - 1;
            primes.push_back(i);
        }
        for (std::uint64_t p : primes) {
            if (i * p > n) break;
            if (i % p == 0) {
                phi[i * p] = phi[i] * p;
                break;
            }
            phi[i * p] = phi[i] * (p - 1);
        }
    }
    return phi;
}

}  // namespace

TEST_CASE("sieve_primes produces exactly the primes") {
    CHECK(sieve_primes(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(sieve_primes(2) == std::vector<std::uint64_t>{2});
    CHECK(sieve_primes(100).size() == 25);
    CHECK_THROWS_AS(sieve_primes(1), std::domain_error);

    const auto primes = sieve_primes(20'000);
    std::size_t idx = 0;
    for (std::uint64_t n = 2; n <= 20'000; ++n) {
        const bool in_sieve = idx < primes.size() && primes[idx] == n;
        CAPTURE(n);
        REQUIRE(in_sieve == trial_division_prime(n));
        if (in_sieve) ++idx;
    }
}

TEST_CASE("sieve_primes is segment-size independent") {
    const auto reference = sieve_primes(50'000);
    CHECK(sieve_primes(50'000, 128) == reference);
    CHECK(sieve_primes(50'000, 1 << 20) == reference);
}

TEST_CASE("primes_in_range matches the half-open slice of the sieve") {
    const auto all = sieve_primes(30'000);
    const auto slice = primes_in_range(10'000, 30'000);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t p : all)
        if (p > 10'000) expected.push_back(p);
    CHECK(slice == expected);
    CHECK(primes_in_range(0, 10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(primes_in_range(7, 11) == std::vector<std::uint64_t>{11});
    CHECK(primes_in_range(10, 10).empty());
    CHECK(primes_in_range(13, 13).empty());
}

TEST_CASE("is_prime agrees with trial division and handles known composites") {
    for (std::uint64_t n = 0; n <= 5'000; ++n) {
        CAPTURE(n);
        REQUIRE(is_prime(n) == trial_division_prime(n));
    }
    // Carmichael numbers and strong-pseudoprime bait.
    CHECK_FALSE(is_prime(561));
    CHECK_FALSE(is_prime(1729));
    CHECK_FALSE(is_prime(3215031751ull));
    CHECK(is_prime(2147483647ull));           // 2^31 - 1
    CHECK(is_prime(1000000007ull));
    CHECK(is_prime(18446744073709551557ull)); // largest 64-bit prime
    CHECK_FALSE(is_prime(18446744073709551615ull));
}

TEST_CASE("factorize round-trips and yields sorted prime powers") {
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(40) == Factorization{{{2, 3}, {5, 1}}});
    CHECK(factorize(720720) ==
          Factorization{{{2, 4}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {13, 1}}});
    CHECK_THROWS_AS(factorize(0), std::domain_error);

    for (std::uint64_t n = 1; n <= 10'000; ++n) {
        const auto f = factorize(n);
        CAPTURE(n);
        REQUIRE(f.value() == n);
        std::uint64_t prev = 0;
        for (const auto& fp : f.factors) {
            REQUIRE(fp.prime > prev);
            REQUIRE(trial_division_prime(fp.prime));
            REQUIRE(fp.exponent >= 1);
            prev = fp.prime;
        }
    }
}

TEST_CASE("factorize handles large semiprimes beyond the trial-division bound") {
    // 1000003 * 1000033: both factors exceed the sieve cache's reach via trial
    // division squared, forcing the rho fallback.
    const std::uint64_t a = 1'000'003, b = 1'000'033;
    const auto f = factorize(a * b);
    CHECK(f == Factorization{{{a, 1}, {b, 1}}});
    CHECK(factorize(a * a) == Factorization{{{a, 2}}});

    const std::uint64_t p = 2'147'483'647;  // Mersenne prime
    CHECK(factorize(p * 2) == Factorization{{{2, 1}, {p, 1}}});
    CHECK(factorize(p) == Factorization{{{p, 1}}});
}

TEST_CASE("euler_phi matches brute force and the linear sieve") {
    CHECK(euler_phi(factorize(1)) == 1);
    CHECK(euler_phi(factorize(40)) == 16);
    CHECK(euler_phi(factorize(100)) == 40);

    for (std::uint64_t n = 1; n <= 2'000; ++n) {
        std::uint64_t count = 0;
        for (std::uint64_t m = 1; m <= n; ++m)
            if (std::gcd(m, n) == 1) ++count;
        CAPTURE(n);
        REQUIRE(euler_phi(factorize(n)) == count);
    }

    const auto phi = totient_table(100'000);
    for (std::uint64_t n = 1; n <= 100'000; ++n) {
        CAPTURE(n);
        REQUIRE(euler_phi(factorize(n)) == phi[n]);
    }
}

TEST_CASE("mobius by definition") {
    CHECK(mobius(factorize(1)) == 1);
    CHECK(mobius(factorize(12)) == 0);
    CHECK(mobius(factorize(30)) == -1);
    CHECK(mobius(factorize(6)) == 1);

    // Mertens-style partial sums as a cross-check of the sign pattern.
    long long mertens = 0;
    for (std::uint64_t n = 1; n <= 10'000; ++n) mertens += mobius(factorize(n));
    CHECK(mertens == -23);  // known value of M(10^4)
}

TEST_CASE("pow_mod and mul_mod stay exact at 64-bit scale") {
    CHECK(pow_mod(2, 10, 1024) == 0);
    CHECK(pow_mod(3, 6, 7) == 1);
    CHECK(pow_mod(5, 0, 13) == 1);
    CHECK_THROWS_AS(pow_mod(2, 3, 1), std::domain_error);

    const std::uint64_t m = 0x3FFFFFFFFFFFFFFFull;  // near the working ceiling
    const std::uint64_t a = m - 12345, b = m - 67890;
    CHECK(mul_mod(a, b, m) ==
          static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m));
    // Fermat: a^(p-1) = 1 mod p for large prime p.
    const std::uint64_t p = 1'000'000'007;
    CHECK(pow_mod(123456789, p - 1, p) == 1);
}

TEST_CASE("reduce_mod folds signed values into [0, m)") {
    CHECK(reduce_mod(7, 5) == 2);
    CHECK(reduce_mod(-1, 5) == 4);
    CHECK(reduce_mod(-10, 5) == 0);
    CHECK(reduce_mod(0, 7) == 0);
    CHECK(reduce_mod(-13, 7) == 1);
}

TEST_CASE("multiplicative_order agrees with naive enumeration") {
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(1, 13) == 1);
    CHECK(multiplicative_order(3, 7) == 6);
    CHECK_THROWS_AS(multiplicative_order(14, 7), std::domain_error);

    for (std::uint64_t p : sieve_primes(200)) {
        for (std::uint64_t u = 1; u < p; ++u) {
            std::uint64_t k = 1, power = u % p;
            while (power != 1) {
                power = mul_mod(power, u, p);
                ++k;
            }
            CAPTURE(p);
            CAPTURE(u);
            REQUIRE(multiplicative_order(u, p) == k);
        }
    }
}

TEST_CASE("primitive root predicates and counts") {
    CHECK(is_primitive_root(2, 11));
    CHECK_FALSE(is_primitive_root(2, 7));
    CHECK_FALSE(is_primitive_root(1, 5));
    CHECK_FALSE(is_primitive_root(0, 7));
    CHECK_FALSE(is_primitive_root(49, 7));

    for (std::uint64_t p : sieve_primes(2'000)) {
        const auto f = factorize(p - 1);
        std::uint64_t count = 0;
        for (std::uint64_t u = 1; u < p; ++u) {
            const bool root = is_primitive_root(u, p, f);
            if (root) ++count;
            if (p <= 200)
                REQUIRE(root == (multiplicative_order(u, p, f) == p - 1));
        }
        CAPTURE(p);
        REQUIRE(count == euler_phi(f));
    }
}

TEST_CASE("smallest_primitive_root finds the least witness") {
    CHECK(smallest_primitive_root(2) == 1);
    CHECK(smallest_primitive_root(3) == 2);
    CHECK(smallest_primitive_root(7) == 3);
    CHECK(smallest_primitive_root(41) == 6);
    CHECK_THROWS_AS(smallest_primitive_root(10), std::domain_error);

    for (std::uint64_t p : sieve_primes(500)) {
        const std::uint64_t tau = smallest_primitive_root(p);
        CAPTURE(p);
        REQUIRE(is_primitive_root(tau, p));
        for (std::uint64_t u = 1; u < tau; ++u) REQUIRE_FALSE(is_primitive_root(u, p));
    }
}

TEST_CASE("make_prime_record assembles consistent records") {
    const PrimeRecord rec = make_prime_record(41);
    CHECK(rec.p == 41);
    CHECK(rec.tau == 6);
    CHECK(rec.phi_p_minus_1 == 16);
    CHECK(rec.p_minus_1_factors == Factorization{{{2, 3}, {5, 1}}});

    const PrimeRecord two = make_prime_record(2);
    CHECK(two.tau == 1);
    CHECK(two.phi_p_minus_1 == 1);
    CHECK(two.p_minus_1_factors.factors.empty());
    CHECK_THROWS_AS(make_prime_record(100), std::domain_error);
}
