#include "primcensus/verify.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <numeric>
#include <random>

#include "primcensus/cache.hpp"
#include "primcensus/census.hpp"
#include "primcensus/charfun.hpp"
#include "primcensus/density.hpp"
#include "primcensus/expsums.hpp"
#include "primcensus/ntheory.hpp"

namespace primcensus {

namespace {

void check(bool ok, const char* name, const std::string& detail) {
    if (!ok) throw VerifyFailure(name, detail);
}

void sieve_matches_trial_division() {
    const auto primes = sieve_primes(10'000);
    std::size_t idx = 0;
    for (std::uint64_t n = 2; n <= 10'000; ++n) {
        const bool sieved = idx < primes.size() && primes[idx] == n;
        check(sieved == is_prime(n), "sieve-matches-trial-division",
              "disagreement at n=" + std::to_string(n));
        if (sieved) ++idx;
    }
    check(idx == primes.size(), "sieve-matches-trial-division", "sieve emitted extra entries");
}

void factorize_roundtrip() {
    for (std::uint64_t n = 1; n <= 20'000; ++n) {
        const Factorization f = factorize(n);
        check(f.value() == n, "factorize-roundtrip", "product mismatch at n=" + std::to_string(n));
        std::uint64_t prev = 0;
        for (const auto& fp : f.factors) {
            check(fp.prime > prev && is_prime(fp.prime), "factorize-roundtrip",
                  "bad factor at n=" + std::to_string(n));
            prev = fp.prime;
        }
    }
}

void totient_brute_force() {
    for (std::uint64_t n = 1; n <= 3'000; ++n) {
        std::uint64_t count = 0;
        for (std::uint64_t m = 1; m <= n; ++m)
            if (std::gcd(m, n) == 1) ++count;
        check(euler_phi(factorize(n)) == count, "totient-brute-force",
              "mismatch at n=" + std::to_string(n));
    }
}

void primitive_root_count() {
    for (std::uint64_t p : sieve_primes(500)) {
        std::uint64_t found = 0;
        for (std::uint64_t u = 1; u < p; ++u)
            if (is_primitive_root(u, p)) ++found;
        check(found == euler_phi(factorize(p - 1)), "primitive-root-count",
              "mismatch at p=" + std::to_string(p));
    }
}

void order_divides_group() {
    for (std::uint64_t p : sieve_primes(300)) {
        for (std::uint64_t u = 1; u < p; ++u) {
            const std::uint64_t ord = multiplicative_order(u, p);
            check((p - 1) % ord == 0, "order-divides-group",
                  "order does not divide p-1 at p=" + std::to_string(p) +
                      " u=" + std::to_string(u));
            check((ord == p - 1) == is_primitive_root(u, p), "order-divides-group",
                  "order/indicator disagreement at p=" + std::to_string(p) +
                      " u=" + std::to_string(u));
        }
    }
}

void psi_routes_agree() {
    for (std::uint64_t p : sieve_primes(200)) {
        const std::uint64_t tau = smallest_primitive_root(p);
        for (std::uint64_t u = 1; u < p; ++u) {
            const int a = psi_divisor(u, p);
            const int b = psi_expsum_exact(u, p, tau);
            check(a == b, "psi-routes-agree",
                  "divisor vs exact at p=" + std::to_string(p) + " u=" + std::to_string(u));
            if (p <= 60) {
                const auto z = psi_expsum_numeric(u, p, tau);
                check(std::abs(z.real() - a) < 1e-6 && std::abs(z.imag()) < 1e-6,
                      "psi-routes-agree",
                      "numeric drift at p=" + std::to_string(p) + " u=" + std::to_string(u));
            }
        }
    }
}

void psi_count_identity() {
    for (std::uint64_t p : sieve_primes(300)) {
        std::uint64_t total = 0;
        for (std::uint64_t u = 1; u < p; ++u)
            total += static_cast<std::uint64_t>(psi_divisor(u, p));
        check(total == euler_phi(factorize(p - 1)), "psi-count-identity",
              "sum mismatch at p=" + std::to_string(p));
    }
}

void gauss_magnitude() {
    for (std::uint64_t p : sieve_primes(31)) {
        if (p < 5) continue;
        const std::uint64_t tau = smallest_primitive_root(p);
        const double target = std::sqrt(static_cast<double>(p));
        for (std::uint64_t t = 1; t <= p - 2; ++t)
            for (std::uint64_t s = 1; s <= p - 1; ++s) {
                const double mag = std::abs(lagrange_resolvent(t, s, p, tau));
                check(std::abs(mag - target) < 1e-6, "gauss-magnitude",
                      "p=" + std::to_string(p) + " t=" + std::to_string(t) +
                          " s=" + std::to_string(s));
            }
    }
}

void resolvent_inversion() {
    // (p-1) e^{2pi i s tau^n / p} recovered by summing resolvents against omega^{tn}.
    for (std::uint64_t p : {7ull, 11ull, 13ull}) {
        const std::uint64_t tau = smallest_primitive_root(p);
        for (std::uint64_t s : {1ull, 2ull}) {
            for (std::uint64_t n = 1; n <= p - 1; n += 2) {
                std::complex<double> total = 0;
                for (std::uint64_t t = 0; t <= p - 2; ++t) {
                    const double angle = 2.0 * std::numbers::pi *
                                         static_cast<double>(mul_mod(t, n, p - 1)) /
                                         static_cast<double>(p - 1);
                    total += lagrange_resolvent(t, s, p, tau) * std::polar(1.0, angle);
                }
                const double angle = 2.0 * std::numbers::pi *
                                     static_cast<double>(mul_mod(s, pow_mod(tau, n, p), p)) /
                                     static_cast<double>(p);
                const auto expected =
                    static_cast<double>(p - 1) * std::polar(1.0, angle);
                check(std::abs(total - expected) < 1e-6, "resolvent-inversion",
                      "p=" + std::to_string(p) + " s=" + std::to_string(s) +
                          " n=" + std::to_string(n));
            }
        }
    }
}

void complete_sum_identity() {
    for (std::uint64_t p : sieve_primes(31)) {
        if (p < 3) continue;
        const std::uint64_t tau = smallest_primitive_root(p);
        for (std::uint64_t s = 1; s <= p - 1; ++s) {
            const auto z = exp_sum_prefix(s, p, tau, p - 1);
            check(std::abs(z - std::complex<double>(-1.0, 0.0)) < 1e-9,
                  "complete-sum-identity",
                  "p=" + std::to_string(p) + " s=" + std::to_string(s));
        }
    }
}

void ramanujan_oracle() {
    for (std::uint64_t p : sieve_primes(100)) {
        if (p < 3) continue;
        for (std::uint64_t t = 0; t <= p - 2; ++t) {
            const auto z = coprime_unity_sum(t, p);
            check(std::abs(z.imag()) < 1e-9, "ramanujan-oracle",
                  "imaginary residue at p=" + std::to_string(p) + " t=" + std::to_string(t));
            check(std::llround(z.real()) == ramanujan_sum(p - 1, t), "ramanujan-oracle",
                  "closed form mismatch at p=" + std::to_string(p) + " t=" + std::to_string(t));
        }
    }
}

void aq_monotone_tail() {
    DensityConstant prev = truncated_Aq(2, 1, 1'000);
    for (std::uint64_t P : {10'000ull, 100'000ull}) {
        const DensityConstant cur = truncated_Aq(2, 1, P);
        check(cur.value > 0.0 && cur.value <= prev.value, "aq-monotone-tail",
              "not monotone at P=" + std::to_string(P));
        check(prev.value - cur.value <= prev.value * prev.tail_bound + 1e-15,
              "aq-monotone-tail", "tail bound violated at P=" + std::to_string(P));
        prev = cur;
    }
}

void li_additivity() {
    // Composite-Simpson second opinion on [10, 1000].
    const double a = 10.0, b = 1000.0;
    const int n = 20'000;
    const double h = (b - a) / n;
    double total = 1.0 / std::log(a) + 1.0 / std::log(b);
    for (int i = 1; i < n; ++i)
        total += (i % 2 == 1 ? 4.0 : 2.0) / std::log(a + i * h);
    total *= h / 3.0;
    const double via_li = log_integral(b) - log_integral(a);
    check(std::abs(via_li - total) < 2e-6, "li-additivity",
          "difference " + std::to_string(via_li - total));
}

void brun_titchmarsh_holds() {
    for (std::uint64_t x : {1'000ull, 10'000ull}) {
        for (std::uint64_t q : {1ull, 3ull, 4ull}) {
            for (std::uint64_t a = 0; a < q; ++a) {
                if (std::gcd(a, q) != 1 && q > 1) continue;
                const auto chk = brun_titchmarsh_check(x, ResidueClass(q, a));
                check(chk.satisfied, "brun-titchmarsh",
                      "violated at x=" + std::to_string(x) + " q=" + std::to_string(q) +
                          " a=" + std::to_string(a));
            }
        }
    }
}

void decomposition_identity() {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<std::uint64_t> xd(10, 5'000), qd(1, 10);
    std::uniform_int_distribution<std::int64_t> ud(-50, 50);
    for (int i = 0; i < 20; ++i) {
        const std::uint64_t q = qd(rng);
        std::uint64_t a = 0;
        if (q > 1) {
            do {
                a = rng() % q;
            } while (std::gcd(a, q) != 1);
        }
        std::int64_t u = 0;
        while (u == 0) u = ud(rng);
        const auto d = interval_decomposition(xd(rng), ResidueClass(q, a), u);
        const double gap =
            std::abs(static_cast<double>(d.psi_sum) - d.main_term - d.error_term);
        check(gap < 1e-9, "decomposition-identity", "gap " + std::to_string(gap));
    }
}

void census_ground_truth() {
    check(count_primes_ap(100, ResidueClass(4, 1)) == 11, "census-ground-truth",
          "count_primes_ap(100, 4, 1)");
    check(count_primes_ap(100, ResidueClass(1, 0)) == 25, "census-ground-truth",
          "count_primes_ap(100, 1, 0)");
    const auto census = count_pr_primes(100, ResidueClass(2, 1), 2);
    check(census.pi_u == 12, "census-ground-truth", "pi_u at x=100");
    check(census.pi == 24, "census-ground-truth", "pi at x=100");
}

void cache_roundtrip() {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "primcensus-verify-cache.csv";
    std::vector<PrimeRecord> records;
    for (std::uint64_t p : sieve_primes(1'000)) records.push_back(make_prime_record(p));
    cache_write(path.string(), records);
    const auto back = cache_read(path.string());
    fs::remove(path);
    check(back == records, "cache-roundtrip", "records changed across write/read");
}

struct NamedCheck {
    const char* name;
    void (*fn)();
};

constexpr NamedCheck kChecks[] = {
    {"sieve-matches-trial-division", sieve_matches_trial_division},
    {"factorize-roundtrip", factorize_roundtrip},
    {"totient-brute-force", totient_brute_force},
    {"primitive-root-count", primitive_root_count},
    {"order-divides-group", order_divides_group},
    {"psi-routes-agree", psi_routes_agree},
    {"psi-count-identity", psi_count_identity},
    {"gauss-magnitude", gauss_magnitude},
    {"resolvent-inversion", resolvent_inversion},
    {"complete-sum-identity", complete_sum_identity},
    {"ramanujan-oracle", ramanujan_oracle},
    {"aq-monotone-tail", aq_monotone_tail},
    {"li-additivity", li_additivity},
    {"brun-titchmarsh", brun_titchmarsh_holds},
    {"decomposition-identity", decomposition_identity},
    {"census-ground-truth", census_ground_truth},
    {"cache-roundtrip", cache_roundtrip},
};

}  // namespace

void run_verify(std::ostream& out) {
    for (const auto& c : kChecks) {
        c.fn();
        out << "ok " << c.name << '\n';
    }
}

}  // namespace primcensus
