#include "primcensus/ntheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace primcensus {

namespace {

constexpr std::uint64_t kTrialDivisionLimit = 1'000'000;
constexpr std::uint64_t kDefaultSegment = 1u << 18;

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Odd-only simple sieve for the base primes of the segmented passes.
std::vector<std::uint64_t> simple_sieve(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<char> composite(limit + 1, 0);
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!composite[i]) primes.push_back(i);
    return primes;
}

const std::vector<std::uint64_t>& small_primes() {
    static const std::vector<std::uint64_t> primes = simple_sieve(kTrialDivisionLimit);
    return primes;
}

// Brent's cycle variant of the rho method with polynomial x^2 + c. The c
// and x0 sequences are fixed so repeated runs factor identically.
std::uint64_t brent_rho(std::uint64_t n) {
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        std::uint64_t power = 1, lam = 1;
        while (d == 1) {
            if (power == lam) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = (mul_mod(y, y, n) + c) % n;
            ++lam;
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;  // d == n means the cycle collapsed; retry with next c
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t d = brent_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::uint64_t Factorization::value() const {
    std::uint64_t n = 1;
    for (const auto& f : factors)
        for (std::uint32_t e = 0; e < f.exponent; ++e) n *= f.prime;
    return n;
}

std::uint64_t reduce_mod(std::int64_t v, std::uint64_t m) {
    std::int64_t r = v % static_cast<std::int64_t>(m);
    if (r < 0) r += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(r);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus) {
    if (modulus < 2) throw std::domain_error("pow_mod: modulus must be >= 2");
    std::uint64_t result = 1;
    base %= modulus;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, modulus);
        base = mul_mod(base, base, modulus);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                            29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // First twelve primes: a deterministic witness set for all 64-bit n.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                            29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit,
                                        std::optional<std::uint64_t> segment_hint) {
    if (limit < 2) throw std::domain_error("sieve_primes: limit must be >= 2");

    const std::uint64_t segment = std::max<std::uint64_t>(segment_hint.value_or(kDefaultSegment), 64);
    const std::uint64_t root = isqrt(limit);
    const std::vector<std::uint64_t> base = simple_sieve(root);

    std::vector<std::uint64_t> primes;
    primes.reserve(static_cast<std::size_t>(
        limit > 16 ? 1.2 * static_cast<double>(limit) / std::log(static_cast<double>(limit)) : 8));
    for (std::uint64_t p : base) primes.push_back(p);

    std::vector<char> sieve(segment);
    for (std::uint64_t low = root + 1; low <= limit; low += segment) {
        const std::uint64_t high = std::min(low + segment - 1, limit);
        std::fill(sieve.begin(), sieve.begin() + static_cast<std::ptrdiff_t>(high - low + 1), 1);
        for (std::uint64_t p : base) {
            if (p * p > high) break;
            std::uint64_t first = ((low + p - 1) / p) * p;
            if (first < p * p) first = p * p;
            for (std::uint64_t j = first; j <= high; j += p) sieve[j - low] = 0;
        }
        for (std::uint64_t i = low; i <= high; ++i)
            if (sieve[i - low]) primes.push_back(i);
    }
    return primes;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> primes;
    if (hi < 2 || hi <= lo) return primes;
    const std::uint64_t start = std::max<std::uint64_t>(lo + 1, 2);
    const std::vector<std::uint64_t> base = simple_sieve(isqrt(hi));
    std::vector<char> sieve(hi - start + 1, 1);
    for (std::uint64_t p : base) {
        // Marking starts at p*p: any composite below that has a smaller prime factor.
        std::uint64_t first = std::max(p * p, ((start + p - 1) / p) * p);
        for (std::uint64_t j = first; j <= hi; j += p) sieve[j - start] = 0;
    }
    for (std::uint64_t i = start; i <= hi; ++i)
        if (sieve[i - start]) primes.push_back(i);
    return primes;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::domain_error("factorize: n must be >= 1");
    Factorization result;
    if (n == 1) return result;

    for (std::uint64_t p : small_primes()) {
        if (p * p > n) break;
        if (n % p == 0) {
            std::uint32_t e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            result.factors.push_back({p, e});
        }
    }
    if (n > 1) {
        if (n <= kTrialDivisionLimit * kTrialDivisionLimit && is_prime(n)) {
            result.factors.push_back({n, 1});
        } else {
            std::vector<std::uint64_t> rest;
            factor_into(n, rest);
            std::sort(rest.begin(), rest.end());
            for (std::size_t i = 0; i < rest.size();) {
                std::size_t j = i;
                while (j < rest.size() && rest[j] == rest[i]) ++j;
                result.factors.push_back({rest[i], static_cast<std::uint32_t>(j - i)});
                i = j;
            }
        }
    }
    return result;
}

std::uint64_t euler_phi(const Factorization& f) {
    std::uint64_t phi = 1;
    for (const auto& fp : f.factors) {
        phi *= fp.prime - 1;
        for (std::uint32_t e = 1; e < fp.exponent; ++e) phi *= fp.prime;
    }
    return phi;
}

std::uint64_t euler_phi(std::uint64_t n) { return euler_phi(factorize(n)); }

int mobius(const Factorization& f) {
    for (const auto& fp : f.factors)
        if (fp.exponent >= 2) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t multiplicative_order(std::uint64_t u, std::uint64_t p,
                                   const Factorization& p_minus_1) {
    u %= p;
    if (u == 0) throw std::domain_error("multiplicative_order: p divides u");
    std::uint64_t order = p - 1;
    for (const auto& fp : p_minus_1.factors) {
        while (order % fp.prime == 0 && pow_mod(u, order / fp.prime, p) == 1)
            order /= fp.prime;
    }
    return order;
}

std::uint64_t multiplicative_order(std::uint64_t u, std::uint64_t p) {
    if (p < 2 || !is_prime(p)) throw std::domain_error("multiplicative_order: p must be prime");
    return multiplicative_order(u, p, factorize(p - 1));
}

bool is_primitive_root(std::uint64_t u, std::uint64_t p, const Factorization& p_minus_1) {
    u %= p;
    if (u == 0) return false;
    for (const auto& fp : p_minus_1.factors)
        if (pow_mod(u, (p - 1) / fp.prime, p) == 1) return false;
    return true;
}

bool is_primitive_root(std::uint64_t u, std::uint64_t p) {
    if (p < 2 || !is_prime(p)) throw std::domain_error("is_primitive_root: p must be prime");
    return is_primitive_root(u, p, factorize(p - 1));
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
    if (p < 2 || !is_prime(p)) throw std::domain_error("smallest_primitive_root: p must be prime");
    if (p == 2) return 1;
    const Factorization f = factorize(p - 1);
    for (std::uint64_t u = 1;; ++u) {
        if (is_primitive_root(u, p, f)) return u;
    }
}

PrimeRecord make_prime_record(std::uint64_t p) {
    if (p < 2 || !is_prime(p)) throw std::domain_error("make_prime_record: p must be prime");
    PrimeRecord rec;
    rec.p = p;
    rec.p_minus_1_factors = factorize(p - 1);
    rec.phi_p_minus_1 = euler_phi(rec.p_minus_1_factors);
    if (p == 2) {
        rec.tau = 1;
    } else {
        for (std::uint64_t u = 2;; ++u) {
            if (is_primitive_root(u, p, rec.p_minus_1_factors)) {
                rec.tau = u;
                break;
            }
        }
    }
    return rec;
}

}  // namespace primcensus
