#include "primcensus/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "primcensus/complexsum.hpp"

namespace primcensus {

namespace {

// Fixed segment span, independent of the worker count: every run partitions
// the range identically, so per-segment subtotals and the ordered reduction
// below give bit-identical floating results for any number of workers.
constexpr std::uint64_t kSegmentSpan = 1u << 16;

// Applies fn to each segment (seg_lo, seg_hi] covering (lo, hi]; workers
// claim segment indices from an atomic counter. Results are indexed by
// segment for order-fixed reduction.
template <typename T, typename Fn>
std::vector<T> scan_segments(std::uint64_t lo, std::uint64_t hi, unsigned workers, Fn fn) {
    const std::uint64_t total = hi > lo ? hi - lo : 0;
    const std::uint64_t count = (total + kSegmentSpan - 1) / kSegmentSpan;
    std::vector<T> parts(count);
    if (count == 0) return parts;

    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (std::uint64_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            const std::uint64_t seg_lo = lo + i * kSegmentSpan;
            const std::uint64_t seg_hi = std::min(seg_lo + kSegmentSpan, hi);
            parts[i] = fn(seg_lo, seg_hi);
        }
    };
    const unsigned pool_size =
        static_cast<unsigned>(std::min<std::uint64_t>(std::max(workers, 1u), count));
    if (pool_size <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(pool_size);
        for (unsigned w = 0; w < pool_size; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return parts;
}

struct CensusPart {
    std::uint64_t pi = 0;
    std::uint64_t pi_u = 0;
    std::uint64_t skipped = 0;
    double phi_ratio = 0.0;
    double phi_over_p = 0.0;
};

struct TotientPart {
    double phi_ratio = 0.0;
    double phi_over_p = 0.0;
};

struct DecompositionPart {
    std::uint64_t psi_sum = 0;
    double main_term = 0.0;
    double error_term = 0.0;
};

void require_x(std::uint64_t x, std::uint64_t least, const char* who) {
    if (x < least)
        throw std::domain_error(std::string(who) + ": x must be >= " + std::to_string(least));
}

}  // namespace

ResidueClass::ResidueClass(std::uint64_t q_, std::uint64_t a_) : q(q_), a(a_) {
    if (q == 0) throw std::domain_error("ResidueClass: q must be >= 1");
    if (a >= q) throw std::domain_error("ResidueClass: a must lie in [0, q-1]");
    if (q > 1 && std::gcd(a, q) != 1)
        throw std::domain_error("ResidueClass: gcd(a, q) must be 1");
}

std::uint64_t count_primes_ap(std::uint64_t x, const ResidueClass& cls, unsigned workers) {
    require_x(x, 2, "count_primes_ap");
    const auto parts = scan_segments<std::uint64_t>(
        1, x, workers, [&](std::uint64_t lo, std::uint64_t hi) {
            std::uint64_t n = 0;
            for (std::uint64_t p : primes_in_range(lo, hi))
                if (cls.contains(p)) ++n;
            return n;
        });
    std::uint64_t total = 0;
    for (std::uint64_t n : parts) total += n;
    return total;
}

CensusResult count_pr_primes(std::uint64_t x, const ResidueClass& cls, std::int64_t u,
                             unsigned workers) {
    require_x(x, 2, "count_pr_primes");
    if (u == 0) throw std::domain_error("count_pr_primes: u must be nonzero");

    const auto parts = scan_segments<CensusPart>(
        1, x, workers, [&](std::uint64_t lo, std::uint64_t hi) {
            CensusPart part;
            KahanAccumulator ratio, over_p;
            for (std::uint64_t p : primes_in_range(lo, hi)) {
                if (!cls.contains(p)) continue;
                ++part.pi;
                const std::uint64_t residue = reduce_mod(u, p);
                if (residue == 0) {
                    ++part.skipped;
                    continue;
                }
                const Factorization f = factorize(p - 1);
                const auto phi = static_cast<double>(euler_phi(f));
                if (is_primitive_root(residue, p, f)) ++part.pi_u;
                ratio.add(phi / static_cast<double>(p - 1));
                over_p.add(phi / static_cast<double>(p));
            }
            part.phi_ratio = ratio.value();
            part.phi_over_p = over_p.value();
            return part;
        });

    CensusResult result;
    result.x = x;
    result.cls = cls;
    result.u = u;
    KahanAccumulator ratio, over_p;
    for (const auto& part : parts) {
        result.pi += part.pi;
        result.pi_u += part.pi_u;
        result.skipped += part.skipped;
        ratio.add(part.phi_ratio);
        over_p.add(part.phi_over_p);
    }
    result.sum_phi_ratio = ratio.value();
    result.sum_phi_over_p = over_p.value();
    return result;
}

namespace {

TotientPart totient_sums(std::uint64_t x, const ResidueClass& cls, unsigned workers) {
    const auto parts = scan_segments<TotientPart>(
        1, x, workers, [&](std::uint64_t lo, std::uint64_t hi) {
            KahanAccumulator ratio, over_p;
            for (std::uint64_t p : primes_in_range(lo, hi)) {
                if (!cls.contains(p)) continue;
                const auto phi = static_cast<double>(euler_phi(factorize(p - 1)));
                ratio.add(phi / static_cast<double>(p - 1));
                over_p.add(phi / static_cast<double>(p));
            }
            return TotientPart{ratio.value(), over_p.value()};
        });
    KahanAccumulator ratio, over_p;
    for (const auto& part : parts) {
        ratio.add(part.phi_ratio);
        over_p.add(part.phi_over_p);
    }
    return {ratio.value(), over_p.value()};
}

}  // namespace

double totient_ratio_sum(std::uint64_t x, const ResidueClass& cls, unsigned workers) {
    require_x(x, 2, "totient_ratio_sum");
    return totient_sums(x, cls, workers).phi_ratio;
}

double totient_over_p_sum(std::uint64_t x, const ResidueClass& cls, unsigned workers) {
    require_x(x, 2, "totient_over_p_sum");
    return totient_sums(x, cls, workers).phi_over_p;
}

IntervalDecomposition interval_decomposition(std::uint64_t x, const ResidueClass& cls,
                                             std::int64_t u, unsigned workers) {
    require_x(x, 2, "interval_decomposition");
    if (u == 0) throw std::domain_error("interval_decomposition: u must be nonzero");

    const auto parts = scan_segments<DecompositionPart>(
        x, 2 * x, workers, [&](std::uint64_t lo, std::uint64_t hi) {
            DecompositionPart part;
            KahanAccumulator main_term, error_term;
            for (std::uint64_t p : primes_in_range(lo, hi)) {
                if (!cls.contains(p)) continue;
                const std::uint64_t residue = reduce_mod(u, p);
                if (residue == 0) continue;
                const Factorization f = factorize(p - 1);
                // The same double enters both aggregates, so the identity
                // psi_sum = main + error survives rounding.
                const double m = static_cast<double>(euler_phi(f)) / static_cast<double>(p);
                const int psi = is_primitive_root(residue, p, f) ? 1 : 0;
                part.psi_sum += static_cast<std::uint64_t>(psi);
                main_term.add(m);
                error_term.add(static_cast<double>(psi) - m);
            }
            part.main_term = main_term.value();
            part.error_term = error_term.value();
            return part;
        });

    IntervalDecomposition result;
    result.x = x;
    result.cls = cls;
    result.u = u;
    KahanAccumulator main_term, error_term;
    for (const auto& part : parts) {
        result.psi_sum += part.psi_sum;
        main_term.add(part.main_term);
        error_term.add(part.error_term);
    }
    result.main_term = main_term.value();
    result.error_term = error_term.value();
    return result;
}

BrunTitchmarshCheck brun_titchmarsh_check(std::uint64_t x, const ResidueClass& cls,
                                          unsigned workers) {
    require_x(x, 3, "brun_titchmarsh_check");
    BrunTitchmarshCheck check;
    check.x = x;
    check.cls = cls;
    const auto parts = scan_segments<std::uint64_t>(
        x, 2 * x, workers, [&](std::uint64_t lo, std::uint64_t hi) {
            std::uint64_t n = 0;
            for (std::uint64_t p : primes_in_range(lo, hi))
                if (cls.contains(p)) ++n;
            return n;
        });
    for (std::uint64_t n : parts) check.lhs += n;
    const auto phi_q = static_cast<double>(euler_phi(factorize(cls.q)));
    check.rhs = 3.0 * static_cast<double>(x) / (phi_q * std::log(static_cast<double>(x)));
    check.satisfied = static_cast<double>(check.lhs) <= check.rhs;
    return check;
}

std::vector<std::string> census_warnings(std::uint64_t x, const ResidueClass& cls,
                                         std::int64_t u) {
    std::vector<std::string> warnings;
    if (u == 1 || u == -1)
        warnings.push_back("u = " + std::to_string(u) +
                           " has order at most 2 and is almost never a primitive root");
    if (u > 1) {
        const auto root = static_cast<std::int64_t>(
            std::llround(std::sqrt(static_cast<double>(u))));
        if (root * root == u)
            warnings.push_back("u = " + std::to_string(u) +
                               " is a perfect square and is never a primitive root mod an odd prime");
    }
    const double lnx = std::log(static_cast<double>(x));
    if (static_cast<double>(cls.q) > lnx * lnx * lnx)
        warnings.push_back("q = " + std::to_string(cls.q) +
                           " exceeds (ln x)^3; asymptotic error terms are vacuous in this regime");
    return warnings;
}

}  // namespace primcensus
