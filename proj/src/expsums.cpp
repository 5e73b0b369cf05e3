#include "primcensus/expsums.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "primcensus/complexsum.hpp"
#include "primcensus/ntheory.hpp"

namespace primcensus {

namespace {

void require_prime(std::uint64_t p, const char* who) {
    if (p < 2 || !is_prime(p)) throw std::domain_error(std::string(who) + ": p must be prime");
}

Factorization require_primitive_root(std::uint64_t tau, std::uint64_t p, const char* who) {
    Factorization f = factorize(p - 1);
    if (!is_primitive_root(tau, p, f))
        throw std::domain_error(std::string(who) + ": tau is not a primitive root");
    return f;
}

double finalize(ProbeReport& report) {
    double max_ratio = 0.0;
    for (const auto& s : report.samples) {
        max_ratio = std::max(max_ratio, s.ratio);
        if (s.ratio > 1.0) report.violations.push_back(s);
    }
    report.max_ratio = max_ratio;
    return max_ratio;
}

}  // namespace

std::complex<double> exp_sum_coprime(std::uint64_t s, std::uint64_t p, std::uint64_t tau) {
    require_prime(p, "exp_sum_coprime");
    require_primitive_root(tau, p, "exp_sum_coprime");
    if (s > p - 1) throw std::domain_error("exp_sum_coprime: s out of range");

    const auto zeta = roots_of_unity(p);
    ComplexKahan total;
    std::uint64_t power = 1;
    for (std::uint64_t n = 1; n <= p - 1; ++n) {
        power = mul_mod(power, tau % p, p);
        if (std::gcd(n, p - 1) == 1) total.add(zeta[mul_mod(s, power, p)]);
    }
    return total.value();
}

std::complex<double> exp_sum_prefix(std::uint64_t s, std::uint64_t p, std::uint64_t tau,
                                    std::uint64_t x) {
    require_prime(p, "exp_sum_prefix");
    require_primitive_root(tau, p, "exp_sum_prefix");
    if (s < 1 || s > p - 1) throw std::domain_error("exp_sum_prefix: s out of range");
    if (x < 1 || x > p - 1) throw std::domain_error("exp_sum_prefix: x out of range");

    const auto zeta = roots_of_unity(p);
    ComplexKahan total;
    std::uint64_t power = 1;
    for (std::uint64_t n = 1; n <= x; ++n) {
        power = mul_mod(power, tau % p, p);
        total.add(zeta[mul_mod(s, power, p)]);
    }
    return total.value();
}

std::complex<double> lagrange_resolvent(std::uint64_t t, std::uint64_t s, std::uint64_t p,
                                        std::uint64_t tau) {
    require_prime(p, "lagrange_resolvent");
    require_primitive_root(tau, p, "lagrange_resolvent");
    if (t > p - 2) throw std::domain_error("lagrange_resolvent: t out of range");
    if (s < 1 || s > p - 1) throw std::domain_error("lagrange_resolvent: s out of range");

    const auto omega = roots_of_unity(p - 1);
    const auto zeta = roots_of_unity(p);
    ComplexKahan total;
    std::uint64_t power = 1;  // tau^j
    for (std::uint64_t j = 0; j <= p - 2; ++j) {
        // omega^{-tj} indexed as (p-1) - (tj mod (p-1)), folded into [0, p-2]
        const std::uint64_t tj = mul_mod(t, j, p - 1);
        const std::uint64_t neg = tj == 0 ? 0 : p - 1 - tj;
        total.add(omega[neg] * zeta[mul_mod(s, power, p)]);
        power = mul_mod(power, tau % p, p);
    }
    return total.value();
}

std::complex<double> coprime_unity_sum(std::uint64_t t, std::uint64_t p) {
    require_prime(p, "coprime_unity_sum");
    if (p == 2) return {1.0, 0.0};  // single term n = 1, e^{0}

    const std::uint64_t m = p - 1;
    const auto omega = roots_of_unity(m);
    ComplexKahan total;
    for (std::uint64_t n = 1; n <= m; ++n) {
        if (std::gcd(n, m) == 1) total.add(omega[mul_mod(t % m, n, m)]);
    }
    return total.value();
}

std::int64_t ramanujan_sum(std::uint64_t m, std::uint64_t t) {
    if (m < 1) throw std::domain_error("ramanujan_sum: m must be >= 1");
    const std::uint64_t g = std::gcd(t, m);  // gcd(0, m) = m covers t = 0
    const Factorization f_m = factorize(m);
    const Factorization f_mg = factorize(m / g);
    const int mu = mobius(f_mg);
    if (mu == 0) return 0;
    const std::uint64_t phi_m = euler_phi(f_m);
    const std::uint64_t phi_mg = euler_phi(f_mg);
    return static_cast<std::int64_t>(mu) * static_cast<std::int64_t>(phi_m / phi_mg);
}

std::string probe_kind_name(ProbeKind kind) {
    switch (kind) {
        case ProbeKind::lemma31: return "lemma31";
        case ProbeKind::lemma32: return "lemma32";
        case ProbeKind::lemma33: return "lemma33";
        case ProbeKind::thm32: return "thm32";
    }
    throw std::domain_error("probe_kind_name: unknown kind");
}

ProbeKind probe_kind_from_name(const std::string& name) {
    if (name == "lemma31") return ProbeKind::lemma31;
    if (name == "lemma32") return ProbeKind::lemma32;
    if (name == "lemma33") return ProbeKind::lemma33;
    if (name == "thm32") return ProbeKind::thm32;
    throw std::domain_error("probe_kind_from_name: unknown kind '" + name + "'");
}

ProbeReport probe_lemma31(std::uint64_t p, std::uint64_t tau, double epsilon) {
    require_prime(p, "probe_lemma31");
    if (epsilon <= 0.0 || epsilon >= 1.0)
        throw std::domain_error("probe_lemma31: epsilon must lie in (0, 1)");
    ProbeReport report;
    report.p = p;
    report.kind = ProbeKind::lemma31;
    report.epsilon = epsilon;
    const double bound = std::pow(static_cast<double>(p), 1.0 - epsilon);
    for (std::uint64_t s = 1; s <= p - 1; ++s) {
        if (std::gcd(s, p - 1) != 1) continue;
        const double observed = std::abs(exp_sum_coprime(s, p, tau));
        report.samples.push_back({static_cast<std::int64_t>(s), -1, observed, bound,
                                  observed / bound});
    }
    finalize(report);
    return report;
}

ProbeReport probe_lemma32(std::uint64_t p, std::uint64_t tau) {
    require_prime(p, "probe_lemma32");
    ProbeReport report;
    report.p = p;
    report.kind = ProbeKind::lemma32;
    const double lnp = std::log(static_cast<double>(p));
    const double bound = std::sqrt(static_cast<double>(p)) * lnp * lnp;
    const auto base = exp_sum_coprime(1, p, tau);
    for (std::uint64_t s = 1; s <= p - 1; ++s) {
        const double observed = std::abs(exp_sum_coprime(s, p, tau) - base);
        report.samples.push_back({static_cast<std::int64_t>(s), -1, observed, bound,
                                  observed / bound});
    }
    finalize(report);
    return report;
}

ProbeReport probe_lemma33(std::uint64_t p) {
    require_prime(p, "probe_lemma33");
    if (p < 5) throw std::domain_error("probe_lemma33: p must be >= 5");
    ProbeReport report;
    report.p = p;
    report.kind = ProbeKind::lemma33;
    const double scale = static_cast<double>(p - 1) * std::log(static_cast<double>(p));
    for (std::uint64_t t = 1; t <= p - 2; ++t) {
        const double observed = std::abs(coprime_unity_sum(t, p));
        const double bound = scale / static_cast<double>(t);
        report.samples.push_back({static_cast<std::int64_t>(t), -1, observed, bound,
                                  observed / bound});
    }
    finalize(report);
    return report;
}

ProbeReport probe_thm32(std::uint64_t p, std::uint64_t tau, std::uint64_t s_samples) {
    require_prime(p, "probe_thm32");
    require_primitive_root(tau, p, "probe_thm32");
    if (s_samples < 1) throw std::domain_error("probe_thm32: s_samples must be >= 1");
    ProbeReport report;
    report.p = p;
    report.kind = ProbeKind::thm32;
    const double bound = std::sqrt(static_cast<double>(p)) * std::log(static_cast<double>(p));

    const std::uint64_t count = std::min<std::uint64_t>(s_samples, p - 1);
    const std::uint64_t stride = std::max<std::uint64_t>((p - 1) / count, 1);
    const auto zeta = roots_of_unity(p);
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::uint64_t s = 1 + i * stride;
        if (s > p - 1) break;
        // Running prefix: one pass over x recovers max |sum_{n<=x}| for this s.
        ComplexKahan prefix;
        double best = -1.0;
        std::uint64_t best_x = 1;
        std::uint64_t power = 1;
        for (std::uint64_t x = 1; x <= p - 1; ++x) {
            power = mul_mod(power, tau % p, p);
            prefix.add(zeta[mul_mod(s, power, p)]);
            const double mag = std::abs(prefix.value());
            if (mag > best) {
                best = mag;
                best_x = x;
            }
        }
        report.samples.push_back({static_cast<std::int64_t>(s),
                                  static_cast<std::int64_t>(best_x), best, bound,
                                  best / bound});
    }
    finalize(report);
    return report;
}

std::string probe_param_label(const ProbeReport& report, const ProbeSample& sample) {
    switch (report.kind) {
        case ProbeKind::lemma33:
            return "t=" + std::to_string(sample.primary);
        case ProbeKind::thm32:
            return "s=" + std::to_string(sample.primary) +
                   ",x=" + std::to_string(sample.secondary);
        default:
            return "s=" + std::to_string(sample.primary);
    }
}

ProbeReport merge_probe_reports(const std::vector<ProbeReport>& parts) {
    if (parts.empty()) throw std::domain_error("merge_probe_reports: nothing to merge");
    ProbeReport merged;
    merged.p = parts.front().p;
    merged.kind = parts.front().kind;
    merged.epsilon = parts.front().epsilon;
    for (const auto& part : parts) {
        if (part.p != merged.p || part.kind != merged.kind)
            throw std::domain_error("merge_probe_reports: mismatched reports");
        merged.samples.insert(merged.samples.end(), part.samples.begin(), part.samples.end());
    }
    finalize(merged);
    return merged;
}

}  // namespace primcensus
