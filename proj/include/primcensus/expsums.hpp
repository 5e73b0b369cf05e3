#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace primcensus {

// The coprime-index bound holds for any epsilon < 1/16; default probes sit
// just inside the boundary.
inline constexpr double kDefaultProbeEpsilon = 1.0 / 16.0 - 1e-3;

// sum over n in [1, p-1] with gcd(n, p-1) = 1 of e^{2pi i s tau^n / p}.
// Requires 0 <= s <= p-1 and tau a primitive root mod p.
std::complex<double> exp_sum_coprime(std::uint64_t s, std::uint64_t p, std::uint64_t tau);

// sum over n in [1, x] of e^{2pi i s tau^n / p}. Requires 1 <= s <= p-1 and
// 1 <= x <= p-1.
std::complex<double> exp_sum_prefix(std::uint64_t s, std::uint64_t p, std::uint64_t tau,
                                    std::uint64_t x);

// sum over j in [0, p-2] of omega^{-t j} zeta^{s tau^j} with
// omega = e^{2pi i/(p-1)}, zeta = e^{2pi i/p}. Requires 0 <= t <= p-2 and
// 1 <= s <= p-1. Magnitude is sqrt(p) for t in [1, p-2].
std::complex<double> lagrange_resolvent(std::uint64_t t, std::uint64_t s, std::uint64_t p,
                                        std::uint64_t tau);

// sum over n in [1, p-1] with gcd(n, p-1) = 1 of e^{2pi i t n/(p-1)}.
// Always a real integer (a Ramanujan sum); t is taken mod p-1.
std::complex<double> coprime_unity_sum(std::uint64_t t, std::uint64_t p);

// Closed form c_m(t) = mu(m/g) phi(m)/phi(m/g), g = gcd(t, m); c_m(0) = phi(m).
std::int64_t ramanujan_sum(std::uint64_t m, std::uint64_t t);

enum class ProbeKind { lemma31, lemma32, lemma33, thm32 };

std::string probe_kind_name(ProbeKind kind);
ProbeKind probe_kind_from_name(const std::string& name);  // domain_error on unknown name

// One observation: the probed parameter(s), the computed magnitude, the
// claimed bound with implied constant 1, and their ratio.
struct ProbeSample {
    std::int64_t primary = 0;    // s for lemma31/32/thm32, t for lemma33
    std::int64_t secondary = -1; // prefix length x for thm32; -1 elsewhere
    double observed = 0.0;
    double bound = 0.0;
    double ratio = 0.0;
};

struct ProbeReport {
    std::uint64_t p = 0;
    ProbeKind kind = ProbeKind::lemma31;
    double epsilon = kDefaultProbeEpsilon;  // meaningful for lemma31 only
    std::vector<ProbeSample> samples;
    double max_ratio = 0.0;
    std::vector<ProbeSample> violations;  // exactly the samples with ratio > 1
};

// |exp_sum_coprime(s)| vs p^{1-epsilon} over s in [1, p-1] with gcd(s, p-1) = 1.
ProbeReport probe_lemma31(std::uint64_t p, std::uint64_t tau,
                          double epsilon = kDefaultProbeEpsilon);

// |exp_sum_coprime(s) - exp_sum_coprime(1)| vs sqrt(p) ln^2 p over all s in [1, p-1].
ProbeReport probe_lemma32(std::uint64_t p, std::uint64_t tau);

// |coprime_unity_sum(t)| vs (p-1) ln(p)/t over t in [1, p-2]. Requires p >= 5.
ProbeReport probe_lemma33(std::uint64_t p);

// max over x in [1, p-1] of |exp_sum_prefix(s, ., x)| vs sqrt(p) ln p, for
// s_samples values of s chosen by a deterministic stride. secondary records
// the maximizing x for each sampled s.
ProbeReport probe_thm32(std::uint64_t p, std::uint64_t tau, std::uint64_t s_samples);

// "t=15", "s=3", or "s=5,x=17" depending on kind — the CSV param column.
std::string probe_param_label(const ProbeReport& report, const ProbeSample& sample);

// Concatenates samples and recomputes max_ratio/violations; merging is
// associative so split scans reduce deterministically.
ProbeReport merge_probe_reports(const std::vector<ProbeReport>& parts);

}  // namespace primcensus
