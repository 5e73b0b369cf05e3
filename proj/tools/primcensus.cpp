#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "primcensus/cache.hpp"
#include "primcensus/census.hpp"
#include "primcensus/density.hpp"
#include "primcensus/errors.hpp"
#include "primcensus/expsums.hpp"
#include "primcensus/ntheory.hpp"
#include "primcensus/report.hpp"
#include "primcensus/verify.hpp"

namespace {

using namespace primcensus;

// --workers beats PRIMCENSUS_WORKERS beats the single-threaded default.
unsigned resolve_workers(std::optional<unsigned> flag) {
    if (flag) return std::max(*flag, 1u);
    if (const char* env = std::getenv("PRIMCENSUS_WORKERS")) {
        unsigned value = 0;
        const std::string text = env;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc{} && ptr == text.data() + text.size() && value >= 1) return value;
    }
    return 1;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::trunc | std::ios::binary);
    if (!out) throw ResourceError("cannot open output file '" + out_path + "'");
    out << text;
    out.flush();
    if (!out) throw ResourceError("write failed for '" + out_path + "'");
}

void print_warnings(std::uint64_t x, const ResidueClass& cls, std::int64_t u) {
    for (const auto& w : census_warnings(x, cls, u)) std::cerr << "warning: " << w << '\n';
}

// Refreshes the prime cache at path: existing rows are validated and reused,
// class primes missing from it get records computed, and the union goes back
// sorted by p.
void refresh_cache(const std::string& path, std::uint64_t x, const ResidueClass& cls) {
    std::map<std::uint64_t, PrimeRecord> merged;
    if (std::filesystem::exists(path)) {
        for (auto& rec : cache_read(path)) merged.emplace(rec.p, std::move(rec));
    }
    for (std::uint64_t p : sieve_primes(x)) {
        if (!cls.contains(p)) continue;
        if (!merged.count(p)) merged.emplace(p, make_prime_record(p));
    }
    std::vector<PrimeRecord> records;
    records.reserve(merged.size());
    for (auto& [p, rec] : merged) records.push_back(std::move(rec));
    cache_write(path, records);
}

struct CommonArgs {
    std::string format = "table";
    std::string out_path;
    std::optional<unsigned> workers;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_workers = true) {
    cmd->add_option("--format", args.format, "Output format: csv, json, or table")
        ->check(CLI::IsMember({"csv", "json", "table"}));
    cmd->add_option("--out", args.out_path, "Write output to this file instead of stdout");
    if (with_workers)
        cmd->add_option("--workers", args.workers,
                        "Worker threads (default 1 or $PRIMCENSUS_WORKERS)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prime censuses, primitive-root densities, and exponential-sum probes"};
    app.require_subcommand(1);

    CommonArgs census_args, density_args, decompose_args, probe_args, report_args;

    std::uint64_t census_x = 0, census_q = 1, census_a = 0;
    std::int64_t census_u = 0;
    std::string census_cache;
    auto* census_cmd = app.add_subcommand(
        "census", "Count primes in a progression and those with u as a primitive root");
    census_cmd->add_option("--x", census_x, "Upper limit")->required();
    census_cmd->add_option("--q", census_q, "Progression modulus");
    census_cmd->add_option("--a", census_a, "Progression residue");
    census_cmd->add_option("--u", census_u, "Candidate primitive root")->required();
    census_cmd->add_option("--cache", census_cache, "Prime-record cache CSV to read and refresh");
    add_common(census_cmd, census_args);
    census_cmd->callback([&] {
        const ResidueClass cls(census_q, census_a);
        print_warnings(census_x, cls, census_u);
        const auto census =
            count_pr_primes(census_x, cls, census_u, resolve_workers(census_args.workers));
        if (!census_cache.empty()) refresh_cache(census_cache, census_x, cls);
        emit(render_census(make_census_report(census),
                           output_format_from_name(census_args.format)),
             census_args.out_path);
    });

    std::uint64_t density_q = 1, density_a = 0, density_P = kDefaultTruncationP;
    auto* density_cmd = app.add_subcommand(
        "density", "Truncated Euler-product density constant for a progression");
    density_cmd->add_option("--q", density_q, "Progression modulus")->required();
    density_cmd->add_option("--a", density_a, "Progression residue")->required();
    density_cmd->add_option("--P", density_P, "Truncation limit for the Euler product");
    add_common(density_cmd, density_args, false);
    density_cmd->callback([&] {
        const auto constant = truncated_Aq(density_q, density_a, density_P);
        emit(render_density(constant, output_format_from_name(density_args.format)),
             density_args.out_path);
    });

    std::uint64_t dec_x = 0, dec_q = 1, dec_a = 0;
    std::int64_t dec_u = 0;
    auto* dec_cmd =
        app.add_subcommand("decompose", "Exact main/error split over primes in (x, 2x]");
    dec_cmd->add_option("--x", dec_x, "Lower endpoint of the dyadic interval")->required();
    dec_cmd->add_option("--q", dec_q, "Progression modulus");
    dec_cmd->add_option("--a", dec_a, "Progression residue");
    dec_cmd->add_option("--u", dec_u, "Candidate primitive root")->required();
    add_common(dec_cmd, decompose_args);
    dec_cmd->callback([&] {
        const ResidueClass cls(dec_q, dec_a);
        print_warnings(dec_x, cls, dec_u);
        const auto decomposition =
            interval_decomposition(dec_x, cls, dec_u, resolve_workers(decompose_args.workers));
        emit(render_decomposition(decomposition, output_format_from_name(decompose_args.format)),
             decompose_args.out_path);
    });

    std::string probe_kind;
    std::uint64_t probe_p = 0, probe_samples = 16;
    std::optional<std::uint64_t> probe_tau;
    double probe_epsilon = kDefaultProbeEpsilon;
    auto* probe_cmd =
        app.add_subcommand("probe", "Check a claimed exponential-sum bound numerically");
    probe_cmd->add_option("--kind", probe_kind, "One of lemma31, lemma32, lemma33, thm32")
        ->required();
    probe_cmd->add_option("--p", probe_p, "Prime to probe")->required();
    probe_cmd->add_option("--tau", probe_tau, "Primitive root to use (default: smallest)");
    probe_cmd->add_option("--epsilon", probe_epsilon, "Exponent offset for the lemma31 bound");
    probe_cmd->add_option("--samples", probe_samples, "Number of s values sampled by thm32");
    add_common(probe_cmd, probe_args, false);
    probe_cmd->callback([&] {
        const ProbeKind kind = probe_kind_from_name(probe_kind);
        if (probe_p < 2 || !is_prime(probe_p))
            throw std::domain_error("probe: --p must be prime");
        const std::uint64_t tau = probe_tau ? *probe_tau : smallest_primitive_root(probe_p);
        ProbeReport report;
        switch (kind) {
            case ProbeKind::lemma31: report = probe_lemma31(probe_p, tau, probe_epsilon); break;
            case ProbeKind::lemma32: report = probe_lemma32(probe_p, tau); break;
            case ProbeKind::lemma33: report = probe_lemma33(probe_p); break;
            case ProbeKind::thm32: report = probe_thm32(probe_p, tau, probe_samples); break;
        }
        emit(render_probe(report, output_format_from_name(probe_args.format)),
             probe_args.out_path);
    });

    auto* verify_cmd = app.add_subcommand("verify", "Run the cross-module invariant suite");
    verify_cmd->callback([] {
        run_verify(std::cout);
        std::cout << "all invariants hold\n";
    });

    std::uint64_t rep_x = 0, rep_q = 1, rep_a = 0;
    std::int64_t rep_u = 0;
    auto* report_cmd = app.add_subcommand(
        "report", "Census plus density constant and Brun-Titchmarsh check");
    report_cmd->add_option("--x", rep_x, "Upper limit")->required();
    report_cmd->add_option("--q", rep_q, "Progression modulus");
    report_cmd->add_option("--a", rep_a, "Progression residue");
    report_cmd->add_option("--u", rep_u, "Candidate primitive root")->required();
    add_common(report_cmd, report_args);
    report_cmd->callback([&] {
        const ResidueClass cls(rep_q, rep_a);
        print_warnings(rep_x, cls, rep_u);
        const unsigned workers = resolve_workers(report_args.workers);
        SummaryReport summary;
        summary.census = make_census_report(count_pr_primes(rep_x, cls, rep_u, workers));
        summary.aq = truncated_Aq(rep_q, rep_a, kDefaultTruncationP);
        summary.bt = brun_titchmarsh_check(rep_x, cls, workers);
        emit(render_summary(summary, output_format_from_name(report_args.format)),
             report_args.out_path);
    });

    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e);
            return code == 0 ? 0 : 64;
        }
        return 0;
    } catch (const VerifyFailure& e) {
        std::cerr << "FAIL " << e.what() << '\n';
        return 3;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
