#include "primcensus/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace primcensus {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json census_json(const CensusReport& r) {
    ordered_json j;
    j["x"] = r.census.x;
    j["q"] = r.census.cls.q;
    j["a"] = r.census.cls.a;
    j["u"] = r.census.u;
    j["pi"] = r.census.pi;
    j["pi_u"] = r.census.pi_u;
    j["delta_hat"] = r.delta_hat;  // NaN serializes as null
    j["A_q"] = r.A_q;
    j["a_u_hat"] = r.a_u_hat;
    j["skipped"] = r.census.skipped;
    return j;
}

ordered_json density_json(const DensityConstant& c) {
    ordered_json j;
    j["q"] = c.q;
    j["a"] = c.a;
    j["P"] = c.truncation_P;
    j["value"] = c.value;
    j["tail_bound"] = c.tail_bound;
    return j;
}

ordered_json decomposition_json(const IntervalDecomposition& d) {
    ordered_json j;
    j["x"] = d.x;
    j["q"] = d.cls.q;
    j["a"] = d.cls.a;
    j["u"] = d.u;
    j["psi_sum"] = d.psi_sum;
    j["main_term"] = d.main_term;
    j["error_term"] = d.error_term;
    return j;
}

ordered_json bt_json(const BrunTitchmarshCheck& c) {
    ordered_json j;
    j["x"] = c.x;
    j["q"] = c.cls.q;
    j["a"] = c.cls.a;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["satisfied"] = c.satisfied;
    return j;
}

std::string census_csv(const CensusReport& r) {
    std::ostringstream out;
    out << "x,q,a,u,pi,pi_u,delta_hat,A_q,a_u_hat,skipped\n"
        << r.census.x << ',' << r.census.cls.q << ',' << r.census.cls.a << ',' << r.census.u
        << ',' << r.census.pi << ',' << r.census.pi_u << ',' << format_real(r.delta_hat) << ','
        << format_real(r.A_q) << ',' << format_real(r.a_u_hat) << ',' << r.census.skipped
        << '\n';
    return out.str();
}

std::string density_csv(const DensityConstant& c) {
    std::ostringstream out;
    out << "q,a,P,value,tail_bound\n"
        << c.q << ',' << c.a << ',' << c.truncation_P << ',' << format_real(c.value) << ','
        << format_real(c.tail_bound) << '\n';
    return out.str();
}

std::string decomposition_csv(const IntervalDecomposition& d) {
    std::ostringstream out;
    out << "x,q,a,u,psi_sum,main_term,error_term\n"
        << d.x << ',' << d.cls.q << ',' << d.cls.a << ',' << d.u << ',' << d.psi_sum << ','
        << format_real(d.main_term) << ',' << format_real(d.error_term) << '\n';
    return out.str();
}

std::string bt_csv(const BrunTitchmarshCheck& c) {
    std::ostringstream out;
    out << "x,q,a,lhs,rhs,satisfied\n"
        << c.x << ',' << c.cls.q << ',' << c.cls.a << ',' << c.lhs << ','
        << format_real(c.rhs) << ',' << (c.satisfied ? 1 : 0) << '\n';
    return out.str();
}

std::string census_table(const CensusReport& r) {
    std::ostringstream out;
    out << "census x=" << r.census.x << " q=" << r.census.cls.q << " a=" << r.census.cls.a
        << " u=" << r.census.u << '\n'
        << "  pi         " << r.census.pi << '\n'
        << "  pi_u       " << r.census.pi_u << '\n'
        << "  delta_hat  " << format_real(r.delta_hat) << '\n'
        << "  A_q        " << format_real(r.A_q) << '\n'
        << "  a_u_hat    " << format_real(r.a_u_hat) << '\n'
        << "  skipped    " << r.census.skipped << '\n';
    return out.str();
}

std::string density_table(const DensityConstant& c) {
    std::ostringstream out;
    out << "density q=" << c.q << " a=" << c.a << " P=" << c.truncation_P << '\n'
        << "  value      " << format_real(c.value) << '\n'
        << "  tail_bound " << format_real(c.tail_bound) << '\n';
    return out.str();
}

std::string decomposition_table(const IntervalDecomposition& d) {
    std::ostringstream out;
    out << "decompose x=" << d.x << " q=" << d.cls.q << " a=" << d.cls.a << " u=" << d.u
        << " over (" << d.x << ", " << 2 * d.x << "]\n"
        << "  psi_sum    " << d.psi_sum << '\n'
        << "  main_term  " << format_real(d.main_term) << '\n'
        << "  error_term " << format_real(d.error_term) << '\n';
    return out.str();
}

std::string bt_table(const BrunTitchmarshCheck& c) {
    std::ostringstream out;
    out << "brun_titchmarsh x=" << c.x << " q=" << c.cls.q << " a=" << c.cls.a << '\n'
        << "  lhs        " << c.lhs << '\n'
        << "  rhs        " << format_real(c.rhs) << '\n'
        << "  satisfied  " << (c.satisfied ? "true" : "false") << '\n';
    return out.str();
}

}  // namespace

OutputFormat output_format_from_name(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    if (name == "table") return OutputFormat::table;
    throw std::domain_error("unknown output format '" + name + "'");
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

CensusReport make_census_report(const CensusResult& census) {
    CensusReport report;
    report.census = census;
    report.A_q = truncated_Aq(census.cls.q, census.cls.a, kDefaultTruncationP).value;
    if (census.pi > 0) {
        const DensityEstimate est = empirical_density(census);
        report.delta_hat = est.delta_hat;
        report.a_u_hat = est.a_u_hat;
    } else {
        report.delta_hat = std::nan("");
        report.a_u_hat = std::nan("");
    }
    return report;
}

std::string render_census(const CensusReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::csv: return census_csv(report);
        case OutputFormat::json: return census_json(report).dump() + "\n";
        case OutputFormat::table: return census_table(report);
    }
    throw std::domain_error("render_census: unknown format");
}

std::string render_density(const DensityConstant& constant, OutputFormat format) {
    switch (format) {
        case OutputFormat::csv: return density_csv(constant);
        case OutputFormat::json: return density_json(constant).dump() + "\n";
        case OutputFormat::table: return density_table(constant);
    }
    throw std::domain_error("render_density: unknown format");
}

std::string render_decomposition(const IntervalDecomposition& decomposition,
                                 OutputFormat format) {
    switch (format) {
        case OutputFormat::csv: return decomposition_csv(decomposition);
        case OutputFormat::json: return decomposition_json(decomposition).dump() + "\n";
        case OutputFormat::table: return decomposition_table(decomposition);
    }
    throw std::domain_error("render_decomposition: unknown format");
}

std::string render_probe(const ProbeReport& report, OutputFormat format) {
    const std::string kind = probe_kind_name(report.kind);
    switch (format) {
        case OutputFormat::csv: {
            std::ostringstream out;
            out << "p,kind,param,observed,bound,ratio,violation\n";
            for (const auto& s : report.samples) {
                out << report.p << ',' << kind << ',' << probe_param_label(report, s) << ','
                    << format_real(s.observed) << ',' << format_real(s.bound) << ','
                    << format_real(s.ratio) << ',' << (s.ratio > 1.0 ? 1 : 0) << '\n';
            }
            return out.str();
        }
        case OutputFormat::json: {
            ordered_json rows = ordered_json::array();
            for (const auto& s : report.samples) {
                ordered_json j;
                j["p"] = report.p;
                j["kind"] = kind;
                j["param"] = probe_param_label(report, s);
                j["observed"] = s.observed;
                j["bound"] = s.bound;
                j["ratio"] = s.ratio;
                j["violation"] = s.ratio > 1.0;
                rows.push_back(std::move(j));
            }
            return rows.dump() + "\n";
        }
        case OutputFormat::table: {
            std::ostringstream out;
            out << "probe kind=" << kind << " p=" << report.p;
            if (report.kind == ProbeKind::lemma31) out << " epsilon=" << format_real(report.epsilon);
            out << " samples=" << report.samples.size() << " max_ratio="
                << format_real(report.max_ratio) << " violations=" << report.violations.size()
                << '\n';
            for (const auto& s : report.samples) {
                out << "  " << probe_param_label(report, s) << " observed="
                    << format_real(s.observed) << " bound=" << format_real(s.bound)
                    << " ratio=" << format_real(s.ratio) << (s.ratio > 1.0 ? " VIOLATION" : "")
                    << '\n';
            }
            return out.str();
        }
    }
    throw std::domain_error("render_probe: unknown format");
}

std::string render_summary(const SummaryReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::csv:
            return census_csv(report.census) + "\n" + density_csv(report.aq) + "\n" +
                   bt_csv(report.bt);
        case OutputFormat::json: {
            ordered_json j;
            j["census"] = census_json(report.census);
            j["density"] = density_json(report.aq);
            j["brun_titchmarsh"] = bt_json(report.bt);
            return j.dump() + "\n";
        }
        case OutputFormat::table:
            return census_table(report.census) + density_table(report.aq) + bt_table(report.bt);
    }
    throw std::domain_error("render_summary: unknown format");
}

}  // namespace primcensus
