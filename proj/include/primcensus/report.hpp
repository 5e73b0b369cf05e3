#pragma once

#include <string>

#include "primcensus/census.hpp"
#include "primcensus/density.hpp"
#include "primcensus/expsums.hpp"

namespace primcensus {

enum class OutputFormat { csv, json, table };

OutputFormat output_format_from_name(const std::string& name);  // domain_error on unknown

// Census row plus the density quantities reported alongside it. When the
// census found no primes, delta_hat and a_u_hat are NaN (null in JSON).
struct CensusReport {
    CensusResult census;
    double A_q = 0.0;
    double delta_hat = 0.0;
    double a_u_hat = 0.0;
};

CensusReport make_census_report(const CensusResult& census);

// Omnibus `report` output: the census view plus the density constant and the
// Brun-Titchmarsh check at the same parameters.
struct SummaryReport {
    CensusReport census;
    DensityConstant aq;
    BrunTitchmarshCheck bt;
};

// Reals print with 10 significant digits (%.10g).
std::string format_real(double v);

// Renderers return the complete output text, trailing newline included.
// CSV carries a header row; JSON mirrors the CSV field names.
std::string render_census(const CensusReport& report, OutputFormat format);
std::string render_density(const DensityConstant& constant, OutputFormat format);
std::string render_decomposition(const IntervalDecomposition& decomposition, OutputFormat format);
std::string render_probe(const ProbeReport& report, OutputFormat format);
std::string render_summary(const SummaryReport& report, OutputFormat format);

}  // namespace primcensus
