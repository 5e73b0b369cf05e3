#include "primcensus/cache.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

#include "primcensus/errors.hpp"

namespace primcensus {

namespace {

constexpr std::string_view kHeader = "p,tau,phi,factors";

std::uint64_t parse_u64(std::string_view field, std::size_t row, const char* what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw DataError("row " + std::to_string(row) + ": malformed " + what + " '" +
                        std::string(field) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

Factorization parse_factors(std::string_view field, std::size_t row) {
    Factorization f;
    if (field.empty()) return f;
    for (std::string_view part : split(field, ';')) {
        const std::size_t caret = part.find('^');
        if (caret == std::string_view::npos || caret == 0 || caret + 1 == part.size())
            throw DataError("row " + std::to_string(row) + ": malformed factor '" +
                            std::string(part) + "'");
        const std::uint64_t prime = parse_u64(part.substr(0, caret), row, "factor prime");
        const std::uint64_t exp = parse_u64(part.substr(caret + 1), row, "factor exponent");
        if (exp == 0 || exp > 63)
            throw DataError("row " + std::to_string(row) + ": factor exponent out of range");
        f.factors.push_back({prime, static_cast<std::uint32_t>(exp)});
    }
    return f;
}

void validate_record(const PrimeRecord& rec, std::size_t row) {
    const auto fail = [row](const std::string& why) {
        throw DataError("row " + std::to_string(row) + ": " + why);
    };
    if (!is_prime(rec.p)) fail("p is not prime");
    std::uint64_t prev = 0;
    for (const auto& fp : rec.p_minus_1_factors.factors) {
        if (fp.prime <= prev) fail("factors not strictly increasing");
        if (!is_prime(fp.prime)) fail("listed factor is not prime");
        prev = fp.prime;
    }
    if (rec.p_minus_1_factors.value() != rec.p - 1) fail("factors do not multiply to p-1");
    if (euler_phi(rec.p_minus_1_factors) != rec.phi_p_minus_1) fail("phi mismatch");
    if (rec.tau < 1 || rec.tau > rec.p - 1) fail("tau out of range");
    if (!is_primitive_root(rec.tau, rec.p, rec.p_minus_1_factors))
        fail("tau is not a primitive root");
}

}  // namespace

void cache_write(const std::string& path, const std::vector<PrimeRecord>& records) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw ResourceError("cache_write: cannot open '" + path + "'");
    out << kHeader << '\n';
    for (const auto& rec : records) {
        out << rec.p << ',' << rec.tau << ',' << rec.phi_p_minus_1 << ',';
        bool first = true;
        for (const auto& fp : rec.p_minus_1_factors.factors) {
            if (!first) out << ';';
            out << fp.prime << '^' << fp.exponent;
            first = false;
        }
        out << '\n';
    }
    out.flush();
    if (!out) throw ResourceError("cache_write: write failed for '" + path + "'");
}

std::vector<PrimeRecord> cache_read(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ResourceError("cache_read: cannot open '" + path + "'");

    std::vector<PrimeRecord> records;
    std::string line;
    std::size_t row = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!saw_header) {
            if (line != kHeader)
                throw DataError("row " + std::to_string(row) + ": expected header '" +
                                std::string(kHeader) + "'");
            saw_header = true;
            continue;
        }
        const auto fields = split(line, ',');
        if (fields.size() != 4)
            throw DataError("row " + std::to_string(row) + ": expected 4 fields, got " +
                            std::to_string(fields.size()));
        PrimeRecord rec;
        rec.p = parse_u64(fields[0], row, "p");
        rec.tau = parse_u64(fields[1], row, "tau");
        rec.phi_p_minus_1 = parse_u64(fields[2], row, "phi");
        rec.p_minus_1_factors = parse_factors(fields[3], row);
        validate_record(rec, row);
        records.push_back(std::move(rec));
    }
    if (in.bad()) throw ResourceError("cache_read: IO failure on '" + path + "'");
    return records;
}

}  // namespace primcensus
