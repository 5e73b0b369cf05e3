#pragma once

#include <string>
#include <vector>

#include "primcensus/ntheory.hpp"

namespace primcensus {

// Plain-CSV prime cache: header `p,tau,phi,factors`, factors a `;`-separated
// list of `prime^exp`. Human-inspectable and diff-friendly.
//
// Reads validate every invariant (primality of p and of listed factors,
// factorization product, totient, tau's order) and throw DataError naming
// the offending row. Missing file or IO failure throws ResourceError.
// An empty file reads back as an empty sequence.
void cache_write(const std::string& path, const std::vector<PrimeRecord>& records);
std::vector<PrimeRecord> cache_read(const std::string& path);

}  // namespace primcensus
