#include "primcensus/complexsum.hpp"

#include <numbers>

namespace primcensus {

std::vector<std::complex<double>> roots_of_unity(std::uint64_t m) {
    std::vector<std::complex<double>> roots(m);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
    for (std::uint64_t j = 0; j < m; ++j)
        roots[j] = std::polar(1.0, step * static_cast<double>(j));
    return roots;
}

}  // namespace primcensus
