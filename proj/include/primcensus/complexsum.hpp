#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace primcensus {

// Kahan compensated accumulator. Adding in a fixed order gives
// bit-reproducible sums, which the reporting layer relies on.
class KahanAccumulator {
public:
    void add(double x) {
        const double y = x - compensation_;
        const double t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

// Componentwise Kahan accumulation for complex sums.
class ComplexKahan {
public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    KahanAccumulator re_;
    KahanAccumulator im_;
};

// Table of e^{2*pi*i*j/m} for j = 0..m-1. Sums over residues index into one
// shared table instead of calling exp per term.
std::vector<std::complex<double>> roots_of_unity(std::uint64_t m);

}  // namespace primcensus
