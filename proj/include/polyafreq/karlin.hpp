#pragma once

#include <cstdint>
#include <vector>

#include "polyafreq/sequence.hpp"

namespace polyafreq {

/// Coefficients of f_{r-1}(z) = sum_n c_n z^{n+r-1} / (n+r-1)!.
CoefficientSequence fr1_coefficients(const CoefficientSequence& c, int r);

struct KarlinOutput {
    CoefficientSequence d;             // d_k = f_{r-1}(k), k = 0..K
    int r = 2;
    std::int64_t K = 0;
    std::int64_t truncation_N = 0;     // terms of c summed per d_k
    std::vector<double> tail_bound;    // certified remainder per k
};

/// d_k = sum_n c_n k^{n+r-1} / (n+r-1)!. Exact rational output; sequences
/// with unbounded support are truncated where the certified tail falls
/// below tol relative to the partial sum.
KarlinOutput karlin_transform(const CoefficientSequence& c, int r, std::int64_t K,
                              double tol = 1e-40);

/// Log-domain d_k generator for growth estimation at large k, for a
/// nonnegative c given by log c_n. Each value is summed adaptively.
CoefficientSequence karlin_log_sequence(std::function<double(std::int64_t)> log_c, int r);

}  // namespace polyafreq
