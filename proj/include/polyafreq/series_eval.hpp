#pragma once

#include <complex>
#include <cstdint>

#include "polyafreq/sequence.hpp"

namespace polyafreq {

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DiskValue {
    double value = 0.0;
    double tail_bound = 0.0;
    std::int64_t terms = 0;
};

/// Sum of a_k y^k for y in (0,1) with a certified geometric tail remainder.
/// Throws EvalError when no ratio certificate emerges within the budget.
DiskValue evaluate_disk(const CoefficientSequence& s, double y, double tol,
                        std::int64_t budget = 2'000'000);

struct MaximalTerm {
    double log_mu = 0.0;    // log of the maximal term |a_k| y^k
    std::int64_t k = 0;     // central index
};

/// max_k |a_k| y^k with a window certificate that the score decreased long
/// enough past the maximum for the tail to be dominated.
MaximalTerm maximal_term(const CoefficientSequence& s, double y,
                         std::int64_t budget = 2'000'000);

/// M(y,h) <= 2/((1-s)(1-y)) * mu(1-s+sy, h).
bool check_ineqe(const CoefficientSequence& seq, double y, double s_param,
                 double tol = 1e-9);

/// Value of the continuation h(z) = (1+zeta) sum h_n zeta^n, zeta = z/(1-z).
/// Terms are accumulated in log-polar form; requires decaying terms.
std::complex<double> evaluate_continued(const CoefficientSequence& h, std::complex<double> z,
                                        double tol, std::int64_t budget = 200'000);

}  // namespace polyafreq
