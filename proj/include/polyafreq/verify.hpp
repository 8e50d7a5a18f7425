#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyafreq/determinant.hpp"
#include "polyafreq/sequence.hpp"

namespace polyafreq {

/// N x N slice of the upper-triangular Toeplitz matrix: (i,j) = a_{j-i}.
struct ToeplitzWindow {
    RationalMatrix exact;      // populated for exact sequences
    IntervalMatrix interval;   // populated for float/log sequences
    int N = 0;
    bool is_exact = true;
};

ToeplitzWindow build_window(const CoefficientSequence& s, int N);

/// Exact determinant of the (rows, cols) minor of an exact window.
Rational minor_det(const ToeplitzWindow& w, const std::vector<int>& rows,
                   const std::vector<int>& cols);
Interval minor_det_interval(const ToeplitzWindow& w, const std::vector<int>& rows,
                            const std::vector<int>& cols);

struct VerifyStrategy {
    enum class Kind { Exhaustive, ContiguousPlusRandom };
    Kind kind = Kind::Exhaustive;
    std::uint64_t seed = 0;
    std::int64_t samples = 100000;
};

struct MinorWitness {
    int order = 0;
    std::vector<int> rows;
    std::vector<int> cols;
    std::string det;      // exact rational string, or interval "[lo,hi]"
    Rational det_exact;   // valid in exact mode
};

struct PFVerdict {
    enum class Status { CertifiedPass, Counterexample, Undecided };
    Status status = Status::CertifiedPass;
    int r = 0;
    int N = 0;
    std::uint64_t checked_minor_count = 0;
    std::optional<MinorWitness> witness;
    std::vector<MinorWitness> undecided_minors;
    std::uint64_t seed = 0;
    std::string strategy;
};

/// Number of minors of order <= r in an N x N window: sum_k C(N,k)^2.
Integer exhaustive_minor_count(int N, int r);

/// Checks nonnegativity of minors of order <= r in the N x N window.
/// Exhaustive mode enumerates everything (refused above 1e7 minors);
/// the sampled mode checks all contiguous minors plus seeded random
/// row/column subsets. The first witness in (order, rows, cols)
/// lexicographic enumeration order is reported.
PFVerdict verify_pf(const CoefficientSequence& s, int r, int N, const VerifyStrategy& strat);

struct GridVerdict {
    bool nonnegative = true;
    Rational det;
};

/// Sign report for det || f(x_j - y_i) || on strictly increasing grids.
GridVerdict karlin_grid_check(const std::function<Rational(const Rational&)>& f,
                              const std::vector<Rational>& x, const std::vector<Rational>& y);

}  // namespace polyafreq
