#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polyafreq/proximate_order.hpp"
#include "polyafreq/sequence.hpp"

namespace polyafreq {

struct GrowthEstimate {
    enum class Functional {
        LevinType,
        DiskType,
        BeuermannLambda,
        LogOrderTypeEntire,
        LogOrderTypeDisk,
        DirectDisk,
        SingularityCircle,
    };

    Functional functional = Functional::LevinType;
    // (window bound or abscissa, per-window sup of the formula's sequence)
    std::vector<std::pair<double, double>> window_values;
    // cumulative sup trace; non-decreasing by construction
    std::vector<std::pair<double, double>> running_sup;
    double extrapolated = 0.0;
    bool is_infinite = false;
    bool degenerate = false;
    double residual = 0.0;
    // named derived quantities (sigma, rho0, lambda, ...)
    std::map<std::string, double> derived;
};

struct ExtrapolationResult {
    double value = 0.0;
    double residual = 0.0;
    bool is_infinite = false;
};

/// Line fit of (abscissa, value) samples over the trailing half (at least
/// four points); the intercept at abscissa 0 is the extrapolated limsup.
/// Strictly increasing values with non-decreasing increments are flagged
/// as divergent.
ExtrapolationResult limsup_extrapolate(const std::vector<std::pair<double, double>>& samples);

/// (sigma_B e rho)^{1/rho} = limsup V_{-1}(n) |b_n|^{1/n}; derived: sigma.
GrowthEstimate levin_estimate(const CoefficientSequence& b, const ProximateOrder& po,
                              std::int64_t n_max);

/// (rho+1)/rho (sigma rho)^{1/(rho+1)} = limsup xi(k) log|a_k| / k; derived: sigma.
GrowthEstimate disk_type_estimate(const CoefficientSequence& a, const ProximateOrder& po,
                                  std::int64_t k_max);

/// lambda/(lambda+1) = limsup log+log+|a_k| / log k; derived: lambda.
GrowthEstimate beuermann_lambda(const CoefficientSequence& a, std::int64_t k_max);

/// rho0 from limsup log n/loglog(1/|C_n|) = (rho0-1)/rho0, then sigma0 from
/// rho0^rho0 sigma0/(rho0-1)^{rho0-1} = limsup n^{rho0}/(log(1/|C_n|))^{rho0-1}.
GrowthEstimate log_order_type_entire(const CoefficientSequence& C, std::int64_t n_max);

/// rho0 = limsup log+log+|a_k|/loglog k; sigma0 = limsup log+|a_k|/(log k)^{rho0}
/// (computed only for rho0 > 1).
GrowthEstimate log_order_type_disk(const CoefficientSequence& a, std::int64_t k_max);

enum class DirectDiskFunctional { SigmaOverV, LogOrderDisk };

/// Direct M(y) sampling: log M(y)/V(1/(1-y)) per grid point, or the
/// logarithmic-type ratio log M(y)/(log 1/(1-y))^{rho0} with a caller-
/// supplied rho0.
GrowthEstimate direct_disk_growth(const CoefficientSequence& s,
                                  const std::vector<double>& y_grid,
                                  DirectDiskFunctional functional,
                                  const ProximateOrder* po = nullptr, double rho0 = 0.0);

/// max |h(z)| over 64 equispaced points of |z-1| = 1/x for each grid x,
/// through the binomial-transform continuation. window_values holds
/// (x, M_1(x)); derived ratios to V(x) are attached when a scale is given.
GrowthEstimate singularity_circle_growth(const CoefficientSequence& h_seq,
                                         const std::vector<double>& x_grid,
                                         const ProximateOrder* po = nullptr);

}  // namespace polyafreq
