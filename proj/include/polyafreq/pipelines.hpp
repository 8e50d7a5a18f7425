#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyafreq/growth.hpp"
#include "polyafreq/karlin.hpp"
#include "polyafreq/proximate_order.hpp"
#include "polyafreq/sequence.hpp"
#include "polyafreq/verify.hpp"

namespace polyafreq {

struct GrowthComparison {
    std::string name;
    double measured = 0.0;
    bool measured_infinite = false;
    double target = std::nan("");   // NaN: no closed-form target attached
    double rel_tolerance = 0.0;
    std::string provenance;         // where the target value comes from
    bool pass = true;
};

struct PipelineReport {
    std::string base_description;
    int r = 2;
    std::int64_t K = 0;
    CoefficientSequence coefficients;       // exact prefix (k <= exact_upto)
    std::int64_t exact_upto = 0;
    CoefficientSequence coefficients_log;   // log-domain view for all k <= K
    PFVerdict pf_verdict;
    std::vector<GrowthComparison> growth;
    std::vector<GrowthEstimate> estimates;
    std::map<std::string, double> identity_residuals;
    std::vector<std::string> notes;
    bool ok = true;
};

struct PipelineOptions {
    int r = 2;
    std::int64_t K = 10000;
    int N_verify = 40;
    std::uint64_t seed = 0;
    std::int64_t samples = 100000;
    double tol = 1e-40;
};

/// Entire AESW base (betas empty): Karlin transform, window verification,
/// disk-type growth against the base's order, singularity-circle sampling.
PipelineReport theorem_a_pipeline(const AESWParams& base, const PipelineOptions& opt);

/// User-supplied entire sequence claimed PF_r: window verification gates the
/// run; the transformed coefficients get the lower-order/infinite-order
/// growth estimate attached.
PipelineReport theorem_b_pipeline(const CoefficientSequence& phi, const PipelineOptions& opt);

/// q-product base: Karlin transform, window verification, logarithmic
/// order/type against the closed-form targets rho0=2, sigma0=1/(2 ln(1/q)).
PipelineReport theorem_c_pipeline(const Rational& q, int J, const PipelineOptions& opt);

/// Verification strategy choice shared by pipelines and the CLI: exhaustive
/// when the minor count allows it, contiguous plus seeded samples otherwise.
VerifyStrategy pick_strategy(int N, int r, std::uint64_t seed, std::int64_t samples);

}  // namespace polyafreq
