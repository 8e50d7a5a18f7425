#include "polyafreq/series_eval.hpp"

#include <algorithm>
#include <cmath>

namespace polyafreq {

DiskValue evaluate_disk(const CoefficientSequence& s, double y, double tol,
                        std::int64_t budget) {
    if (!(y > 0.0 && y < 1.0)) throw EvalError("evaluate_disk: y must be in (0,1)");
    const double logy = std::log(y);
    const auto hint = s.length_hint();

    double sum = 0.0;
    double prev_abs = -1.0;
    double ratio = 0.0;
    int ratio_run = 0;
    for (std::int64_t k = 0; k < budget; ++k) {
        if (hint && k >= *hint) return {sum, 0.0, k};
        const CoeffValue v = s.at(k);
        const double la = v.log_abs_value();
        const double t = v.sign() == 0 ? 0.0 : v.sign() * std::exp(la + k * logy);
        sum += t;
        const double ta = std::abs(t);
        if (prev_abs > 0.0 && ta > 0.0) {
            const double r = ta / prev_abs;
            ratio = std::max(ratio, r);
            if (r < 1.0)
                ++ratio_run;
            else {
                ratio_run = 0;
                ratio = 0.0;
            }
            if (ratio_run >= 16 && ratio < 1.0) {
                const double bound = ta * ratio / (1.0 - ratio);
                if (bound <= tol * std::max(std::abs(sum), 1e-300)) return {sum, bound, k + 1};
            }
        }
        if (ta > 0.0) prev_abs = ta;
    }
    throw EvalError("evaluate_disk: cannot certify tail within budget");
}

MaximalTerm maximal_term(const CoefficientSequence& s, double y, std::int64_t budget) {
    if (!(y > 0.0 && y < 1.0)) throw EvalError("maximal_term: y must be in (0,1)");
    const double logy = std::log(y);
    const auto hint = s.length_hint();

    double best = -std::numeric_limits<double>::infinity();
    std::int64_t best_k = 0;
    double prev = -std::numeric_limits<double>::infinity();
    int decrease_run = 0;
    bool seen = false;
    for (std::int64_t k = 0; k < budget; ++k) {
        if (hint && k >= *hint) {
            if (!seen) throw EvalError("maximal_term: all coefficients vanish");
            return {best, best_k};
        }
        const CoeffValue v = s.at(k);
        if (v.sign() == 0) continue;
        seen = true;
        const double score = v.log_abs_value() + k * logy;
        if (score > best) {
            best = score;
            best_k = k;
        }
        if (score < prev)
            ++decrease_run;
        else
            decrease_run = 0;
        prev = score;
        if (decrease_run >= 64 && score < best - 40.0) return {best, best_k};
    }
    throw EvalError("maximal_term: no decrease certificate within budget");
}

bool check_ineqe(const CoefficientSequence& seq, double y, double s_param, double tol) {
    if (!(s_param > 0.0 && s_param < 1.0)) throw EvalError("check_ineqe: s must be in (0,1)");
    const DiskValue M = evaluate_disk(seq, y, 1e-9);
    const double y2 = 1.0 - s_param + s_param * y;
    const MaximalTerm mu = maximal_term(seq, y2);
    const double log_lhs = std::log(std::max(M.value, 1e-300));
    const double log_rhs = std::log(2.0 / ((1.0 - s_param) * (1.0 - y))) + mu.log_mu;
    return log_lhs <= log_rhs + tol;
}

std::complex<double> evaluate_continued(const CoefficientSequence& h, std::complex<double> z,
                                        double tol, std::int64_t budget) {
    if (z == std::complex<double>(1.0, 0.0))
        throw EvalError("evaluate_continued: z=1 is the singularity");
    const std::complex<double> zeta = z / (1.0 - z);
    const double log_zeta = std::log(std::abs(zeta));
    const double arg_zeta = std::arg(zeta);
    const auto hint = h.length_hint();

    // running sum is acc * e^scale; rescale keeps acc in double range
    std::complex<double> acc = 0.0;
    double scale = 0.0;
    bool have_prev = false;
    double prev_abs = 0.0;
    int decay_run = 0;
    std::int64_t n_end = -1;
    for (std::int64_t n = 0; n < budget; ++n) {
        if (hint && n >= *hint) {
            n_end = n;
            break;
        }
        const CoeffValue v = h.at(n);
        const int sg = v.sign();
        if (sg != 0) {
            const double lt = v.log_abs_value() + n * log_zeta;
            if (lt > scale + 300.0) {
                acc *= std::exp(scale - lt);
                scale = lt;
            }
            const double mag = std::exp(lt - scale);
            const double phi = n * arg_zeta;
            acc += std::complex<double>(sg * mag * std::cos(phi), sg * mag * std::sin(phi));
            const double ta = lt;
            if (have_prev && ta < prev_abs)
                ++decay_run;
            else
                decay_run = 0;
            prev_abs = ta;
            have_prev = true;
            const double sum_log = scale + std::log(std::max(std::abs(acc), 1e-300));
            if (decay_run >= 24 && ta < sum_log + std::log(tol) - 3.0) {
                n_end = n + 1;
                break;
            }
        }
    }
    if (n_end < 0) {
        if (!hint) throw EvalError("evaluate_continued: terms do not decay within budget");
        n_end = budget;
    }
    return (1.0 + zeta) * acc * std::exp(scale);
}

}  // namespace polyafreq
