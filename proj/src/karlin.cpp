#include "polyafreq/karlin.hpp"

#include <cmath>

namespace polyafreq {

CoefficientSequence fr1_coefficients(const CoefficientSequence& c, int r) {
    if (r < 2) throw std::invalid_argument("r must be >= 2");
    if (c.kind() != CoeffValue::Kind::Exact)
        throw std::invalid_argument("fr1_coefficients requires exact input");
    std::optional<std::int64_t> hint;
    if (c.length_hint()) hint = *c.length_hint() + r - 1;
    return CoefficientSequence(
        CoeffValue::Kind::Exact,
        [c, r](std::int64_t m) {
            if (m < r - 1) return CoeffValue::from_rational(0);
            const std::int64_t n = m - (r - 1);
            return CoeffValue::from_rational(c.at(n).exact /
                                             Rational(factorial_int(m)));
        },
        std::nullopt, hint);
}

namespace {

// smallest truncation T for which the summand tail at index k is certified
// below tol relative to the largest term (double estimate, then padded)
std::int64_t pick_truncation(const std::function<double(std::int64_t)>& log_c, int r,
                             std::int64_t k, double tol) {
    if (k == 0) return 1;
    const double logk = std::log(static_cast<double>(k));
    double best = -std::numeric_limits<double>::infinity();
    double prev = -std::numeric_limits<double>::infinity();
    for (std::int64_t n = 0; n < 2'000'000; ++n) {
        const double lt = log_c(n) + (n + r - 1) * logk - std::lgamma(static_cast<double>(n + r));
        best = std::max(best, lt);
        // stop once the terms are falling fast and far below the peak
        if (n >= 4 && lt < prev && lt < best + std::log(tol) - 5.0) return n + 1;
        if (lt > -std::numeric_limits<double>::infinity()) prev = lt;
    }
    throw std::runtime_error("karlin_transform: summand tail does not decay");
}

}  // namespace

KarlinOutput karlin_transform(const CoefficientSequence& c, int r, std::int64_t K, double tol) {
    if (r < 2) throw std::invalid_argument("r must be >= 2");
    if (K < 0) throw std::invalid_argument("K must be nonnegative");
    if (c.kind() != CoeffValue::Kind::Exact)
        throw std::invalid_argument("karlin_transform requires exact input");

    std::int64_t T;
    if (c.length_hint()) {
        T = *c.length_hint();
    } else {
        auto log_c = [&c](std::int64_t n) { return c.at(n).log_abs_value(); };
        T = pick_truncation(log_c, r, std::max<std::int64_t>(K, 1), tol);
    }
    for (std::int64_t n = 0; n < T; ++n)
        if (c.at(n).sign() < 0)
            throw std::invalid_argument("karlin_transform requires nonnegative coefficients");

    KarlinOutput out;
    out.r = r;
    out.K = K;
    out.truncation_N = T;
    out.tail_bound.assign(static_cast<std::size_t>(K) + 1, 0.0);

    std::vector<Rational> inv_fact(static_cast<std::size_t>(T + r));
    {
        Integer f = factorial_int(r - 1);
        for (std::int64_t n = 0; n < T; ++n) {
            // (n+r-1)!
            if (n == 0)
                f = factorial_int(r - 1);
            else
                f *= (n + r - 1);
            inv_fact[static_cast<std::size_t>(n)] = Rational(1, f);
        }
    }

    std::vector<Rational> d(static_cast<std::size_t>(K) + 1, 0);
    for (std::int64_t k = 1; k <= K; ++k) {
        Rational sum = 0;
        Rational kpow = pow_int(Integer(k), r - 1);
        for (std::int64_t n = 0; n < T; ++n) {
            const Rational& cn = c.at(n).exact;
            if (cn != 0) sum += cn * kpow * inv_fact[static_cast<std::size_t>(n)];
            kpow *= k;
        }
        d[static_cast<std::size_t>(k)] = sum;
        if (!c.length_hint()) {
            // geometric bound on the dropped tail, from the double logs
            auto log_c = [&c](std::int64_t n) { return c.at(n).log_abs_value(); };
            const double logk = std::log(static_cast<double>(k));
            const double lt =
                log_c(T) + (T + r - 1) * logk - std::lgamma(static_cast<double>(T + r));
            out.tail_bound[static_cast<std::size_t>(k)] = 2.0 * std::exp(lt);
        }
    }
    out.d = CoefficientSequence::from_rationals(std::move(d), r);
    out.d.set_provenance("karlin");
    return out;
}

CoefficientSequence karlin_log_sequence(std::function<double(std::int64_t)> log_c, int r) {
    if (r < 2) throw std::invalid_argument("r must be >= 2");
    return CoefficientSequence(CoeffValue::Kind::Log, [log_c, r](std::int64_t k) {
        if (k == 0) return CoeffValue::from_log(LogReal::zero());
        const double logk = std::log(static_cast<double>(k));
        double acc = -std::numeric_limits<double>::infinity();
        double best = acc;
        for (std::int64_t n = 0; n < 2'000'000; ++n) {
            const double lt =
                log_c(n) + (n + r - 1) * logk - std::lgamma(static_cast<double>(n + r));
            acc = log_add_exp(acc, lt);
            best = std::max(best, lt);
            if (n >= 4 && lt < best - 45.0) break;
        }
        return CoeffValue::from_log(LogReal{acc, 1});
    });
}

}  // namespace polyafreq
