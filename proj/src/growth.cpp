#include "polyafreq/growth.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "polyafreq/series_eval.hpp"

namespace polyafreq {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct WindowScan {
    std::vector<std::pair<double, double>> window_sup;
    std::vector<std::pair<double, double>> running_sup;
    double overall_sup = kNegInf;
};

// per-window sup of value(k) over dyadic windows (2^{j-1}, 2^j]; value may
// return -inf to skip an index
WindowScan scan_windows(std::int64_t k_lo, std::int64_t k_max, int j0,
                        const std::function<double(std::int64_t)>& value) {
    WindowScan out;
    std::int64_t W = std::int64_t(1) << j0;
    double wsup = kNegInf;
    auto flush = [&] {
        if (wsup > kNegInf) {
            out.window_sup.emplace_back(static_cast<double>(W), wsup);
            out.overall_sup = std::max(out.overall_sup, wsup);
            out.running_sup.emplace_back(static_cast<double>(W), out.overall_sup);
        }
        wsup = kNegInf;
    };
    for (std::int64_t k = k_lo; k <= k_max; ++k) {
        while (k > W) {
            flush();
            W *= 2;
        }
        const double v = value(k);
        if (v > kNegInf) wsup = std::max(wsup, v);
    }
    if (W <= k_max) flush();  // only complete windows enter the fit
    return out;
}

std::vector<std::pair<double, double>> with_abscissa(
    const std::vector<std::pair<double, double>>& window_sup,
    const std::function<double(double)>& abscissa) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(window_sup.size());
    for (const auto& [W, v] : window_sup) pts.emplace_back(abscissa(W), v);
    return pts;
}

double xi_value(const ProximateOrder& po, double t) {
    if (po.kind() == ProximateOrder::Kind::Constant) {
        const double rho = po.rho_limit();
        return std::pow(t, 1.0 / (1.0 + rho));
    }
    return invert_monotone([&po](double x) { return x * po.V(x); }, t);
}

double v_inverse_value(const ProximateOrder& po, double t) {
    if (po.kind() == ProximateOrder::Kind::Constant)
        return std::pow(t, 1.0 / po.rho_limit());
    return invert_monotone([&po](double x) { return po.V(x); }, t);
}

}  // namespace

ExtrapolationResult limsup_extrapolate(const std::vector<std::pair<double, double>>& samples) {
    ExtrapolationResult r;
    const std::size_t n = samples.size();
    if (n == 0) return r;
    if (n == 1) {
        r.value = samples[0].second;
        return r;
    }
    const std::size_t m = std::min(n, std::max<std::size_t>(4, (n + 1) / 2));
    const std::size_t off = n - m;

    // divergence rule: strictly increasing with non-decreasing increments
    if (m >= 3) {
        bool diverging = true;
        double prev_inc = 0.0;
        for (std::size_t i = off + 1; i < n; ++i) {
            const double inc = samples[i].second - samples[i - 1].second;
            if (inc <= 0.0 || (i > off + 1 && inc < prev_inc - 1e-12)) {
                diverging = false;
                break;
            }
            prev_inc = inc;
        }
        if (diverging) {
            r.is_infinite = true;
            r.value = samples.back().second;
            return r;
        }
    }

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = off; i < n; ++i) {
        sx += samples[i].first;
        sy += samples[i].second;
        sxx += samples[i].first * samples[i].first;
        sxy += samples[i].first * samples[i].second;
    }
    const double dm = static_cast<double>(m);
    const double denom = dm * sxx - sx * sx;
    double a, b;
    if (std::abs(denom) < 1e-30) {
        a = sy / dm;
        b = 0.0;
    } else {
        b = (dm * sxy - sx * sy) / denom;
        a = (sy - b * sx) / dm;
    }
    double ss = 0;
    for (std::size_t i = off; i < n; ++i) {
        const double e = samples[i].second - (a + b * samples[i].first);
        ss += e * e;
    }
    r.value = a;
    r.residual = std::sqrt(ss / dm);
    return r;
}

GrowthEstimate levin_estimate(const CoefficientSequence& b, const ProximateOrder& po,
                              std::int64_t n_max) {
    if (!(po.rho_limit() > 0.0))
        throw std::invalid_argument("levin_estimate requires positive order");
    const double rho = po.rho_limit();
    GrowthEstimate g;
    g.functional = GrowthEstimate::Functional::LevinType;
    auto value = [&](std::int64_t n) {
        const CoeffValue v = b.at(n);
        if (v.sign() == 0) return kNegInf;
        return std::exp(std::log(v_inverse_value(po, static_cast<double>(n))) +
                        v.log_abs_value() / static_cast<double>(n));
    };
    WindowScan scan = scan_windows(1, n_max, 4, value);
    g.window_values = scan.window_sup;
    g.running_sup = scan.running_sup;
    if (g.window_values.empty()) {
        g.degenerate = true;
        return g;
    }
    auto ext = limsup_extrapolate(
        with_abscissa(g.window_values, [](double W) { return 1.0 / std::log(W); }));
    g.extrapolated = ext.value;
    g.residual = ext.residual;
    g.is_infinite = ext.is_infinite;
    if (!g.is_infinite) {
        if (g.extrapolated <= 0.0)
            g.degenerate = true;
        else
            g.derived["sigma"] =
                std::pow(g.extrapolated, rho) / (std::exp(1.0) * rho);
    }
    return g;
}

GrowthEstimate disk_type_estimate(const CoefficientSequence& a, const ProximateOrder& po,
                                  std::int64_t k_max) {
    if (!(po.rho_limit() > 0.0))
        throw std::invalid_argument("disk_type_estimate requires positive order");
    const double rho = po.rho_limit();
    GrowthEstimate g;
    g.functional = GrowthEstimate::Functional::DiskType;
    auto value = [&](std::int64_t k) {
        const CoeffValue v = a.at(k);
        if (v.sign() == 0) return kNegInf;
        const double la = v.log_abs_value();
        return xi_value(po, static_cast<double>(k)) * la / static_cast<double>(k);
    };
    WindowScan scan = scan_windows(2, k_max, 4, value);
    g.window_values = scan.window_sup;
    g.running_sup = scan.running_sup;
    if (g.window_values.empty()) {
        g.degenerate = true;
        return g;
    }
    auto ext = limsup_extrapolate(
        with_abscissa(g.window_values, [](double W) { return 1.0 / std::log(W); }));
    g.extrapolated = ext.value;
    g.residual = ext.residual;
    g.is_infinite = ext.is_infinite;
    if (!g.is_infinite) {
        if (g.extrapolated <= 0.0)
            g.degenerate = true;
        else
            g.derived["sigma"] =
                std::pow(g.extrapolated * rho / (rho + 1.0), rho + 1.0) / rho;
    }
    return g;
}

GrowthEstimate beuermann_lambda(const CoefficientSequence& a, std::int64_t k_max) {
    GrowthEstimate g;
    g.functional = GrowthEstimate::Functional::BeuermannLambda;
    auto value = [&](std::int64_t k) {
        const CoeffValue v = a.at(k);
        if (v.sign() == 0) return 0.0;
        const double la = std::max(v.log_abs_value(), 0.0);
        const double ll = la > 1.0 ? std::log(la) : 0.0;
        return ll / std::log(static_cast<double>(k));
    };
    WindowScan scan = scan_windows(2, k_max, 4, value);
    g.window_values = scan.window_sup;
    g.running_sup = scan.running_sup;
    if (g.window_values.empty()) {
        g.degenerate = true;
        return g;
    }
    auto ext = limsup_extrapolate(
        with_abscissa(g.window_values, [](double W) { return 1.0 / std::log(W); }));
    g.residual = ext.residual;
    const double ratio = std::max(ext.value, 0.0);
    g.extrapolated = ratio;
    if (ext.is_infinite || ratio >= 1.0 - 1.0 / std::log(static_cast<double>(k_max))) {
        g.is_infinite = true;
    } else {
        g.derived["lambda"] = ratio / (1.0 - ratio);
        if (ratio == 0.0) g.derived["lambda"] = 0.0;
    }
    return g;
}

GrowthEstimate log_order_type_entire(const CoefficientSequence& C, std::int64_t n_max) {
    GrowthEstimate g;
    g.functional = GrowthEstimate::Functional::LogOrderTypeEntire;
    const double e = std::exp(1.0);
    // eta_n = loglog(1/|C_n|)/log n -> rho0/(rho0-1)
    auto eta = [&](std::int64_t n) {
        const CoeffValue v = C.at(n);
        if (v.sign() == 0) return kNegInf;
        const double l = -v.log_abs_value();  // log(1/|C_n|)
        if (l <= e) return kNegInf;
        return std::log(l) / std::log(static_cast<double>(n));
    };
    WindowScan scan = scan_windows(2, n_max, 4, eta);
    g.window_values = scan.window_sup;
    g.running_sup = scan.running_sup;
    if (g.window_values.empty()) {
        g.degenerate = true;
        return g;
    }
    auto ext = limsup_extrapolate(
        with_abscissa(g.window_values, [](double W) { return 1.0 / std::log(W); }));
    g.extrapolated = ext.value;
    g.residual = ext.residual;
    const double eta_lim = ext.value;
    if (eta_lim <= 1.0 + 2.0 / std::log(static_cast<double>(n_max))) {
        // the logarithmic scale is exceeded: infinite logarithmic order
        g.is_infinite = true;
        return g;
    }
    const double rho0 = eta_lim / (eta_lim - 1.0);
    g.derived["rho0"] = rho0;

    // log of n^{rho0} / (log 1/|C_n|)^{rho0-1}, fitted against loglogW/logW
    auto type_val = [&](std::int64_t n) {
        const CoeffValue v = C.at(n);
        if (v.sign() == 0) return kNegInf;
        const double l = -v.log_abs_value();
        if (l <= e) return kNegInf;
        return rho0 * std::log(static_cast<double>(n)) - (rho0 - 1.0) * std::log(l);
    };
    WindowScan tscan = scan_windows(2, n_max, 4, type_val);
    auto text = limsup_extrapolate(with_abscissa(
        tscan.window_sup, [](double W) { return std::log(std::log(W)) / std::log(W); }));
    const double k_sigma = std::exp(text.value);
    g.derived["sigma0"] =
        k_sigma * std::pow(rho0 - 1.0, rho0 - 1.0) / std::pow(rho0, rho0);
    return g;
}

GrowthEstimate log_order_type_disk(const CoefficientSequence& a, std::int64_t k_max) {
    GrowthEstimate g;
    g.functional = GrowthEstimate::Functional::LogOrderTypeDisk;
    auto eta = [&](std::int64_t k) {
        const double llk = std::log(std::log(static_cast<double>(k)));
        if (llk <= 1.0) return kNegInf;
        const CoeffValue v = a.at(k);
        if (v.sign() == 0) return 0.0;
        const double la = std::max(v.log_abs_value(), 0.0);
        const double ll = la > 1.0 ? std::log(la) : 0.0;
        return ll / llk;
    };
    WindowScan scan = scan_windows(17, k_max, 5, eta);
    g.window_values = scan.window_sup;
    g.running_sup = scan.running_sup;
    if (g.window_values.empty()) {
        g.degenerate = true;
        return g;
    }
    auto ext = limsup_extrapolate(with_abscissa(
        g.window_values, [](double W) { return 1.0 / std::log(std::log(W)); }));
    g.extrapolated = ext.value;
    g.residual = ext.residual;
    g.is_infinite = ext.is_infinite;
    if (g.is_infinite) return g;
    const double rho0 = std::max(1.0, ext.value);  // below 1 is out of scale
    g.derived["rho0"] = rho0;
    if (rho0 <= 1.01) return g;  // sigma0 defined only for rho0 > 1

    auto type_val = [&](std::int64_t k) {
        const CoeffValue v = a.at(k);
        if (v.sign() == 0) return kNegInf;
        const double la = std::max(v.log_abs_value(), 0.0);
        if (la <= 1.0) return kNegInf;
        return std::log(la) - rho0 * std::log(std::log(static_cast<double>(k)));
    };
    WindowScan tscan = scan_windows(17, k_max, 5, type_val);
    auto text = limsup_extrapolate(with_abscissa(
        tscan.window_sup, [](double W) { return std::log(std::log(W)) / std::log(W); }));
    g.derived["sigma0"] = std::exp(text.value);
    return g;
}

GrowthEstimate direct_disk_growth(const CoefficientSequence& s,
                                  const std::vector<double>& y_grid,
                                  DirectDiskFunctional functional, const ProximateOrder* po,
                                  double rho0) {
    GrowthEstimate g;
    g.functional = GrowthEstimate::Functional::DirectDisk;
    std::vector<std::pair<double, double>> fit_pts;
    for (double y : y_grid) {
        const DiskValue M = evaluate_disk(s, y, 1e-9, 8'000'000);
        const double x = 1.0 / (1.0 - y);
        const double logM = std::log(std::max(M.value, 1e-300));
        if (functional == DirectDiskFunctional::SigmaOverV) {
            if (!po) throw std::invalid_argument("SigmaOverV requires a proximate order");
            const double ratio = logM / po->V(x);
            g.window_values.emplace_back(x, ratio);
            fit_pts.emplace_back(1.0 / std::log(x), ratio);
        } else {
            if (!(rho0 > 1.0))
                throw std::invalid_argument("LogOrderDisk requires rho0 > 1");
            const double L = std::log(x);
            g.window_values.emplace_back(x, logM / std::pow(L, rho0));
            if (logM > 1.0)
                fit_pts.emplace_back(std::log(L) / L, std::log(logM) - rho0 * std::log(L));
        }
    }
    if (g.window_values.empty()) {
        g.degenerate = true;
        return g;
    }
    auto ext = limsup_extrapolate(fit_pts);
    g.residual = ext.residual;
    g.is_infinite = ext.is_infinite;
    if (functional == DirectDiskFunctional::SigmaOverV) {
        g.extrapolated = ext.value;
        g.derived["sigma"] = ext.value;
    } else {
        g.extrapolated = std::exp(ext.value);
        g.derived["sigma0"] = g.extrapolated;
        g.derived["rho0"] = rho0;
    }
    return g;
}

GrowthEstimate singularity_circle_growth(const CoefficientSequence& h_seq,
                                         const std::vector<double>& x_grid,
                                         const ProximateOrder* po) {
    GrowthEstimate g;
    g.functional = GrowthEstimate::Functional::SingularityCircle;
    double ratio_min = std::numeric_limits<double>::infinity();
    double ratio_max = -std::numeric_limits<double>::infinity();
    int failures = 0;
    for (double x : x_grid) {
        double m1 = 0.0;
        bool ok = true;
        for (int j = 0; j < 64; ++j) {
            const double theta = 2.0 * std::numbers::pi_v<double> * j / 64.0;
            const std::complex<double> z =
                1.0 + std::complex<double>(std::cos(theta), std::sin(theta)) / x;
            try {
                m1 = std::max(m1, std::abs(evaluate_continued(h_seq, z, 1e-12)));
            } catch (const EvalError&) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            ++failures;
            continue;
        }
        g.window_values.emplace_back(x, m1);
        if (po) {
            const double ratio = std::log(std::max(m1, 1e-300)) / po->V(x);
            ratio_min = std::min(ratio_min, ratio);
            ratio_max = std::max(ratio_max, ratio);
        }
    }
    g.derived["failures"] = failures;
    if (po && !g.window_values.empty()) {
        g.derived["ratio_min"] = ratio_min;
        g.derived["ratio_max"] = ratio_max;
        g.extrapolated = ratio_max;
    }
    if (g.window_values.empty()) g.degenerate = true;
    return g;
}

}  // namespace polyafreq
