#include "polyafreq/proximate_order.hpp"

#include <algorithm>
#include <cmath>

namespace polyafreq {

double invert_monotone(const std::function<double(double)>& f, double t, double rel_tol) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("inversion target must be finite and positive");
    // bracket in u = log x
    double ulo = 0.0, uhi = 0.0;
    double flo = f(1.0), fhi = flo;
    int guard = 0;
    while (flo > t) {
        ulo -= std::max(1.0, std::abs(ulo));
        flo = f(std::exp(ulo));
        if (++guard > 64) throw DomainError("inversion: no lower bracket");
    }
    guard = 0;
    while (fhi < t) {
        uhi += std::max(1.0, std::abs(uhi));
        fhi = f(std::exp(uhi));
        if (++guard > 64) throw DomainError("inversion: no upper bracket");
    }
    for (int it = 0; it < 200 && uhi - ulo > 1e-15; ++it) {
        const double um = 0.5 * (ulo + uhi);
        const double fm = f(std::exp(um));
        if (fm < t)
            ulo = um;
        else
            uhi = um;
    }
    // secant polish in x
    double x0 = std::exp(ulo), x1 = std::exp(uhi);
    double f0 = f(x0) - t, f1 = f(x1) - t;
    for (int it = 0; it < 8; ++it) {
        if (f1 == f0) break;
        const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (!std::isfinite(x2) || x2 <= 0.0) break;
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f(x1) - t;
        if (std::abs(x1 - x0) <= rel_tol * std::abs(x1)) break;
    }
    return x1;
}

ProximateOrder make_constant_po(double rho) {
    if (!(rho > 0.0)) throw DomainError("constant proximate order requires rho > 0");
    ProximateOrder po(
        ProximateOrder::Kind::Constant, [rho](double x) { return std::pow(x, rho); }, rho,
        /*patch_x0=*/0.0, [](double) { return 0.0; });
    po.set_family_parameter(rho);
    return po;
}

ProximateOrder make_logarithmic_po(double rho0) {
    if (!(rho0 >= 1.0)) throw DomainError("logarithmic proximate order requires rho0 >= 1");
    const double e = std::exp(1.0);
    ProximateOrder po(
        ProximateOrder::Kind::Logarithmic,
        [rho0](double x) { return std::pow(std::log(x), rho0); }, /*rho_limit=*/0.0,
        /*patch_x0=*/e);
    po.set_family_parameter(rho0);
    return po;
}

ProximateOrder make_tabulated_po(const std::vector<std::pair<double, double>>& samples,
                                 double rho_limit) {
    if (samples.size() < 2) throw DomainError("tabulated proximate order needs >= 2 samples");
    auto pts = samples;
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (!(pts[i].first > 0.0) || pts[i].first == pts[i + 1].first)
            throw DomainError("tabulated samples must have distinct positive abscissas");
    const double x_first = pts.front().first;
    // rho interpolated linearly in log x; held constant past the last sample,
    // blended toward rho_limit is left to the caller's table.
    auto rho_at = [pts, rho_limit](double x) {
        const double u = std::log(x);
        if (u <= std::log(pts.front().first)) return pts.front().second;
        if (u >= std::log(pts.back().first)) return pts.back().second;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            const double u0 = std::log(pts[i].first), u1 = std::log(pts[i + 1].first);
            if (u <= u1) {
                const double w = (u - u0) / (u1 - u0);
                return (1.0 - w) * pts[i].second + w * pts[i + 1].second;
            }
        }
        return rho_limit;
    };
    return ProximateOrder(
        ProximateOrder::Kind::Tabulated,
        [rho_at](double x) { return std::pow(x, rho_at(x)); }, rho_limit,
        /*patch_x0=*/std::max(x_first, 1.5));
}

ScaleFunction invert_scale(const ScaleFunction& s, std::pair<double, double> domain) {
    const auto [lo, hi] = domain;
    if (!(lo > 0.0) || !(hi > lo)) throw DomainError("invert_scale: bad domain");
    double prev = s(lo);
    for (int i = 1; i <= 32; ++i) {
        const double x = lo * std::pow(hi / lo, i / 32.0);
        const double cur = s(x);
        if (!(cur > prev)) throw DomainError("invert_scale: scale is not strictly increasing");
        prev = cur;
    }
    auto fn = s.value_fn;
    return {[fn](double t) { return invert_monotone(fn, t); }, ScaleFunction::Kind::VInverse};
}

ScaleFunction xi_of(const ProximateOrder& po) {
    return {[po](double t) {
                return invert_monotone([&po](double x) { return x * po.V(x); }, t);
            },
            ScaleFunction::Kind::Xi};
}

ScaleFunction psi_of(const ProximateOrder& po) {
    return {[po](double x) {
                auto v_inv = [&po](double t) {
                    return invert_monotone([&po](double y) { return po.V(y); }, t);
                };
                return invert_monotone([&v_inv](double t) { return t * v_inv(t); }, x);
            },
            ScaleFunction::Kind::Psi};
}

ProximateOrder rho1_of(const ProximateOrder& po) {
    if (!(po.rho_limit() > 0.0)) throw DomainError("rho1_of requires positive limit order");
    const double rho = po.rho_limit();
    if (po.kind() == ProximateOrder::Kind::Constant)
        return make_constant_po(rho / (rho + 1.0));  // psi(x) = x^{rho/(rho+1)} exactly
    ScaleFunction psi = psi_of(po);
    return ProximateOrder(ProximateOrder::Kind::Custom,
                          [psi](double x) { return psi(x); }, rho / (rho + 1.0),
                          /*patch_x0=*/0.0);
}

ProximateOrder faber_forward(const ProximateOrder& po) {
    const double rho = po.rho_limit();
    if (!(rho > 0.0)) throw DomainError("faber_forward requires positive limit order");
    if (po.kind() == ProximateOrder::Kind::Constant)
        return make_constant_po(rho / (rho + 1.0));  // V_A(t) = t / t^{1/(rho+1)}
    ScaleFunction xi = xi_of(po);
    // V_A(t) = V(xi(t)) = t / xi(t)
    return ProximateOrder(ProximateOrder::Kind::Custom,
                          [xi](double t) { return t / xi(t); }, rho / (rho + 1.0),
                          /*patch_x0=*/0.0);
}

ProximateOrder faber_inverse(const ProximateOrder& poA) {
    const double rhoA = poA.rho_limit();
    if (!(rhoA > 0.0) || !(rhoA < 1.0))
        throw DomainError("faber_inverse requires limit order in (0,1)");
    if (poA.kind() == ProximateOrder::Kind::Constant)
        return make_constant_po(rhoA / (1.0 - rhoA));
    // xi(t) = t / V_A(t); from t = x V(x) with x = xi(t) we get
    // V(x) = t/x at t = xi_{-1}(x).
    auto xi_inv = [poA](double x) {
        return invert_monotone([&poA](double t) { return t / poA.V(t); }, x);
    };
    return ProximateOrder(ProximateOrder::Kind::Custom,
                          [xi_inv](double x) { return xi_inv(x) / x; },
                          rhoA / (1.0 - rhoA), /*patch_x0=*/0.0);
}

double check_regular_variation(const ProximateOrder& po, std::pair<double, double> k_range,
                               const std::vector<double>& x_grid, int k_samples) {
    const auto [ka, kb] = k_range;
    if (!(ka > 0.0) || !(kb >= ka)) throw DomainError("check_regular_variation: bad k range");
    const double rho = po.rho_limit();
    double worst = 0.0;
    for (int i = 0; i < k_samples; ++i) {
        const double k = k_samples == 1 ? ka
                                        : ka * std::pow(kb / ka, double(i) / (k_samples - 1));
        const double kr = std::pow(k, rho);
        for (double x : x_grid) {
            const double dev = std::abs(po.V(k * x) / po.V(x) - kr) / kr;
            worst = std::max(worst, dev);
        }
    }
    return worst;
}

double check_int_identity(const ProximateOrder& po, const std::vector<double>& t_grid) {
    ScaleFunction xi = xi_of(po);
    auto v_inv = po.scale_inverse();
    double worst = 0.0;
    for (double t : t_grid) {
        const double vi = v_inv(t);
        const double lhs = xi(t * vi);  // psi_{-1}(t) = t V_{-1}(t)
        worst = std::max(worst, std::abs(lhs - vi) / std::abs(vi));
    }
    return worst;
}

}  // namespace polyafreq
