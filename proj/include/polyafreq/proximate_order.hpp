#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyafreq {

/// Error from scale-function inversion (target outside range, or the
/// sampled function turned out not to be monotone).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Monotone scale function t -> value on (0, inf).
struct ScaleFunction {
    enum class Kind { V, VInverse, Xi, Psi, Custom };

    std::function<double(double)> value_fn;
    Kind kind = Kind::Custom;

    double operator()(double t) const { return value_fn(t); }
};

/// Solves f(x) = t for monotone increasing f on (0, inf). Brackets in
/// log-space grown geometrically, bisection refined by secant steps.
double invert_monotone(const std::function<double(double)>& f, double t,
                       double rel_tol = 1e-12);

/// A growth exponent x -> rho(x) with limit rho, together with the derived
/// scale V(x) = x^rho(x). Below patch_x0 the scale is replaced by a linear
/// ramp so that V is strictly increasing on (0, inf) with V(0+) = 0.
class ProximateOrder {
  public:
    enum class Kind { Constant, Logarithmic, Tabulated, Custom };

    ProximateOrder(Kind kind, std::function<double(double)> v_fn, double rho_limit,
                   double patch_x0, std::function<double(double)> derivative_fn = nullptr)
        : kind_(kind),
          v_fn_(std::move(v_fn)),
          rho_limit_(rho_limit),
          patch_x0_(patch_x0),
          derivative_fn_(std::move(derivative_fn)) {}

    double V(double x) const {
        if (x <= 0.0) return 0.0;
        if (x < patch_x0_) return x * (v_fn_(patch_x0_) / patch_x0_);
        return v_fn_(x);
    }

    double rho(double x) const {
        if (x <= 0.0 || x == 1.0) return rho_limit_;
        return std::log(V(x)) / std::log(x);
    }

    double rho_limit() const { return rho_limit_; }
    double patch_x0() const { return patch_x0_; }
    Kind kind() const { return kind_; }
    bool has_derivative() const { return static_cast<bool>(derivative_fn_); }
    double rho_derivative(double x) const { return derivative_fn_(x); }

    /// Parameter of the generating family (rho for constant, rho0 for
    /// logarithmic); NaN otherwise.
    double family_parameter() const { return family_parameter_; }
    void set_family_parameter(double p) { family_parameter_ = p; }

    ScaleFunction scale() const {
        return {[po = *this](double x) { return po.V(x); }, ScaleFunction::Kind::V};
    }
    ScaleFunction scale_inverse() const {
        return {[po = *this](double t) {
                    return invert_monotone([&po](double x) { return po.V(x); }, t);
                },
                ScaleFunction::Kind::VInverse};
    }

  private:
    Kind kind_;
    std::function<double(double)> v_fn_;
    double rho_limit_;
    double patch_x0_;
    std::function<double(double)> derivative_fn_;
    double family_parameter_ = std::nan("");
};

ProximateOrder make_constant_po(double rho);
ProximateOrder make_logarithmic_po(double rho0);
ProximateOrder make_tabulated_po(const std::vector<std::pair<double, double>>& samples,
                                 double rho_limit);

/// Numeric inverse of a strictly increasing scale on `domain`. The sampled
/// monotonicity check throws DomainError when it fails.
ScaleFunction invert_scale(const ScaleFunction& s, std::pair<double, double> domain);

/// xi(t): inverse of x V(x)   (entire-interpolant scale of the Faber relation).
ScaleFunction xi_of(const ProximateOrder& po);

/// psi(x): inverse of t V_{-1}(t).
ScaleFunction psi_of(const ProximateOrder& po);

/// rho_1(x) = log psi(x)/log x, with limit rho/(rho+1). Requires rho > 0.
ProximateOrder rho1_of(const ProximateOrder& po);

/// rho_A(t) = rho(xi(t))/(rho(xi(t))+1); the scale is V_A(t) = t/xi(t).
ProximateOrder faber_forward(const ProximateOrder& po);

/// Inverse of faber_forward; requires the limit of poA below 1.
ProximateOrder faber_inverse(const ProximateOrder& poA);

/// sup over the grid of |V(kx)/V(x) - k^rho| / k^rho, k log-sampled in k_range.
double check_regular_variation(const ProximateOrder& po, std::pair<double, double> k_range,
                               const std::vector<double>& x_grid, int k_samples = 9);

/// sup over t_grid of the relative error in xi(psi_{-1}(t)) = V_{-1}(t).
double check_int_identity(const ProximateOrder& po, const std::vector<double>& t_grid);

}  // namespace polyafreq
