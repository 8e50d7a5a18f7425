#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "polyafreq/proximate_order.hpp"

using namespace polyafreq;

namespace {

// independent inverse: plain bisection in x, no shared code with the library
double bisect_inverse(const std::function<double(double)>& f, double t, double lo, double hi) {
    for (int i = 0; i < 400; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < t)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("constant order: V is the exact power law") {
    const ProximateOrder po = make_constant_po(2.0);
    CHECK(po.V(3.0) == doctest::Approx(9.0).epsilon(1e-15));
    const ProximateOrder po1 = make_constant_po(1.0);
    CHECK(po1.V(5.0) == doctest::Approx(5.0).epsilon(1e-15));
    const ProximateOrder poh = make_constant_po(0.5);
    CHECK(poh.scale_inverse()(4.0) == doctest::Approx(16.0).epsilon(1e-10));
    CHECK_THROWS_AS(make_constant_po(0.0), DomainError);
    CHECK_THROWS_AS(make_constant_po(-1.0), DomainError);
}

TEST_CASE("logarithmic order: V = (log x)^rho0 above the patch") {
    const ProximateOrder po = make_logarithmic_po(2.0);
    CHECK(po.V(std::exp(10.0)) == doctest::Approx(100.0).epsilon(1e-12));
    const ProximateOrder po3 = make_logarithmic_po(3.0);
    CHECK(po3.V(std::exp(10.0)) == doctest::Approx(1000.0).epsilon(1e-12));
    CHECK(po.rho_limit() == 0.0);
    CHECK_THROWS_AS(make_logarithmic_po(0.5), DomainError);

    // V_inverse(100) = e^10, against the bisection oracle
    const double oracle = bisect_inverse(
        [](double x) { return std::pow(std::log(x), 2.0); }, 100.0, 3.0, 1e10);
    const double got = po.scale_inverse()(100.0);
    CHECK(got == doctest::Approx(oracle).epsilon(1e-6));
    CHECK(got == doctest::Approx(std::exp(10.0)).epsilon(1e-6));
}

TEST_CASE("logarithmic patch keeps V strictly increasing from 0") {
    const ProximateOrder po = make_logarithmic_po(2.0);
    double prev = 0.0;
    for (double x = 0.01; x < 50.0; x *= 1.07) {
        const double v = po.V(x);
        CHECK(v > prev);
        prev = v;
    }
    CHECK(po.V(0.0) == 0.0);
}

TEST_CASE("invert_scale round trips and rejects bad input") {
    const ProximateOrder po2 = make_constant_po(2.0);
    ScaleFunction inv = invert_scale(po2.scale(), {1e-6, 1e6});
    CHECK(inv(16.0) == doctest::Approx(4.0).epsilon(1e-10));

    // s = x V(x) for rho = 1: xi(t) = sqrt(t)
    const ProximateOrder po1 = make_constant_po(1.0);
    ScaleFunction s{[po1](double x) { return x * po1.V(x); }, ScaleFunction::Kind::Custom};
    ScaleFunction sinv = invert_scale(s, {1e-6, 1e6});
    CHECK(sinv(9.0) == doctest::Approx(3.0).epsilon(1e-10));

    const ProximateOrder plog = make_logarithmic_po(2.0);
    ScaleFunction linv = invert_scale(plog.scale(), {3.0, 1e10});
    CHECK(linv(25.0) == doctest::Approx(std::exp(5.0)).epsilon(1e-9));

    ScaleFunction bad{[](double x) { return std::sin(x); }, ScaleFunction::Kind::Custom};
    CHECK_THROWS_AS(invert_scale(bad, {1.0, 100.0}), DomainError);
    CHECK_THROWS_AS(sinv(-1.0), DomainError);
}

TEST_CASE("xi: inverse of x V(x)") {
    CHECK(xi_of(make_constant_po(1.0))(100.0) == doctest::Approx(10.0).epsilon(1e-10));
    CHECK(xi_of(make_constant_po(2.0))(8.0) == doctest::Approx(2.0).epsilon(1e-10));
    const ProximateOrder plog = make_logarithmic_po(2.0);
    const double t = std::exp(10.0) * 100.0;
    CHECK(xi_of(plog)(t) == doctest::Approx(std::exp(10.0)).epsilon(1e-5));
    // round trip: xi(t) V(xi(t)) = t
    for (double tt : {10.0, 1e3, 1e6, 1e9}) {
        const double x = xi_of(plog)(tt);
        CHECK(x * plog.V(x) == doctest::Approx(tt).epsilon(1e-9));
    }
}

TEST_CASE("psi: inverse of t V_inverse(t)") {
    const ProximateOrder po1 = make_constant_po(1.0);
    CHECK(psi_of(po1)(49.0) == doctest::Approx(7.0).epsilon(1e-9));
    const ProximateOrder po2 = make_constant_po(2.0);
    CHECK(psi_of(po2)(8.0) == doctest::Approx(4.0).epsilon(1e-9));

    const ProximateOrder plog = make_logarithmic_po(2.0);
    ScaleFunction psi = psi_of(plog);
    auto v_inv = plog.scale_inverse();
    for (double t : {5.0, 50.0, 500.0}) {
        const double x = t * v_inv(t);
        CHECK(psi(x) == doctest::Approx(t).epsilon(1e-9));
    }
}

TEST_CASE("rho1 limit is rho/(rho+1)") {
    CHECK(rho1_of(make_constant_po(1.0)).rho(1e6) == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(rho1_of(make_constant_po(2.0)).rho_limit() == doctest::Approx(2.0 / 3.0));
    CHECK(rho1_of(make_constant_po(3.0)).rho_limit() == doctest::Approx(0.75));
    CHECK_THROWS_AS(rho1_of(make_logarithmic_po(2.0)), DomainError);
}

TEST_CASE("faber forward: limit rho/(rho+1) and xi(t)=t^{1-rhoA}") {
    const ProximateOrder a1 = faber_forward(make_constant_po(1.0));
    CHECK(a1.rho_limit() == doctest::Approx(0.5));
    CHECK(xi_of(make_constant_po(1.0))(1e4) == doctest::Approx(std::pow(1e4, 0.5)).epsilon(1e-9));
    CHECK(faber_forward(make_constant_po(2.0)).rho_limit() == doctest::Approx(2.0 / 3.0));

    // logarithmic base: rho_A(t) decreasing toward 0 on a sampled grid
    const ProximateOrder plog = make_logarithmic_po(2.0);
    ScaleFunction xi = xi_of(plog);
    double prev = 1.0;
    for (double t : {1e3, 1e5, 1e7, 1e9}) {
        const double x = xi(t);
        const double rho_here = plog.rho(x);
        const double rho_a = rho_here / (rho_here + 1.0);
        CHECK(rho_a < prev);
        prev = rho_a;
    }
    CHECK(prev < 0.3);
}

TEST_CASE("faber inverse round trip") {
    CHECK(faber_inverse(make_constant_po(0.5)).rho_limit() == doctest::Approx(1.0));
    CHECK(faber_inverse(make_constant_po(2.0 / 3.0)).rho_limit() == doctest::Approx(2.0));
    CHECK_THROWS_AS(faber_inverse(make_constant_po(1.5)), DomainError);

    // custom rho_A(t) = 1/2 + 1/log t round-trips through the pair
    ProximateOrder poA(
        ProximateOrder::Kind::Custom,
        [](double t) { return std::pow(t, 0.5 + 1.0 / std::log(t)); }, 0.5,
        /*patch_x0=*/std::exp(3.0));
    const ProximateOrder po = faber_inverse(poA);
    const ProximateOrder back = faber_forward(po);
    for (double t : {1e4, 1e5, 1e6, 1e7}) {
        CHECK(back.rho(t) == doctest::Approx(poA.rho(t)).epsilon(1e-8));
    }
}

TEST_CASE("regular variation check") {
    std::vector<double> grid{10.0, 1e3, 1e5, 1e8};
    CHECK(check_regular_variation(make_constant_po(2.0), {0.5, 4.0}, grid) <
          1e-12);

    // slowly varying scale: deviation from k^0 = 1 decays like 1/log x
    const ProximateOrder plog = make_logarithmic_po(2.0);
    const double dev8 = check_regular_variation(plog, {2.0, 2.0}, {1e8}, 1);
    CHECK(dev8 < 0.1);
    CHECK(dev8 < check_regular_variation(plog, {2.0, 2.0}, {1e3}, 1));

    // perturbed rho(x) = 1 + 1/log x: deviation shrinks as x grows
    ProximateOrder pert(
        ProximateOrder::Kind::Custom,
        [](double x) { return std::pow(x, 1.0 + 1.0 / std::log(x)); }, 1.0,
        /*patch_x0=*/std::exp(2.0));
    const double dev_small = check_regular_variation(pert, {2.0, 2.0}, {1e3}, 1);
    const double dev_large = check_regular_variation(pert, {2.0, 2.0}, {1e8}, 1);
    CHECK(dev_large < dev_small);
}

TEST_CASE("identity xi(psi_inverse(t)) = V_inverse(t)") {
    CHECK(check_int_identity(make_constant_po(1.0), {100.0}) < 1e-9);
    std::vector<double> grid;
    for (double t = 1e2; t <= 1e8; t *= 100.0) grid.push_back(t);
    CHECK(check_int_identity(make_constant_po(2.0), grid) < 1e-9);
    // V_inverse grows like e^sqrt(t) here, so the grid stays small
    CHECK(check_int_identity(make_logarithmic_po(2.0), {16.0, 64.0, 256.0}) < 1e-6);
}

TEST_CASE("condition (ii) trend for constant order") {
    const ProximateOrder po = make_constant_po(2.0);
    REQUIRE(po.has_derivative());
    // x rho'(x)/rho(x) log x is identically 0 for the degenerate case
    for (double x = 10.0; x <= 1e8; x *= 10.0)
        CHECK(x * po.rho_derivative(x) / po.rho(x) * std::log(x) == 0.0);
}

TEST_CASE("monotone round trips on the test grid") {
    for (double rho : {0.5, 1.0, 2.0, 3.0}) {
        const ProximateOrder po = make_constant_po(rho);
        auto v_inv = po.scale_inverse();
        for (double t = 1.0; t <= 1e8; t *= 31.0) {
            CHECK(po.V(v_inv(t)) / t == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
    for (double rho0 : {2.0, 3.0}) {
        const ProximateOrder po = make_logarithmic_po(rho0);
        auto v_inv = po.scale_inverse();
        for (double t = 2.0; t <= 1e4; t *= 9.0) {
            CHECK(po.V(v_inv(t)) / t == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}
