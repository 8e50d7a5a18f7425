// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "polyafreq/growth.hpp"
#include "polyafreq/io.hpp"
#include "polyafreq/karlin.hpp"
#include "polyafreq/pipelines.hpp"
#include "polyafreq/series_eval.hpp"
#include "polyafreq/verify.hpp"

using namespace polyafreq;

namespace {

int g_failures = 0;

void report(int id, const char* what, bool ok, const std::string& detail = "") {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", id, what,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

bool in_range(double v, double lo, double hi) {
    return v >= lo - 1e-12 && v <= hi + 1e-12;
}

bool within_rel(double v, double target, double tol) {
    return std::abs(v - target) <= tol * std::abs(target);
}

CoefficientSequence log_seq(std::function<double(std::int64_t)> f) {
    return CoefficientSequence::from_log_fn(std::move(f));
}

const GrowthComparison* find_growth(const PipelineReport& rep, const std::string& name) {
    for (const auto& g : rep.growth)
        if (g.name == name) return &g;
    return nullptr;
}

// 1: Karlin transforms of the four reference bases are window-verified PF_r
void criterion1() {
    struct Base {
        const char* name;
        CoefficientSequence c;
    };
    AESWParams expo;
    expo.gamma = 1;
    AESWParams poly;
    poly.alphas = {1, 2};
    std::vector<Base> bases;
    bases.push_back({"delta", CoefficientSequence::from_rationals({1})});
    bases.push_back({"exp", family_aesw(expo, 256)});
    bases.push_back({"(1+z)(1+2z)", family_aesw(poly, 8)});
    bases.push_back({"qproduct(1/2,20)", family_qproduct(Rational(1, 2), 20)});

    bool ok = true;
    std::string detail;
    for (const auto& b : bases) {
        for (int r : {2, 3, 4}) {
            const auto t0 = std::chrono::steady_clock::now();
            const KarlinOutput k = karlin_transform(b.c, r, 40, 1e-40);
            const PFVerdict v = verify_pf(k.d, r, 40, pick_strategy(40, r, 0, 100000));
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (v.status != PFVerdict::Status::CertifiedPass || secs >= 300.0) {
                ok = false;
                detail += std::string(b.name) + " r=" + std::to_string(r) + " not certified; ";
            }
        }
    }
    report(1, "Karlin transform of reference bases verified PF_r on 40x40 windows", ok,
           detail);
}

// 2: coefficient-side type functional for b_n = 1/n!
void criterion2() {
    const auto b = log_seq([](std::int64_t n) { return -std::lgamma(n + 1.0); });
    const GrowthEstimate g = levin_estimate(b, make_constant_po(1.0), 10000);
    const double e = std::exp(1.0);
    const double sup = g.running_sup.empty() ? 0.0 : g.running_sup.back().second;
    const double sigma = g.derived.count("sigma") ? g.derived.at("sigma") : 0.0;
    const bool ok = !g.is_infinite && in_range(sup, 0.99 * e, e) && in_range(sigma, 0.98, 1.02);
    char buf[128];
    std::snprintf(buf, sizeof buf, "sup=%.6f sigma=%.6f", sup, sigma);
    report(2, "type functional recovers e and sigma=1 for 1/n!", ok, buf);
}

// 3: disk-type functional for log a_k = 2 sqrt(k), plus the pipeline value
void criterion3(const PipelineReport& thma) {
    const auto a = log_seq([](std::int64_t k) { return 2.0 * std::sqrt(double(k)); });
    const GrowthEstimate g = disk_type_estimate(a, make_constant_po(1.0), 1000000);
    const double sup = g.running_sup.empty() ? 0.0 : g.running_sup.back().second;
    const double sigma = g.derived.count("sigma") ? g.derived.at("sigma") : 0.0;
    bool ok = in_range(sup, 1.98, 2.0) && in_range(sigma, 0.96, 1.0);
    const GrowthComparison* disk = find_growth(thma, "disk_type_limsup");
    ok = ok && disk && !disk->measured_infinite && within_rel(disk->measured, 2.0, 0.05);
    char buf[160];
    std::snprintf(buf, sizeof buf, "sup=%.6f sigma=%.6f pipeline=%.6f", sup, sigma,
                  disk ? disk->measured : -1.0);
    report(3, "disk-type functional recovers 2 and sigma_h=1 for log a_k = 2 sqrt(k)", ok,
           buf);
}

// 4: logarithmic order/type from entire coefficients
void criterion4() {
    const auto c = log_seq([](std::int64_t n) { return -double(n) * double(n); });
    const GrowthEstimate g = log_order_type_entire(c, 1000);
    const double rho0 = g.derived.count("rho0") ? g.derived.at("rho0") : 0.0;
    const double sigma0 = g.derived.count("sigma0") ? g.derived.at("sigma0") : 0.0;
    bool ok = !g.is_infinite && std::abs(rho0 - 2.0) <= 0.05 && std::abs(sigma0 - 0.25) <= 0.02;

    const CoefficientSequence F = family_qproduct(Rational(1, 2), 256);
    const GrowthEstimate gq = log_order_type_entire(F, 256);
    const double target = 1.0 / (2.0 * std::log(2.0));
    const double sq = gq.derived.count("sigma0") ? gq.derived.at("sigma0") : 0.0;
    ok = ok && !gq.is_infinite && within_rel(sq, target, 0.10);
    char buf[160];
    std::snprintf(buf, sizeof buf, "rho0=%.4f sigma0=%.4f qprod_sigma0=%.4f (target %.4f)",
                  rho0, sigma0, sq, target);
    report(4, "logarithmic order/type functional on e^{-n^2} and the q-product", ok, buf);
}

// 5: full q-product pipeline with a direct maximum-modulus cross-check
void criterion5(const PipelineReport& rep) {
    const GrowthComparison* rho0 = find_growth(rep, "rho0");
    const GrowthComparison* sigma0 = find_growth(rep, "sigma0");
    const GrowthComparison* direct = find_growth(rep, "direct_disk_sigma0");
    const double target = 1.0 / (2.0 * std::log(2.0));
    bool ok = rep.pf_verdict.status == PFVerdict::Status::CertifiedPass;
    ok = ok && rho0 && in_range(rho0->measured, 1.9, 2.1);
    ok = ok && sigma0 && within_rel(sigma0->measured, target, 0.15);
    ok = ok && direct && direct->pass;
    ok = ok && rep.ok;
    char buf[160];
    std::snprintf(buf, sizeof buf, "rho0=%.4f sigma0=%.4f direct=%.4f", rho0 ? rho0->measured : -1,
                  sigma0 ? sigma0->measured : -1, direct ? direct->measured : -1);
    report(5, "q=1/2 pipeline: rho0 near 2, sigma0 near 1/(2 ln 2), direct cross-check", ok,
           buf);
}

// 6: lower-order functional
void criterion6() {
    const auto a0 = log_seq([](std::int64_t) { return 0.0; });
    const auto a1 = log_seq([](std::int64_t k) { return std::sqrt(double(k)); });
    const auto a2 = log_seq([](std::int64_t k) { return std::pow(double(k), 2.0 / 3.0); });
    const GrowthEstimate g0 = beuermann_lambda(a0, 1000000);
    const GrowthEstimate g1 = beuermann_lambda(a1, 1000000);
    const GrowthEstimate g2 = beuermann_lambda(a2, 1000000);
    auto lam = [](const GrowthEstimate& g) {
        return g.derived.count("lambda") ? g.derived.at("lambda") : -1.0;
    };
    const bool ok = !g0.is_infinite && std::abs(lam(g0)) <= 1e-9 && !g1.is_infinite &&
                    std::abs(lam(g1) - 1.0) <= 0.05 && !g2.is_infinite &&
                    std::abs(lam(g2) - 2.0) <= 0.10;
    char buf[128];
    std::snprintf(buf, sizeof buf, "lambda = %.4f / %.4f / %.4f", lam(g0), lam(g1), lam(g2));
    report(6, "lower-order functional recovers lambda in {0, 1, 2}", ok, buf);
}

// 7: the (1-z) multiplication drops the verified order by exactly one
void criterion7(const PipelineReport& thma) {
    bool ok = thma.pf_verdict.status == PFVerdict::Status::CertifiedPass;
    const CoefficientSequence dh = dh_transform(thma.coefficients);
    VerifyStrategy ex;
    const PFVerdict v = verify_pf(dh, thma.r - 1, 39, pick_strategy(39, thma.r - 1, 0, 100000));
    ok = ok && v.status == PFVerdict::Status::CertifiedPass;

    // nonnegativity of the (1-z)-multiplied series out to k = 1000:
    // exact differences on the exact prefix, log-monotonicity beyond it
    for (std::int64_t k = 1; k <= thma.exact_upto && ok; ++k)
        if (dh.at(k).exact < 0) ok = false;
    for (std::int64_t k = thma.exact_upto + 1; k <= 1000 && ok; ++k) {
        const double cur = thma.coefficients_log.at(k).log_abs_value();
        const double prev = thma.coefficients_log.at(k - 1).log_abs_value();
        if (cur < prev - 1e-9) ok = false;
    }
    report(7, "(1-z)-multiplied pipeline output is PF_{r-1} and coefficientwise nonnegative",
           ok);
}

// 8: continuation values around the singular point
void criterion8(const PipelineReport& thma) {
    const auto h1 = CoefficientSequence::from_rationals({1});
    const auto h2 = CoefficientSequence::from_rationals({1, 1});
    const std::vector<double> xs = {2.0, 5.0, 10.0, 20.0, 50.0, 100.0};
    const GrowthEstimate g1 = singularity_circle_growth(h1, xs);
    const GrowthEstimate g2 = singularity_circle_growth(h2, xs);
    bool ok = g1.window_values.size() == xs.size() && g2.window_values.size() == xs.size();
    for (std::size_t i = 0; ok && i < xs.size(); ++i) {
        if (std::abs(g1.window_values[i].second - xs[i]) > 1e-8 * xs[i]) ok = false;
        if (std::abs(g2.window_values[i].second - xs[i] * xs[i]) > 1e-8 * xs[i] * xs[i])
            ok = false;
    }
    const double rmin = thma.identity_residuals.count("singularity_ratio_min")
                            ? thma.identity_residuals.at("singularity_ratio_min")
                            : -1.0;
    const double rmax = thma.identity_residuals.count("singularity_ratio_max")
                            ? thma.identity_residuals.at("singularity_ratio_max")
                            : -1.0;
    ok = ok && rmin >= 0.3 && rmax <= 3.0;
    char buf[96];
    std::snprintf(buf, sizeof buf, "pipeline ratio band [%.4f, %.4f]", rmin, rmax);
    report(8, "continuation reproduces 1/(1-z)^m exactly; pipeline circle growth bounded",
           ok, buf);
}

// 9: scale-function algebra round trips, and the maximal-term inequality
void criterion9() {
    bool ok = true;
    auto check_roundtrip = [&](const ProximateOrder& po, double t_max) {
        auto v_inv = po.scale_inverse();
        for (double t = 2.0; t <= t_max; t *= 7.0) {
            const double x = v_inv(t);
            if (std::abs(po.V(x) / t - 1.0) > 1e-6) ok = false;
        }
    };
    for (double rho : {0.5, 1.0, 2.0, 3.0}) check_roundtrip(make_constant_po(rho), 1e8);
    for (double rho0 : {2.0, 3.0}) check_roundtrip(make_logarithmic_po(rho0), 1e4);
    for (double rho : {0.5, 1.0, 2.0, 3.0}) {
        const ProximateOrder back = faber_inverse(faber_forward(make_constant_po(rho)));
        if (std::abs(back.rho_limit() - rho) > 1e-6) ok = false;
        if (check_int_identity(make_constant_po(rho), {1e2, 1e4, 1e6}) > 1e-6) ok = false;
    }

    AESWParams expo;
    expo.gamma = 1;
    std::vector<CoefficientSequence> seqs;
    seqs.push_back(CoefficientSequence::from_rationals(std::vector<Rational>(4096, 1)));
    seqs.push_back(family_aesw(expo, 4096));
    seqs.push_back(log_seq([](std::int64_t k) { return 2.0 * std::sqrt(double(k)); }));
    for (const auto& s : seqs)
        for (double y : {0.5, 0.9})
            for (double sp : {0.25, 0.5, 0.75})
                if (!check_ineqe(s, y, sp)) ok = false;
    report(9, "scale algebra round trips within 1e-6; maximal-term inequality holds", ok);
}

// 10: exact determinant engine against an independent oracle
void criterion10() {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7), size(1, 6);
    bool ok = true;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const int n = size(rng);
        RationalMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = Rational(num(rng), den(rng));
        if (det_exact(m) != det_cofactor(m)) ok = false;
    }

    const int N = 16;
    std::vector<Rational> coeffs;
    std::uniform_int_distribution<int> cnum(-5, 12);
    for (int k = 0; k < N; ++k) coeffs.push_back(Rational(cnum(rng), den(rng)));
    const ToeplitzWindow w = build_window(CoefficientSequence::from_rationals(coeffs), N);
    std::uniform_int_distribution<int> order(1, 4), idx(0, N - 2);
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const int k = order(rng);
        std::vector<int> rows, cols;
        while (static_cast<int>(rows.size()) < k) {
            const int v = idx(rng);
            if (std::find(rows.begin(), rows.end(), v) == rows.end()) rows.push_back(v);
        }
        while (static_cast<int>(cols.size()) < k) {
            const int v = idx(rng);
            if (std::find(cols.begin(), cols.end(), v) == cols.end()) cols.push_back(v);
        }
        std::sort(rows.begin(), rows.end());
        std::sort(cols.begin(), cols.end());
        std::vector<int> rows1 = rows, cols1 = cols;
        for (int& v : rows1) ++v;
        for (int& v : cols1) ++v;
        if (minor_det(w, rows, cols) != minor_det(w, rows1, cols1)) ok = false;
    }
    report(10, "determinant engine matches the cofactor oracle; minors are shift invariant",
           ok);
}

}  // namespace

int main() {
    criterion1();
    criterion2();

    AESWParams expo;
    expo.gamma = 1;
    PipelineOptions opt;  // r=2, K=10000, N_verify=40, seed=0
    const PipelineReport thma = theorem_a_pipeline(expo, opt);
    const PipelineReport thmc = theorem_c_pipeline(Rational(1, 2), 40, opt);

    criterion3(thma);
    criterion4();
    criterion5(thmc);
    criterion6();
    criterion7(thma);
    criterion8(thma);
    criterion9();
    criterion10();

    if (g_failures > 0) std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures;
}
