#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "polyafreq/sequence.hpp"
#include "polyafreq/series_eval.hpp"

using namespace polyafreq;

TEST_CASE("aesw family: geometric, exponential, polynomial") {
    AESWParams geom;
    geom.betas = {Rational(1, 2)};
    const CoefficientSequence g = family_aesw(geom, 4);
    CHECK(g.at(0).exact == 1);
    CHECK(g.at(1).exact == Rational(1, 2));
    CHECK(g.at(2).exact == Rational(1, 4));
    CHECK(g.at(3).exact == Rational(1, 8));

    AESWParams expo;
    expo.gamma = 1;
    const CoefficientSequence e = family_aesw(expo, 4);
    CHECK(e.at(0).exact == 1);
    CHECK(e.at(1).exact == 1);
    CHECK(e.at(2).exact == Rational(1, 2));
    CHECK(e.at(3).exact == Rational(1, 6));

    AESWParams poly;
    poly.alphas = {1, 2};
    const CoefficientSequence p = family_aesw(poly, 4);
    CHECK(p.at(0).exact == 1);
    CHECK(p.at(1).exact == 3);
    CHECK(p.at(2).exact == 2);
    CHECK(p.at(3).exact == 0);
    REQUIRE(p.length_hint().has_value());
    // polynomial support: zero beyond the degree, all nonnegative
    for (int k = 0; k < 10; ++k) CHECK(p.at(k).exact >= 0);

    AESWParams bad;
    bad.betas = {2};
    CHECK_THROWS_WITH_AS(family_aesw(bad, 4), "beta must be < 1", std::invalid_argument);
}

TEST_CASE("q-product family") {
    const CoefficientSequence a = family_qproduct(Rational(1, 2), 2);
    CHECK(a.at(0).exact == 1);
    CHECK(a.at(1).exact == Rational(3, 4));
    CHECK(a.at(2).exact == Rational(1, 8));

    const CoefficientSequence b = family_qproduct(Rational(1, 2), 1);
    CHECK(b.at(0).exact == 1);
    CHECK(b.at(1).exact == Rational(1, 2));
    CHECK(b.at(2).exact == 0);

    const CoefficientSequence c = family_qproduct(Rational(1, 3), 3);
    CHECK(c.at(3).exact == Rational(1, 729));

    CHECK_THROWS_AS(family_qproduct(Rational(3, 2), 3), std::invalid_argument);
}

TEST_CASE("dh transform") {
    const auto ones = CoefficientSequence::from_rationals(std::vector<Rational>(8, 1));
    const CoefficientSequence d = dh_transform(ones);
    CHECK(d.at(0).exact == 1);
    for (int k = 1; k < 8; ++k) CHECK(d.at(k).exact == 0);

    std::vector<Rational> lin;
    for (int k = 0; k < 8; ++k) lin.push_back(k);
    const CoefficientSequence dl = dh_transform(CoefficientSequence::from_rationals(lin));
    CHECK(dl.at(0).exact == 0);
    for (int k = 1; k < 8; ++k) CHECK(dl.at(k).exact == 1);

    AESWParams geom;
    geom.betas = {Rational(1, 2)};
    CoefficientSequence g = family_aesw(geom, 8);
    g.set_claimed_class(1);
    const CoefficientSequence dg = dh_transform(g);
    CHECK(dg.at(1).exact == Rational(-1, 2));  // b_1 = 1/2 - 1
    CHECK(!dg.claimed_class().has_value());    // PF_1 claim dropped
}

TEST_CASE("dh of all-ones composed with prefix sums is the identity") {
    std::vector<Rational> vals{3, Rational(1, 7), 2, 5, Rational(9, 4), 0, 1};
    const auto s = CoefficientSequence::from_rationals(vals);
    const CoefficientSequence d = dh_transform(s);
    Rational acc = 0;
    for (std::size_t k = 0; k < vals.size(); ++k) {
        acc += d.at(static_cast<std::int64_t>(k)).exact;
        CHECK(acc == vals[k]);
    }
}

TEST_CASE("binomial alternating transform") {
    const auto ones = CoefficientSequence::from_rationals(std::vector<Rational>(12, 1));
    const CoefficientSequence h1 = binomial_alternating_transform(ones, 8);
    CHECK(h1.at(0).exact == 1);
    for (int n = 1; n <= 8; ++n) CHECK(h1.at(n).exact == 0);

    std::vector<Rational> lin;
    for (int k = 0; k < 12; ++k) lin.push_back(k);
    const CoefficientSequence h2 =
        binomial_alternating_transform(CoefficientSequence::from_rationals(lin), 8);
    CHECK(h2.at(0).exact == 0);
    CHECK(h2.at(1).exact == 1);
    for (int n = 2; n <= 8; ++n) CHECK(h2.at(n).exact == 0);

    std::vector<Rational> pow2;
    Rational v = 1;
    for (int k = 0; k < 12; ++k, v *= 2) pow2.push_back(v);
    const CoefficientSequence h3 =
        binomial_alternating_transform(CoefficientSequence::from_rationals(pow2), 8);
    for (int n = 0; n <= 8; ++n) CHECK(h3.at(n).exact == 1);
}

TEST_CASE("binomial transform inverts exactly on windows up to 64") {
    std::vector<Rational> vals;
    for (int k = 0; k < 65; ++k)
        vals.push_back(Rational(3 * k * k - 7 * k + 2, k % 5 + 1));
    const auto s = CoefficientSequence::from_rationals(vals);
    const CoefficientSequence h = binomial_alternating_transform(s, 64);
    const CoefficientSequence back = binomial_inverse_transform(h, 64);
    for (int n = 0; n <= 64; ++n) CHECK(back.at(n).exact == vals[static_cast<std::size_t>(n)]);
}

TEST_CASE("evaluate_disk with certified tails") {
    AESWParams geom;
    geom.betas = {Rational(1, 2)};
    // prefix long enough for the ratio certificate
    const CoefficientSequence g = family_aesw(geom, 512);
    const DiskValue v = evaluate_disk(g, 0.5, 1e-10);
    CHECK(v.value == doctest::Approx(4.0 / 3.0).epsilon(1e-9));

    AESWParams expo;
    expo.gamma = 1;
    const CoefficientSequence e = family_aesw(expo, 512);
    CHECK(evaluate_disk(e, 0.5, 1e-10).value ==
          doctest::Approx(std::exp(0.5)).epsilon(1e-9));

    CHECK_THROWS_AS(evaluate_disk(g, 1.5, 1e-10), EvalError);
}

TEST_CASE("evaluate_continued at trivial rational functions") {
    // h(z) = 1/(1-z): h_n = delta_{n,0}
    const auto h = CoefficientSequence::from_rationals({1});
    const auto at = [&](double re, double im = 0.0) {
        return evaluate_continued(h, {re, im}, 1e-12);
    };
    CHECK(at(-1.0).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(at(2.0).real() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(at(2.0).imag() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(evaluate_continued(h, {1.0, 0.0}, 1e-12), EvalError);
}

TEST_CASE("continuation agrees with the disk sum on the overlap") {
    // a_k = k+1, i.e. 1/(1-z)^2; h_n = binomial transform, finite check range
    std::vector<Rational> a;
    for (int k = 0; k <= 40; ++k) a.push_back(k + 1);
    const CoefficientSequence h =
        binomial_alternating_transform(CoefficientSequence::from_rationals(a), 40);
    // degree-1 polynomial in k: h_n = 0 for n >= 2
    for (int n = 2; n <= 40; ++n) CHECK(h.at(n).exact == 0);
    for (double y : {0.1, 0.25, 0.4, 0.45}) {
        const double direct = 1.0 / ((1.0 - y) * (1.0 - y));
        CHECK(evaluate_continued(h, {y, 0.0}, 1e-12).real() ==
              doctest::Approx(direct).epsilon(1e-8));
    }
}

TEST_CASE("maximal term and central index") {
    const auto ones = CoefficientSequence::from_rationals(std::vector<Rational>(64, 1));
    const MaximalTerm m1 = maximal_term(ones, 0.5);
    CHECK(m1.k == 0);
    CHECK(m1.log_mu == doctest::Approx(0.0));

    // log a_k = 2 sqrt(k), y = e^{-1/10}: score 2 sqrt(k) - k/10 peaks at k = 100
    const auto s = CoefficientSequence::from_log_fn(
        [](std::int64_t k) { return 2.0 * std::sqrt(static_cast<double>(k)); });
    const MaximalTerm m2 = maximal_term(s, std::exp(-0.1));
    CHECK(m2.k == 100);
    CHECK(m2.log_mu == doctest::Approx(10.0).epsilon(1e-12));

    AESWParams expo;
    expo.gamma = 1;
    const MaximalTerm m3 = maximal_term(family_aesw(expo, 512), 0.5);
    CHECK(m3.k == 0);
    CHECK(m3.log_mu == doctest::Approx(0.0));
}

TEST_CASE("maximal term inequality (y,s) spot checks") {
    AESWParams geom;
    geom.betas = {Rational(1, 2)};
    CHECK(check_ineqe(family_aesw(geom, 512), 0.5, 0.5));

    const auto ones = CoefficientSequence::from_rationals(std::vector<Rational>(4096, 1));
    CHECK(check_ineqe(ones, 0.9, 0.5));

    const auto s = CoefficientSequence::from_log_fn(
        [](std::int64_t k) { return 2.0 * std::sqrt(static_cast<double>(k)); });
    CHECK(check_ineqe(s, 0.99, 0.5));
}

TEST_CASE("log value reconstruction is consistent") {
    const auto s = CoefficientSequence::from_log_fn(
        [](std::int64_t k) { return 0.25 * static_cast<double>(k); },
        [](std::int64_t k) { return k % 2 == 0 ? 1 : -1; });
    for (int k = 0; k < 20; ++k) {
        const CoeffValue v = s.at(k);
        CHECK(v.log_abs_value() == doctest::Approx(0.25 * k));
        CHECK(v.sign() == (k % 2 == 0 ? 1 : -1));
        CHECK(std::log(std::abs(v.to_double())) == doctest::Approx(0.25 * k).epsilon(1e-15));
    }
    // exact generators reproduce bit-identically
    const auto g = family_qproduct(Rational(1, 3), 5);
    for (int k = 0; k <= 5; ++k) CHECK(g.at(k).exact == g.at(k).exact);
}
