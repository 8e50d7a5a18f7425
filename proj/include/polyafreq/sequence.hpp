#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyafreq/numeric.hpp"

namespace polyafreq {

inline constexpr int kPFInfinity = 1 << 20;

/// One Taylor coefficient. Exact rationals are preferred; values whose
/// magnitude can leave double range travel as (sign, log|a_k|).
struct CoeffValue {
    enum class Kind { Exact, Float, Log };

    Kind kind = Kind::Exact;
    Rational exact = 0;
    double flt = 0.0;
    LogReal lg;

    static CoeffValue from_rational(Rational r) {
        CoeffValue v;
        v.kind = Kind::Exact;
        v.exact = std::move(r);
        return v;
    }
    static CoeffValue from_float(double d) {
        CoeffValue v;
        v.kind = Kind::Float;
        v.flt = d;
        return v;
    }
    static CoeffValue from_log(LogReal l) {
        CoeffValue v;
        v.kind = Kind::Log;
        v.lg = l;
        return v;
    }

    int sign() const {
        switch (kind) {
            case Kind::Exact: return sign_of(exact);
            case Kind::Float: return flt == 0.0 ? 0 : (flt < 0.0 ? -1 : 1);
            case Kind::Log: return lg.sign;
        }
        return 0;
    }
    double log_abs_value() const {
        switch (kind) {
            case Kind::Exact: return log_abs(exact);
            case Kind::Float:
                return flt == 0.0 ? -std::numeric_limits<double>::infinity()
                                  : std::log(std::abs(flt));
            case Kind::Log: return lg.log_abs;
        }
        return -std::numeric_limits<double>::infinity();
    }
    double to_double() const {
        switch (kind) {
            case Kind::Exact: return to_double_lossy(exact);
            case Kind::Float: return flt;
            case Kind::Log: return lg.to_double();
        }
        return 0.0;
    }
    LogReal to_log() const {
        switch (kind) {
            case Kind::Exact: return LogReal::from_rational(exact);
            case Kind::Float: return LogReal::from_double(flt);
            case Kind::Log: return lg;
        }
        return LogReal::zero();
    }
};

/// Lazily generated coefficient stream a_0, a_1, ... with a uniform value
/// kind, an optional PF-order claim and an optional finite support bound.
class CoefficientSequence {
  public:
    CoefficientSequence() = default;
    CoefficientSequence(CoeffValue::Kind kind, std::function<CoeffValue(std::int64_t)> gen,
                        std::optional<int> claimed_class = std::nullopt,
                        std::optional<std::int64_t> length_hint = std::nullopt)
        : kind_(kind),
          gen_(std::move(gen)),
          claimed_class_(claimed_class),
          length_hint_(length_hint) {}

    static CoefficientSequence from_rationals(std::vector<Rational> values,
                                              std::optional<int> claimed_class = std::nullopt);
    /// A computed prefix of an infinite sequence: no support bound is
    /// claimed, and indices past the prefix throw out_of_range.
    static CoefficientSequence from_rational_prefix(std::vector<Rational> values,
                                                    std::optional<int> claimed_class = std::nullopt);
    static CoefficientSequence from_log_fn(std::function<double(std::int64_t)> log_abs_fn,
                                           std::function<int(std::int64_t)> sign_fn = nullptr);

    CoeffValue at(std::int64_t k) const {
        if (k < 0) throw std::invalid_argument("coefficient index must be nonnegative");
        if (length_hint_ && k >= *length_hint_) {
            CoeffValue z;
            z.kind = kind_;
            return z;
        }
        return gen_(k);
    }
    Rational exact_at(std::int64_t k) const {
        CoeffValue v = at(k);
        if (v.kind != CoeffValue::Kind::Exact)
            throw std::logic_error("exact value requested from non-exact sequence");
        return v.exact;
    }

    CoeffValue::Kind kind() const { return kind_; }
    std::optional<int> claimed_class() const { return claimed_class_; }
    std::optional<std::int64_t> length_hint() const { return length_hint_; }
    const std::string& provenance() const { return provenance_; }
    void set_provenance(std::string p) { provenance_ = std::move(p); }
    void set_claimed_class(std::optional<int> c) { claimed_class_ = c; }

  private:
    CoeffValue::Kind kind_ = CoeffValue::Kind::Exact;
    std::function<CoeffValue(std::int64_t)> gen_ = [](std::int64_t) { return CoeffValue{}; };
    std::optional<int> claimed_class_;
    std::optional<std::int64_t> length_hint_;
    std::string provenance_;
};

struct AESWParams {
    Rational gamma = 0;
    std::vector<Rational> alphas;
    std::vector<Rational> betas;
};

/// First N Taylor coefficients of e^{gamma z} prod(1+alpha_j z)/prod(1-beta_j z).
CoefficientSequence family_aesw(const AESWParams& p, std::int64_t N);

/// Exact expansion of prod_{j=1..J}(1 + q^j z).
CoefficientSequence family_qproduct(const Rational& q, int J);

/// b_0 = a_0, b_k = a_k - a_{k-1}; coefficients of (1-z) times the g.f.
CoefficientSequence dh_transform(const CoefficientSequence& s);

/// h_n = sum_k (-1)^{n-k} C(n,k) a_k, n = 0..N. Exact when the input is.
CoefficientSequence binomial_alternating_transform(const CoefficientSequence& s,
                                                   std::int64_t N);

/// Inverse relation a_n = sum_k C(n,k) h_k (exact input required).
CoefficientSequence binomial_inverse_transform(const CoefficientSequence& h,
                                               std::int64_t N);

/// Evaluates the first N values once into a (sign, log) table; indices at or
/// beyond N fall through to the original generator.
CoefficientSequence materialize_log(const CoefficientSequence& s, std::int64_t N);

}  // namespace polyafreq
