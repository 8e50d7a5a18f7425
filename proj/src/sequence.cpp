#include "polyafreq/sequence.hpp"

#include <algorithm>

namespace polyafreq {

CoefficientSequence CoefficientSequence::from_rationals(std::vector<Rational> values,
                                                        std::optional<int> claimed_class) {
    auto data = std::make_shared<std::vector<Rational>>(std::move(values));
    const auto n = static_cast<std::int64_t>(data->size());
    return CoefficientSequence(
        CoeffValue::Kind::Exact,
        [data](std::int64_t k) {
            if (k >= static_cast<std::int64_t>(data->size()))
                return CoeffValue::from_rational(0);
            return CoeffValue::from_rational((*data)[static_cast<std::size_t>(k)]);
        },
        claimed_class, n);
}

CoefficientSequence CoefficientSequence::from_rational_prefix(
    std::vector<Rational> values, std::optional<int> claimed_class) {
    auto data = std::make_shared<std::vector<Rational>>(std::move(values));
    return CoefficientSequence(
        CoeffValue::Kind::Exact,
        [data](std::int64_t k) {
            if (k >= static_cast<std::int64_t>(data->size()))
                throw std::out_of_range("coefficient index beyond the generated prefix");
            return CoeffValue::from_rational((*data)[static_cast<std::size_t>(k)]);
        },
        claimed_class, std::nullopt);
}

CoefficientSequence CoefficientSequence::from_log_fn(
    std::function<double(std::int64_t)> log_abs_fn, std::function<int(std::int64_t)> sign_fn) {
    return CoefficientSequence(CoeffValue::Kind::Log,
                               [log_abs_fn, sign_fn](std::int64_t k) {
                                   LogReal v{log_abs_fn(k), sign_fn ? sign_fn(k) : 1};
                                   if (v.log_abs == -std::numeric_limits<double>::infinity())
                                       v.sign = 0;
                                   return CoeffValue::from_log(v);
                               });
}

namespace {

// exact prefix of the product of a polynomial and the truncated series parts
std::vector<Rational> aesw_prefix(const AESWParams& p, std::int64_t N) {
    std::vector<Rational> a{1};
    for (const Rational& alpha : p.alphas) {
        std::vector<Rational> next(std::min<std::size_t>(a.size() + 1, static_cast<std::size_t>(N)), 0);
        for (std::size_t i = 0; i < next.size(); ++i) {
            if (i < a.size()) next[i] += a[i];
            if (i >= 1 && i - 1 < a.size()) next[i] += alpha * a[i - 1];
        }
        a = std::move(next);
    }
    a.resize(static_cast<std::size_t>(N), 0);
    for (const Rational& beta : p.betas) {
        // divide by (1 - beta z): prefix sums weighted by beta
        for (std::size_t i = 1; i < a.size(); ++i) a[i] += beta * a[i - 1];
    }
    if (p.gamma != 0) {
        std::vector<Rational> expg(static_cast<std::size_t>(N));
        Integer num = 1, den = 1;
        for (std::int64_t n = 0; n < N; ++n) {
            expg[static_cast<std::size_t>(n)] = Rational(num, den);
            num *= numerator(p.gamma);
            den *= denominator(p.gamma) * (n + 1);
        }
        std::vector<Rational> conv(static_cast<std::size_t>(N), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; i + j < conv.size(); ++j) conv[i + j] += a[i] * expg[j];
        }
        a = std::move(conv);
    }
    return a;
}

}  // namespace

CoefficientSequence family_aesw(const AESWParams& p, std::int64_t N) {
    if (p.gamma < 0) throw std::invalid_argument("gamma must be nonnegative");
    for (const Rational& alpha : p.alphas)
        if (alpha < 0) throw std::invalid_argument("alpha must be nonnegative");
    for (const Rational& beta : p.betas) {
        if (beta < 0) throw std::invalid_argument("beta must be nonnegative");
        if (beta >= 1) throw std::invalid_argument("beta must be < 1");
    }
    if (N <= 0) throw std::invalid_argument("N must be positive");

    CoefficientSequence seq;
    if (p.gamma == 0 && p.betas.empty()) {
        // polynomial: true finite support
        seq = CoefficientSequence::from_rationals(
            aesw_prefix(p, std::min<std::int64_t>(N, static_cast<std::int64_t>(p.alphas.size()) + 1)),
            kPFInfinity);
    } else {
        seq = CoefficientSequence::from_rational_prefix(aesw_prefix(p, N), kPFInfinity);
    }
    seq.set_provenance("aesw");
    return seq;
}

CoefficientSequence family_qproduct(const Rational& q, int J) {
    if (!(q > 0 && q < 1)) throw std::invalid_argument("q must be in (0,1)");
    if (J < 1) throw std::invalid_argument("J must be >= 1");
    std::vector<Rational> a{1};
    Rational qj = 1;
    for (int j = 1; j <= J; ++j) {
        qj *= q;
        a.push_back(0);
        for (std::size_t i = a.size() - 1; i >= 1; --i) a[i] += qj * a[i - 1];
    }
    auto seq = CoefficientSequence::from_rationals(std::move(a), kPFInfinity);
    seq.set_provenance("qproduct");
    return seq;
}

CoefficientSequence dh_transform(const CoefficientSequence& s) {
    std::optional<int> cls;
    if (s.claimed_class()) {
        const int r = *s.claimed_class();
        if (r >= kPFInfinity)
            cls = kPFInfinity;
        else if (r > 1)
            cls = r - 1;
    }
    std::optional<std::int64_t> hint;
    if (s.length_hint()) hint = *s.length_hint() + 1;
    if (s.kind() == CoeffValue::Kind::Exact) {
        return CoefficientSequence(
            CoeffValue::Kind::Exact,
            [s](std::int64_t k) {
                Rational v = s.at(k).exact;
                if (k > 0) v -= s.at(k - 1).exact;
                return CoeffValue::from_rational(v);
            },
            cls, hint);
    }
    return CoefficientSequence(
        CoeffValue::Kind::Log,
        [s](std::int64_t k) {
            LogReal v = s.at(k).to_log();
            if (k > 0) v = log_add(v, log_mul(s.at(k - 1).to_log(), {0.0, -1}));
            return CoeffValue::from_log(v);
        },
        cls, hint);
}

CoefficientSequence binomial_alternating_transform(const CoefficientSequence& s,
                                                   std::int64_t N) {
    if (s.kind() == CoeffValue::Kind::Exact) {
        std::vector<Rational> h(static_cast<std::size_t>(N) + 1, 0);
        const std::int64_t kmax =
            s.length_hint() ? std::min<std::int64_t>(N, *s.length_hint() - 1) : N;
        for (std::int64_t n = 0; n <= N; ++n) {
            Rational sum = 0;
            for (std::int64_t k = 0; k <= std::min(n, kmax); ++k) {
                Rational term = Rational(binomial_int(n, k)) * s.at(k).exact;
                if ((n - k) & 1)
                    sum -= term;
                else
                    sum += term;
            }
            h[static_cast<std::size_t>(n)] = sum;
        }
        auto out = CoefficientSequence::from_rationals(std::move(h));
        out.set_provenance("binomial_alt");
        return out;
    }
    // float/log input: log-domain signed accumulation
    auto vals = std::make_shared<std::vector<LogReal>>();
    vals->reserve(static_cast<std::size_t>(N) + 1);
    for (std::int64_t n = 0; n <= N; ++n) {
        LogReal sum = LogReal::zero();
        for (std::int64_t k = 0; k <= n; ++k) {
            LogReal term = s.at(k).to_log();
            term.log_abs += log_abs(binomial_int(n, k));
            if ((n - k) & 1) term.sign = -term.sign;
            sum = log_add(sum, term);
        }
        vals->push_back(sum);
    }
    return CoefficientSequence(
        CoeffValue::Kind::Log,
        [vals](std::int64_t k) {
            if (k >= static_cast<std::int64_t>(vals->size()))
                return CoeffValue::from_log(LogReal::zero());
            return CoeffValue::from_log((*vals)[static_cast<std::size_t>(k)]);
        },
        std::nullopt, static_cast<std::int64_t>(vals->size()));
}

CoefficientSequence binomial_inverse_transform(const CoefficientSequence& h, std::int64_t N) {
    if (h.kind() != CoeffValue::Kind::Exact)
        throw std::invalid_argument("inverse binomial transform requires exact input");
    std::vector<Rational> a(static_cast<std::size_t>(N) + 1, 0);
    for (std::int64_t n = 0; n <= N; ++n) {
        Rational sum = 0;
        for (std::int64_t k = 0; k <= n; ++k)
            sum += Rational(binomial_int(n, k)) * h.at(k).exact;
        a[static_cast<std::size_t>(n)] = sum;
    }
    return CoefficientSequence::from_rationals(std::move(a));
}

CoefficientSequence materialize_log(const CoefficientSequence& s, std::int64_t N) {
    auto table = std::make_shared<std::vector<LogReal>>();
    table->reserve(static_cast<std::size_t>(N));
    for (std::int64_t k = 0; k < N; ++k) table->push_back(s.at(k).to_log());
    return CoefficientSequence(
        CoeffValue::Kind::Log,
        [table, s](std::int64_t k) {
            if (k < static_cast<std::int64_t>(table->size()))
                return CoeffValue::from_log((*table)[static_cast<std::size_t>(k)]);
            return CoeffValue::from_log(s.at(k).to_log());
        },
        s.claimed_class(), s.length_hint());
}

}  // namespace polyafreq
