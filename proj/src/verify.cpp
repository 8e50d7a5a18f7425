#include "polyafreq/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace polyafreq {

Integer det_bareiss(IntegerMatrix m) {
    const auto n = m.rows();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            Eigen::Index p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.row(k).swap(m.row(p));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j) {
                Integer t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = t / prev;  // exact division, Bareiss identity
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

Rational det_exact(const RationalMatrix& m) {
    const auto n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix im(n, n);
    Integer denom_prod = 1;
    for (Eigen::Index i = 0; i < n; ++i) {
        Integer row_lcm = 1;
        for (Eigen::Index j = 0; j < n; ++j) {
            const Integer d = denominator(m(i, j));
            row_lcm = lcm(row_lcm, d);
        }
        for (Eigen::Index j = 0; j < n; ++j) {
            const Rational scaled = m(i, j) * Rational(row_lcm);
            im(i, j) = numerator(scaled);
        }
        denom_prod *= row_lcm;
    }
    return Rational(det_bareiss(std::move(im)), denom_prod);
}

Rational det_cofactor(const RationalMatrix& m) {
    const auto n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Rational acc = 0;
    RationalMatrix sub(n - 1, n - 1);
    for (Eigen::Index c = 0; c < n; ++c) {
        if (m(0, c) == 0) continue;
        for (Eigen::Index i = 1; i < n; ++i) {
            Eigen::Index jj = 0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == c) continue;
                sub(i - 1, jj++) = m(i, j);
            }
        }
        const Rational term = m(0, c) * det_cofactor(sub);
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

Interval det_interval(const IntervalMatrix& m) {
    const auto n = m.rows();
    if (n == 0) return Interval(1.0);
    if (n == 1) return m(0, 0);
    Interval acc(0.0);
    IntervalMatrix sub(n - 1, n - 1);
    for (Eigen::Index c = 0; c < n; ++c) {
        if (m(0, c).is_point_zero()) continue;
        for (Eigen::Index i = 1; i < n; ++i) {
            Eigen::Index jj = 0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == c) continue;
                sub(i - 1, jj++) = m(i, j);
            }
        }
        const Interval term = m(0, c) * det_interval(sub);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

ToeplitzWindow build_window(const CoefficientSequence& s, int N) {
    if (N < 1) throw std::invalid_argument("window size must be >= 1");
    ToeplitzWindow w;
    w.N = N;
    w.is_exact = s.kind() == CoeffValue::Kind::Exact;
    if (w.is_exact) {
        w.exact = RationalMatrix::Zero(N, N);
        for (int j = 0; j < N; ++j) {
            const Rational v = s.exact_at(j);
            for (int i = 0; i + j < N; ++i) w.exact(i, i + j) = v;
        }
    } else {
        w.interval = IntervalMatrix::Constant(N, N, Interval(0.0));
        for (int j = 0; j < N; ++j) {
            const Interval v = Interval::from_log(s.at(j).to_log());
            for (int i = 0; i + j < N; ++i) w.interval(i, i + j) = v;
        }
    }
    return w;
}

namespace {

template <typename Matrix>
Matrix extract_minor(const Matrix& m, const std::vector<int>& rows,
                     const std::vector<int>& cols) {
    Matrix sub(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            sub(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                m(rows[i], cols[j]);
    return sub;
}

std::string interval_str(const Interval& v) {
    std::ostringstream os;
    os.precision(17);
    os << "[" << v.lo << "," << v.hi << "]";
    return os.str();
}

bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
}

std::vector<int> first_combination(int k) {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    return c;
}

}  // namespace

Rational minor_det(const ToeplitzWindow& w, const std::vector<int>& rows,
                   const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor must be square");
    if (!w.is_exact) throw std::invalid_argument("exact minor requested from interval window");
    return det_exact(extract_minor(w.exact, rows, cols));
}

Interval minor_det_interval(const ToeplitzWindow& w, const std::vector<int>& rows,
                            const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor must be square");
    if (w.is_exact) throw std::invalid_argument("interval minor requested from exact window");
    return det_interval(extract_minor(w.interval, rows, cols));
}

Integer exhaustive_minor_count(int N, int r) {
    Integer total = 0;
    for (int k = 1; k <= r; ++k) {
        const Integer c = binomial_int(N, k);
        total += c * c;
    }
    return total;
}

namespace {

struct MinorChecker {
    const ToeplitzWindow& w;
    PFVerdict& verdict;

    // returns false when a counterexample ends the search
    bool check(int order, const std::vector<int>& rows, const std::vector<int>& cols) {
        ++verdict.checked_minor_count;
        if (w.is_exact) {
            const Rational d = minor_det(w, rows, cols);
            if (d < 0) {
                MinorWitness wit;
                wit.order = order;
                wit.rows = rows;
                wit.cols = cols;
                wit.det_exact = d;
                std::ostringstream os;
                os << d;
                wit.det = os.str();
                verdict.witness = std::move(wit);
                verdict.status = PFVerdict::Status::Counterexample;
                return false;
            }
            return true;
        }
        const Interval d = minor_det_interval(w, rows, cols);
        if (d.strictly_negative()) {
            MinorWitness wit;
            wit.order = order;
            wit.rows = rows;
            wit.cols = cols;
            wit.det = interval_str(d);
            verdict.witness = std::move(wit);
            verdict.status = PFVerdict::Status::Counterexample;
            return false;
        }
        if (!d.nonnegative()) {
            MinorWitness wit;
            wit.order = order;
            wit.rows = rows;
            wit.cols = cols;
            wit.det = interval_str(d);
            if (verdict.undecided_minors.size() < 64)
                verdict.undecided_minors.push_back(std::move(wit));
            verdict.status = PFVerdict::Status::Undecided;
        }
        return true;
    }
};

}  // namespace

PFVerdict verify_pf(const CoefficientSequence& s, int r, int N, const VerifyStrategy& strat) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    if (N < r) throw std::invalid_argument("window must be at least r");
    const ToeplitzWindow w = build_window(s, N);

    PFVerdict verdict;
    verdict.r = r;
    verdict.N = N;
    verdict.seed = strat.seed;
    verdict.strategy =
        strat.kind == VerifyStrategy::Kind::Exhaustive ? "exhaustive" : "contiguous_plus_random";
    MinorChecker checker{w, verdict};

    if (strat.kind == VerifyStrategy::Kind::Exhaustive) {
        if (exhaustive_minor_count(N, r) > 10'000'000)
            throw std::invalid_argument(
                "exhaustive minor count exceeds 1e7; use the contiguous_plus_random strategy");
        for (int k = 1; k <= r; ++k) {
            std::vector<int> rows = first_combination(k);
            do {
                std::vector<int> cols = first_combination(k);
                do {
                    if (!checker.check(k, rows, cols)) return verdict;
                } while (next_combination(cols, N));
            } while (next_combination(rows, N));
        }
        return verdict;
    }

    // all contiguous minors, in lexicographic (order, rows, cols) order
    for (int k = 1; k <= r; ++k)
        for (int i = 0; i + k <= N; ++i)
            for (int j = 0; j + k <= N; ++j) {
                std::vector<int> rows(k), cols(k);
                for (int t = 0; t < k; ++t) {
                    rows[t] = i + t;
                    cols[t] = j + t;
                }
                if (!checker.check(k, rows, cols)) return verdict;
            }
    // seeded random row/column subsets
    std::mt19937_64 rng(strat.seed);
    std::uniform_int_distribution<int> order_dist(1, r);
    for (std::int64_t t = 0; t < strat.samples; ++t) {
        const int k = order_dist(rng);
        std::vector<int> rows(k), cols(k);
        auto sample_subset = [&](std::vector<int>& out) {
            std::vector<int> pool(N);
            for (int i = 0; i < N; ++i) pool[i] = i;
            for (int i = 0; i < k; ++i) {
                std::uniform_int_distribution<int> d(i, N - 1);
                std::swap(pool[i], pool[d(rng)]);
            }
            out.assign(pool.begin(), pool.begin() + k);
            std::sort(out.begin(), out.end());
        };
        sample_subset(rows);
        sample_subset(cols);
        if (!checker.check(k, rows, cols)) return verdict;
    }
    return verdict;
}

GridVerdict karlin_grid_check(const std::function<Rational(const Rational&)>& f,
                              const std::vector<Rational>& x, const std::vector<Rational>& y) {
    if (x.size() != y.size() || x.empty())
        throw std::invalid_argument("grids must be nonempty and of equal length");
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        if (!(x[i] < x[i + 1]) || !(y[i] < y[i + 1]))
            throw std::invalid_argument("grids must be strictly increasing");
    const auto n = static_cast<Eigen::Index>(x.size());
    RationalMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = f(x[static_cast<std::size_t>(j)] - y[static_cast<std::size_t>(i)]);
    GridVerdict v;
    v.det = det_exact(m);
    v.nonnegative = v.det >= 0;
    return v;
}

}  // namespace polyafreq
