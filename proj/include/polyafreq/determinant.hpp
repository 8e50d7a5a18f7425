#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "polyafreq/interval.hpp"
#include "polyafreq/numeric.hpp"

namespace polyafreq {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using IntegerMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IntervalMatrix = Eigen::Matrix<Interval, Eigen::Dynamic, Eigen::Dynamic>;

/// Fraction-free Bareiss determinant of an integer matrix.
Integer det_bareiss(IntegerMatrix m);

/// Exact determinant of a rational matrix: rows are cleared to integers,
/// the integer Bareiss result is divided back out.
Rational det_exact(const RationalMatrix& m);

/// Cofactor-expansion determinant; the independent oracle for tests.
Rational det_cofactor(const RationalMatrix& m);

/// Interval determinant by cofactor expansion with outward rounding.
Interval det_interval(const IntervalMatrix& m);

}  // namespace polyafreq

namespace Eigen {
template <>
struct NumTraits<polyafreq::Interval> {
    using Real = polyafreq::Interval;
    using NonInteger = polyafreq::Interval;
    using Nested = polyafreq::Interval;
    using Literal = double;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4
    };
    static int digits10() { return 15; }
};
}  // namespace Eigen
