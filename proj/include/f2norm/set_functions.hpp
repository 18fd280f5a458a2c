#pragma once

#include "f2norm/fourier.hpp"
#include "f2norm/point_set.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>

namespace f2norm {

FunctionTable indicator(const PointSet& a);

/// x -> |A n (x + V-perp)| / |V-perp|, computed by counting points per coset.
FunctionTable coset_average(const PointSet& a, const DualSubspace& v);

/// f_V = chi_A - chi_A * mu_{V-perp}, built in physical space.
///
/// Values lie in [-1, 1], are >= 0 on A and <= 0 off A, have mean zero, and the
/// spectrum vanishes on V. With V = {0} this is the balanced function chi_A - alpha.
struct ResidualTable {
    FunctionTable table;
    DualSubspace subspace;
    PointSet set;
};

ResidualTable residual(const PointSet& a, const DualSubspace& v);

/// ||f_V||_1, cross-checked against 2<chi_A, f_V>; throws InvariantViolation
/// if the two routes disagree.
DyadicScalar residual_l1(const ResidualTable& fv);

/// 2 order^-1 {alpha order}(1 - {alpha order}); order must be a power of two.
DyadicScalar physical_lower_bound(const DyadicScalar& alpha, std::uint64_t order);

using Rational = boost::multiprecision::cpp_rational;

struct QuadraticGap {
    Rational lhs;  // sum (delta_i - delta_i^2)
    Rational rhs;  // g (1 - g), g = frac(sum delta_i)
};

/// Both sides of sum(delta_i - delta_i^2) >= {sum delta_i}(1 - {sum delta_i}).
/// Each delta must lie in [0, 1].
QuadraticGap frac_quadratic_gap(std::span<const Rational> deltas);

}  // namespace f2norm
