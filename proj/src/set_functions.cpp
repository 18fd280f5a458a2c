#include "f2norm/set_functions.hpp"

#include "f2norm/errors.hpp"

namespace f2norm {

FunctionTable indicator(const PointSet& a) {
    std::vector<Wide> nums(a.dim().order(), 0);
    for (PointMask x : a.members()) nums[x] = 1;
    return FunctionTable(a.dim(), std::move(nums), 0);
}

namespace {

void check_subspace(const DualSubspace& v, GroupDim dim) {
    if (v.dim() > dim.n()) throw InputError("subspace dimension exceeds n");
    for (Mask r : v.basis())
        if (!dim.contains(r)) throw InputError("subspace does not live in the dual of F_2^n");
}

// Per-point coset index and per-coset member count.
struct CosetCounts {
    std::vector<std::uint32_t> index;
    std::vector<Wide> count;
};

CosetCounts count_cosets(const PointSet& a, const DualSubspace& v) {
    check_subspace(v, a.dim());
    CosetCounts c{coset_indices(v, a.dim()), std::vector<Wide>(v.order(), 0)};
    for (PointMask x : a.members()) ++c.count[c.index[x]];
    return c;
}

}  // namespace

FunctionTable coset_average(const PointSet& a, const DualSubspace& v) {
    auto c = count_cosets(a, v);
    std::vector<Wide> nums(a.dim().order());
    for (std::size_t x = 0; x < nums.size(); ++x) nums[x] = c.count[c.index[x]];
    FunctionTable out(a.dim(), std::move(nums), a.dim().n() - v.dim());
    out.normalize();
    return out;
}

ResidualTable residual(const PointSet& a, const DualSubspace& v) {
    auto c = count_cosets(a, v);
    const int shift = a.dim().n() - v.dim();
    const Wide coset_size = static_cast<Wide>(1) << shift;
    std::vector<Wide> nums(a.dim().order());
    for (std::size_t x = 0; x < nums.size(); ++x) {
        Wide in_a = a.contains(static_cast<PointMask>(x)) ? coset_size : 0;
        nums[x] = in_a - c.count[c.index[x]];
    }
    FunctionTable table(a.dim(), std::move(nums), shift);
    table.normalize();
    return {std::move(table), v, a};
}

DyadicScalar residual_l1(const ResidualTable& fv) {
    DyadicScalar direct = l1_norm(fv.table);
    DyadicScalar via_inner = inner_product(indicator(fv.set), fv.table).scaled_pow2(1);
    if (direct != via_inner)
        throw InvariantViolation("||f_V||_1 = " + direct.to_string() + " but 2<chi_A, f_V> = " + via_inner.to_string());
    return direct;
}

DyadicScalar physical_lower_bound(const DyadicScalar& alpha, std::uint64_t order) {
    if (order == 0 || (order & (order - 1)) != 0) throw InputError("order must be a power of two");
    const int log_order = std::countr_zero(order);
    DyadicScalar t = alpha.scaled_pow2(log_order).frac();
    return (t * (DyadicScalar(1) - t)).scaled_pow2(1 - log_order);
}

QuadraticGap frac_quadratic_gap(std::span<const Rational> deltas) {
    Rational lhs = 0, total = 0;
    for (const auto& d : deltas) {
        if (d < 0 || d > 1) throw InputError("each delta must lie in [0, 1]");
        lhs += d - d * d;
        total += d;
    }
    // total >= 0, so integer division is the floor.
    Rational g = total - Rational(boost::multiprecision::numerator(total) / boost::multiprecision::denominator(total));
    return {lhs, g * (1 - g)};
}

}  // namespace f2norm
