#include "f2norm/fourier.hpp"

#include "f2norm/errors.hpp"

#include <algorithm>
#include <cmath>

namespace f2norm {

template <class Side>
DyadicTable<Side>::DyadicTable(GroupDim dim, std::vector<Wide> numerators, int exponent)
    : dim_(dim), nums_(std::move(numerators)), exp_(exponent) {
    if (nums_.size() != dim.order()) throw InputError("table length must be exactly 2^n");
    if (exp_ < 0) {
        for (auto& v : nums_) v = wide::shl(v, -exp_);
        exp_ = 0;
    }
}

template <class Side>
DyadicTable<Side> DyadicTable<Side>::from_values(GroupDim dim, std::span<const DyadicScalar> values) {
    if (values.size() != dim.order()) throw InputError("table length must be exactly 2^n");
    int e = 0;
    for (const auto& v : values) e = std::max(e, v.exponent());
    std::vector<Wide> nums(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        nums[i] = wide::shl(values[i].numerator(), e - values[i].exponent());
    return DyadicTable(dim, std::move(nums), e);
}

template <class Side>
DyadicTable<Side> DyadicTable<Side>::constant(GroupDim dim, const DyadicScalar& value) {
    return DyadicTable(dim, std::vector<Wide>(dim.order(), value.numerator()), value.exponent());
}

template <class Side>
void DyadicTable<Side>::raise_exponent(int new_exp) {
    if (new_exp <= exp_) return;
    for (auto& v : nums_) v = wide::shl(v, new_exp - exp_);
    exp_ = new_exp;
}

template <class Side>
void DyadicTable<Side>::set(std::size_t i, const DyadicScalar& value) {
    raise_exponent(value.exponent());
    nums_.at(i) = wide::shl(value.numerator(), exp_ - value.exponent());
}

template <class Side>
void DyadicTable<Side>::normalize() {
    int shift = exp_;
    for (Wide v : nums_) {
        if (shift == 0) break;
        if (v != 0) shift = std::min(shift, wide::trailing_zeros(v));
    }
    if (shift == 0) return;
    for (auto& v : nums_) v >>= shift;
    exp_ -= shift;
}

namespace {

template <class Side>
DyadicTable<Side> combine(const DyadicTable<Side>& a, const DyadicTable<Side>& b, bool subtract) {
    if (a.dim() != b.dim()) throw InputError("table dimensions differ");
    int e = std::max(a.exponent(), b.exponent());
    std::vector<Wide> nums(a.size());
    auto an = a.numerators();
    auto bn = b.numerators();
    for (std::size_t i = 0; i < nums.size(); ++i) {
        Wide x = wide::shl(an[i], e - a.exponent());
        Wide y = wide::shl(bn[i], e - b.exponent());
        nums[i] = subtract ? wide::sub(x, y) : wide::add(x, y);
    }
    DyadicTable<Side> out(a.dim(), std::move(nums), e);
    out.normalize();
    return out;
}

// In-place unnormalized Walsh-Hadamard butterflies on the numerators.
void butterfly(std::vector<Wide>& v) {
    for (std::size_t h = 1; h < v.size(); h <<= 1) {
        for (std::size_t i = 0; i < v.size(); i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                Wide x = v[j], y = v[j + h], s, d;
                if (__builtin_add_overflow(x, y, &s) || __builtin_sub_overflow(x, y, &d))
                    throw ArithmeticOverflow("128-bit overflow in Walsh-Hadamard transform");
                v[j] = s;
                v[j + h] = d;
            }
        }
    }
}

}  // namespace

template <class Side>
DyadicTable<Side> operator+(const DyadicTable<Side>& a, const DyadicTable<Side>& b) {
    return combine(a, b, false);
}

template <class Side>
DyadicTable<Side> operator-(const DyadicTable<Side>& a, const DyadicTable<Side>& b) {
    return combine(a, b, true);
}

template <class Side>
DyadicTable<Side> operator*(const DyadicTable<Side>& a, const DyadicTable<Side>& b) {
    if (a.dim() != b.dim()) throw InputError("table dimensions differ");
    std::vector<Wide> nums(a.size());
    auto an = a.numerators();
    auto bn = b.numerators();
    for (std::size_t i = 0; i < nums.size(); ++i) nums[i] = wide::mul(an[i], bn[i]);
    DyadicTable<Side> out(a.dim(), std::move(nums), a.exponent() + b.exponent());
    out.normalize();
    return out;
}

template class DyadicTable<PhysicalSide>;
template class DyadicTable<FrequencySide>;
template FunctionTable operator+(const FunctionTable&, const FunctionTable&);
template FunctionTable operator-(const FunctionTable&, const FunctionTable&);
template FunctionTable operator*(const FunctionTable&, const FunctionTable&);
template Spectrum operator+(const Spectrum&, const Spectrum&);
template Spectrum operator-(const Spectrum&, const Spectrum&);
template Spectrum operator*(const Spectrum&, const Spectrum&);

Spectrum fwht(const FunctionTable& f) {
    std::vector<Wide> v(f.numerators().begin(), f.numerators().end());
    butterfly(v);
    Spectrum out(f.dim(), std::move(v), f.exponent() + f.dim().n());
    out.normalize();
    return out;
}

FunctionTable inverse_fwht(const Spectrum& s) {
    std::vector<Wide> v(s.numerators().begin(), s.numerators().end());
    butterfly(v);
    FunctionTable out(s.dim(), std::move(v), s.exponent());
    out.normalize();
    return out;
}

namespace {

template <class Span, class Fn>
Wide checked_sum(Span nums, Fn term) {
    Wide acc = 0;
    for (Wide v : nums) acc = wide::add(acc, term(v));
    return acc;
}

}  // namespace

DyadicScalar a_norm(const Spectrum& s) {
    return DyadicScalar::from_parts(checked_sum(s.numerators(), [](Wide v) { return wide::abs(v); }), s.exponent());
}

DyadicScalar l1_norm(const FunctionTable& f) {
    Wide total = checked_sum(f.numerators(), [](Wide v) { return wide::abs(v); });
    return DyadicScalar::from_parts(total, f.exponent() + f.dim().n());
}

DyadicScalar l2_norm_squared(const FunctionTable& f) {
    Wide total = checked_sum(f.numerators(), [](Wide v) { return wide::mul(v, v); });
    return DyadicScalar::from_parts(total, 2 * f.exponent() + f.dim().n());
}

DyadicScalar mean(const FunctionTable& f) {
    return DyadicScalar::from_parts(checked_sum(f.numerators(), [](Wide v) { return v; }),
                                    f.exponent() + f.dim().n());
}

DyadicScalar inner_product(const FunctionTable& f, const FunctionTable& g) {
    if (f.dim() != g.dim()) throw InputError("table dimensions differ");
    auto fn = f.numerators();
    auto gn = g.numerators();
    Wide total = 0;
    for (std::size_t i = 0; i < fn.size(); ++i) total = wide::add(total, wide::mul(fn[i], gn[i]));
    return DyadicScalar::from_parts(total, f.exponent() + g.exponent() + f.dim().n());
}

DyadicScalar l2_norm_squared(const Spectrum& s) {
    Wide total = checked_sum(s.numerators(), [](Wide v) { return wide::mul(v, v); });
    return DyadicScalar::from_parts(total, 2 * s.exponent());
}

DyadicScalar sup_norm(const Spectrum& s) {
    Wide best = 0;
    for (Wide v : s.numerators()) best = std::max(best, wide::abs(v));
    return DyadicScalar::from_parts(best, s.exponent());
}

double lp_norm(const FunctionTable& f, double p) {
    if (!(p >= 1.0)) throw InputError("lp_norm requires p >= 1");
    double total = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) total += std::pow(std::fabs(f[i].to_double()), p);
    return std::pow(std::ldexp(total, -f.dim().n()), 1.0 / p);
}

}  // namespace f2norm
