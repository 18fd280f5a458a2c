#include "f2norm/group.hpp"

#include "f2norm/errors.hpp"

#include <algorithm>
#include <string>

namespace f2norm {

GroupDim::GroupDim(int n) : n_(n) {
    if (n < 1 || n > kHardMaxDim)
        throw InputError("group dimension must lie in [1, " + std::to_string(kHardMaxDim) + "], got " +
                         std::to_string(n));
}

DualSubspace DualSubspace::span_of(const std::vector<Mask>& masks) {
    DualSubspace v;
    for (Mask m : masks) v.insert(m);
    return v;
}

DualSubspace DualSubspace::full(GroupDim dim) {
    DualSubspace v;
    for (int i = 0; i < dim.n(); ++i) v.rows_.push_back(Mask{1} << i);
    return v;
}

Mask DualSubspace::pivot_mask() const {
    Mask p = 0;
    for (Mask r : rows_) p |= r & (~r + 1);
    return p;
}

Mask DualSubspace::reduce(Mask m) const {
    for (Mask r : rows_) {
        Mask pivot = r & (~r + 1);
        if (m & pivot) m ^= r;
    }
    return m;
}

bool DualSubspace::insert(Mask m) {
    m = reduce(m);
    if (m == 0) return false;
    Mask pivot = m & (~m + 1);
    // Rows carrying the new pivot bit have a smaller pivot, so XOR keeps theirs.
    for (Mask& r : rows_)
        if (r & pivot) r ^= m;
    auto pos = std::find_if(rows_.begin(), rows_.end(), [&](Mask r) { return (r & (~r + 1)) > pivot; });
    rows_.insert(pos, m);
    return true;
}

std::vector<Mask> DualSubspace::elements() const {
    std::vector<Mask> out(order());
    Mask cur = 0;
    out[0] = 0;
    for (std::size_t i = 1; i < out.size(); ++i) {
        cur ^= rows_[std::countr_zero(i)];
        out[i] = cur;
    }
    return out;
}

bool DualSubspace::contains_subspace(const DualSubspace& other) const {
    return std::all_of(other.rows_.begin(), other.rows_.end(), [&](Mask r) { return contains(r); });
}

DualSubspace subspace_insert(const DualSubspace& v, CharMask gamma) {
    DualSubspace out = v;
    out.insert(gamma);
    return out;
}

std::vector<PointMask> annihilator_basis(const DualSubspace& v, GroupDim dim) {
    if (v.dim() > dim.n()) throw InputError("subspace dimension exceeds n");
    for (Mask r : v.basis())
        if (!dim.contains(r)) throw InputError("subspace does not live in the dual of F_2^n");
    Mask pivots = v.pivot_mask();
    std::vector<PointMask> out;
    out.reserve(static_cast<std::size_t>(dim.n() - v.dim()));
    for (int f = 0; f < dim.n(); ++f) {
        Mask free_bit = Mask{1} << f;
        if (pivots & free_bit) continue;
        PointMask x = free_bit;
        for (Mask r : v.basis())
            if (r & free_bit) x |= r & (~r + 1);
        out.push_back(x);
    }
    return out;
}

std::uint32_t coset_index(const DualSubspace& v, PointMask x) {
    std::uint32_t idx = 0;
    const auto& rows = v.basis();
    for (std::size_t i = 0; i < rows.size(); ++i) idx |= static_cast<std::uint32_t>(pairing(rows[i], x)) << i;
    return idx;
}

std::vector<std::uint32_t> coset_indices(const DualSubspace& v, GroupDim dim) {
    // The syndrome is linear in x, so fill by doubling from the unit vectors.
    std::vector<std::uint32_t> out(dim.order(), 0);
    for (int b = 0; b < dim.n(); ++b) {
        std::size_t half = std::size_t{1} << b;
        std::uint32_t unit = coset_index(v, static_cast<PointMask>(half));
        for (std::size_t x = 0; x < half; ++x) out[half + x] = out[x] ^ unit;
    }
    return out;
}

bool linearly_independent(const std::vector<Mask>& masks) {
    return DualSubspace::span_of(masks).dim() == static_cast<int>(masks.size());
}

}  // namespace f2norm
