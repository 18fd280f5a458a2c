#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace f2norm {

/// Points x of F_2^n and characters gamma of its dual share one representation:
/// an n-bit mask. The character gamma acts on x by (-1)^parity(gamma & x).
using Mask = std::uint32_t;
using PointMask = Mask;
using CharMask = Mask;

inline constexpr int kHardMaxDim = 30;
inline constexpr int kDefaultMaxDim = 16;

/// Number of F_2 coordinates; the group has 2^n elements.
class GroupDim {
public:
    explicit GroupDim(int n);

    int n() const { return n_; }
    std::size_t order() const { return std::size_t{1} << n_; }
    Mask full_mask() const { return static_cast<Mask>(order() - 1); }
    bool contains(Mask m) const { return (m >> n_) == 0; }

    friend bool operator==(GroupDim, GroupDim) = default;

private:
    int n_;
};

/// <gamma, x> over F_2: 0 when gamma(x) = 1, 1 when gamma(x) = -1.
inline int pairing(CharMask gamma, PointMask x) {
    return std::popcount(gamma & x) & 1;
}

/// +1 or -1.
inline int character_value(CharMask gamma, PointMask x) {
    return 1 - 2 * pairing(gamma, x);
}

/// A subspace of the dual group held in reduced row-echelon form: every row's
/// pivot is its lowest set bit, no other row has that bit set, and rows are
/// sorted by pivot. The form is canonical, so equality is list equality.
class DualSubspace {
public:
    DualSubspace() = default;

    /// Span of the given masks.
    static DualSubspace span_of(const std::vector<Mask>& masks);
    /// The whole dual group of F_2^n.
    static DualSubspace full(GroupDim dim);

    int dim() const { return static_cast<int>(rows_.size()); }
    std::size_t order() const { return std::size_t{1} << rows_.size(); }
    const std::vector<Mask>& basis() const { return rows_; }
    /// Bitwise OR of the pivot bits.
    Mask pivot_mask() const;

    /// Reduction of m against the basis; zero iff m lies in the span.
    Mask reduce(Mask m) const;
    bool contains(Mask m) const { return reduce(m) == 0; }

    /// Adds m to the span. Returns true when the dimension grew.
    bool insert(Mask m);

    /// All 2^dim elements, in Gray-code order starting at 0.
    std::vector<Mask> elements() const;

    /// True when this contains every basis row of other.
    bool contains_subspace(const DualSubspace& other) const;

    friend bool operator==(const DualSubspace&, const DualSubspace&) = default;

private:
    std::vector<Mask> rows_;
};

/// span(V u {gamma}).
DualSubspace subspace_insert(const DualSubspace& v, CharMask gamma);

/// Basis of V-perp = {x : gamma(x) = 1 for all gamma in V}; n - dim V vectors.
std::vector<PointMask> annihilator_basis(const DualSubspace& v, GroupDim dim);

/// dim(V)-bit syndrome (gamma_1.x, ..., gamma_d.x) over the reduced basis.
/// Equal indices <=> same V-perp coset.
std::uint32_t coset_index(const DualSubspace& v, PointMask x);

/// Coset indices of every point of the group, in point order.
std::vector<std::uint32_t> coset_indices(const DualSubspace& v, GroupDim dim);

/// True when the masks are linearly independent over GF(2).
bool linearly_independent(const std::vector<Mask>& masks);

}  // namespace f2norm
