#pragma once

#include "f2norm/dyadic.hpp"
#include "f2norm/group.hpp"

#include <span>
#include <vector>

namespace f2norm {

struct PhysicalSide {};
struct FrequencySide {};

/// 2^n dyadic values stored as integer numerators over one shared exponent,
/// so the butterfly transform runs directly on the numerators.
///
/// Tag distinguishes functions on the group (indexed by points) from their
/// spectra (indexed by characters).
template <class Side>
class DyadicTable {
public:
    explicit DyadicTable(GroupDim dim) : dim_(dim), nums_(dim.order(), 0) {}
    DyadicTable(GroupDim dim, std::vector<Wide> numerators, int exponent);
    static DyadicTable from_values(GroupDim dim, std::span<const DyadicScalar> values);
    static DyadicTable constant(GroupDim dim, const DyadicScalar& value);

    GroupDim dim() const { return dim_; }
    std::size_t size() const { return nums_.size(); }

    DyadicScalar operator[](std::size_t i) const { return DyadicScalar::from_parts(nums_[i], exp_); }
    void set(std::size_t i, const DyadicScalar& value);

    std::span<const Wide> numerators() const { return nums_; }
    int exponent() const { return exp_; }

    /// Lowers the shared exponent as far as every numerator allows.
    void normalize();

    /// Value-wise equality (independent of the shared exponent chosen).
    friend bool operator==(const DyadicTable& a, const DyadicTable& b) {
        if (a.dim_ != b.dim_) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return false;
        return true;
    }

private:
    void raise_exponent(int new_exp);

    GroupDim dim_;
    std::vector<Wide> nums_;
    int exp_ = 0;
};

template <class Side>
DyadicTable<Side> operator+(const DyadicTable<Side>& a, const DyadicTable<Side>& b);
template <class Side>
DyadicTable<Side> operator-(const DyadicTable<Side>& a, const DyadicTable<Side>& b);
/// Pointwise product.
template <class Side>
DyadicTable<Side> operator*(const DyadicTable<Side>& a, const DyadicTable<Side>& b);

using FunctionTable = DyadicTable<PhysicalSide>;
using Spectrum = DyadicTable<FrequencySide>;

/// fhat(gamma) = 2^-n sum_x f(x) (-1)^<gamma,x>, exact.
Spectrum fwht(const FunctionTable& f);
/// f(x) = sum_gamma fhat(gamma) (-1)^<gamma,x>; recovers f bit-exactly.
FunctionTable inverse_fwht(const Spectrum& s);

/// sum_gamma |s(gamma)|.
DyadicScalar a_norm(const Spectrum& s);

/// Norms and inner products against the normalized counting measure.
DyadicScalar l1_norm(const FunctionTable& f);
DyadicScalar l2_norm_squared(const FunctionTable& f);
DyadicScalar mean(const FunctionTable& f);
DyadicScalar inner_product(const FunctionTable& f, const FunctionTable& g);

/// sum_gamma s(gamma)^2 (Parseval side).
DyadicScalar l2_norm_squared(const Spectrum& s);
DyadicScalar sup_norm(const Spectrum& s);

/// (2^-n sum_x |f(x)|^p)^(1/p) in floating point; p >= 1.
double lp_norm(const FunctionTable& f, double p);

extern template class DyadicTable<PhysicalSide>;
extern template class DyadicTable<FrequencySide>;

}  // namespace f2norm
