#pragma once

#include "f2norm/dyadic.hpp"
#include "f2norm/group.hpp"
#include "f2norm/point_set.hpp"

#include <string_view>
#include <vector>

namespace f2norm {

/// alpha = sum_i 2^-d_i with d_1 < ... < d_k, all positive.
class DyadicDensity {
public:
    explicit DyadicDensity(std::vector<int> exponents);

    const std::vector<int>& exponents() const { return exponents_; }
    int terms() const { return static_cast<int>(exponents_.size()); }
    DyadicScalar value() const;

    friend bool operator==(const DyadicDensity&, const DyadicDensity&) = default;

private:
    std::vector<int> exponents_;
};

/// Witness for a disjoint union of cosets A_i = x_1 + ... + x_{i-1} + Lambda_i-perp.
struct CosetUnionWitness {
    std::vector<DualSubspace> lambdas;  // nested, dim Lambda_i = d_i
    std::vector<CharMask> gammas;       // gamma_i in Lambda_i \ Lambda_{i-1}
    std::vector<PointMask> offsets;     // x_1 .. x_{k-1}
    std::vector<PointSet> parts;        // A_1 .. A_k
};

struct CosetUnion {
    PointSet set;
    CosetUnionWitness witness;
};

/// Canonical instance: Lambda_i spans the first d_i standard characters,
/// gamma_i = e_{d_i}, x_i has only bit d_i - 1 set. Throws ExponentOverflow when d_k > n.
CosetUnion build_coset_union(const DyadicDensity& density, GroupDim dim);

/// floor(alpha|V|) full V-perp cosets plus {alpha|V|}|V-perp| points of one further
/// coset. Cosets are taken in coset-index order and the partial coset is filled
/// with its smallest points. Throws ResolutionError when alpha 2^n is not integral.
PointSet build_equality_case(const DyadicScalar& alpha, const DualSubspace& v, GroupDim dim);

enum class DensityFamily { geometric4, double_exp };

DensityFamily parse_density_family(std::string_view name);
std::string_view to_string(DensityFamily family);

/// geometric4: [2, 4, ..., 2k]; double_exp: [1, 2, 4, ..., 2^(k-1)].
DyadicDensity density_family(DensityFamily family, int k);

struct DensityProfileRow {
    int d;
    DyadicScalar frac;     // {alpha 2^d}
    DyadicScalar product;  // {alpha 2^d}(1 - {alpha 2^d})
};

std::vector<DensityProfileRow> density_profile(const DyadicScalar& alpha, int max_dim);

}  // namespace f2norm
