#include "f2norm/constructions.hpp"

#include "f2norm/errors.hpp"

#include <string>

namespace f2norm {

DyadicDensity::DyadicDensity(std::vector<int> exponents) : exponents_(std::move(exponents)) {
    if (exponents_.empty()) throw InputError("a dyadic density needs at least one exponent");
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] < 1) throw InputError("density exponents must be positive");
        if (i > 0 && exponents_[i] <= exponents_[i - 1])
            throw InputError("density exponents must be strictly increasing");
    }
}

DyadicScalar DyadicDensity::value() const {
    DyadicScalar total;
    for (int d : exponents_) total += DyadicScalar::from_parts(1, d);
    return total;
}

CosetUnion build_coset_union(const DyadicDensity& density, GroupDim dim) {
    const auto& d = density.exponents();
    if (d.back() > dim.n())
        throw ExponentOverflow("largest exponent " + std::to_string(d.back()) + " exceeds n = " + std::to_string(dim.n()));

    CosetUnionWitness w;
    PointSet a(dim);
    DualSubspace lambda;
    PointMask shift = 0;  // x_1 + ... + x_{i-1}
    for (std::size_t i = 0; i < d.size(); ++i) {
        while (lambda.dim() < d[i]) lambda.insert(CharMask{1} << lambda.dim());
        w.lambdas.push_back(lambda);
        w.gammas.push_back(CharMask{1} << (d[i] - 1));

        // Lambda_i-perp: points with the low d_i bits clear.
        PointSet part(dim);
        for (std::size_t high = 0; high < (dim.order() >> d[i]); ++high) {
            auto x = static_cast<PointMask>((high << d[i]) ^ shift);
            part.insert(x);
            a.insert(x);
        }
        w.parts.push_back(std::move(part));

        if (i + 1 < d.size()) {
            PointMask xi = PointMask{1} << (d[i] - 1);
            w.offsets.push_back(xi);
            shift ^= xi;
        }
    }
    return {std::move(a), std::move(w)};
}

PointSet build_equality_case(const DyadicScalar& alpha, const DualSubspace& v, GroupDim dim) {
    if (alpha < DyadicScalar(0) || alpha > DyadicScalar(1)) throw InputError("density must lie in [0, 1]");
    if (alpha.exponent() > dim.n())
        throw ResolutionError("density " + alpha.to_string() + " is not representable on F_2^" + std::to_string(dim.n()));
    if (v.dim() > dim.n()) throw InputError("subspace dimension exceeds n");

    const DyadicScalar scaled = alpha.scaled_pow2(v.dim());
    const auto full = static_cast<std::uint32_t>(scaled.floor());
    const DyadicScalar partial = scaled.frac().scaled_pow2(dim.n() - v.dim());
    if (!partial.is_integer()) throw ResolutionError("fractional coset does not hold a whole number of points");
    auto extra = static_cast<std::size_t>(partial.numerator());

    auto index = coset_indices(v, dim);
    PointSet a(dim);
    for (std::size_t x = 0; x < dim.order(); ++x) {
        if (index[x] < full) {
            a.insert(static_cast<PointMask>(x));
        } else if (index[x] == full && extra > 0) {
            a.insert(static_cast<PointMask>(x));
            --extra;
        }
    }
    return a;
}

DensityFamily parse_density_family(std::string_view name) {
    if (name == "geometric4") return DensityFamily::geometric4;
    if (name == "double_exp") return DensityFamily::double_exp;
    throw InputError("unknown density family '" + std::string(name) + "'");
}

std::string_view to_string(DensityFamily family) {
    return family == DensityFamily::geometric4 ? "geometric4" : "double_exp";
}

DyadicDensity density_family(DensityFamily family, int k) {
    if (k < 1) throw InputError("family index k must be >= 1");
    std::vector<int> d;
    for (int i = 0; i < k; ++i) {
        if (family == DensityFamily::geometric4) {
            d.push_back(2 * (i + 1));
        } else {
            if (i >= 31) throw ExponentOverflow("double_exp exponent 2^" + std::to_string(i) + " is too large");
            d.push_back(1 << i);
        }
    }
    return DyadicDensity(std::move(d));
}

std::vector<DensityProfileRow> density_profile(const DyadicScalar& alpha, int max_dim) {
    if (alpha < DyadicScalar(0) || alpha > DyadicScalar(1)) throw InputError("density must lie in [0, 1]");
    if (max_dim < 0) throw InputError("max_dim must be non-negative");
    std::vector<DensityProfileRow> rows;
    for (int d = 0; d <= max_dim; ++d) {
        DyadicScalar t = alpha.scaled_pow2(d).frac();
        rows.push_back({d, t, t * (DyadicScalar(1) - t)});
    }
    return rows;
}

}  // namespace f2norm
