#include "f2norm/random_inputs.hpp"

#include "f2norm/errors.hpp"

#include <algorithm>

namespace f2norm {

Rng trial_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(trial),
                      static_cast<std::uint32_t>(trial >> 32)};
    return Rng(seq);
}

PointSet random_point_set(Rng& rng, GroupDim dim) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double p = unit(rng);
    PointSet a(dim);
    for (std::size_t x = 0; x < dim.order(); ++x)
        if (unit(rng) < p) a.insert(static_cast<PointMask>(x));
    return a;
}

DualSubspace random_subspace(Rng& rng, GroupDim dim, int max_dim) {
    std::uniform_int_distribution<int> count(0, std::clamp(max_dim, 0, dim.n()));
    std::uniform_int_distribution<Mask> mask(0, dim.full_mask());
    DualSubspace v;
    for (int i = count(rng); i > 0; --i) v.insert(mask(rng));
    return v;
}

DualSubspace random_subspace(Rng& rng, GroupDim dim) {
    return random_subspace(rng, dim, dim.n());
}

FunctionTable random_dyadic_table(Rng& rng, GroupDim dim, int bits, int max_exp) {
    const std::int64_t limit = std::int64_t{1} << bits;
    std::uniform_int_distribution<std::int64_t> num(-limit, limit);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::vector<DyadicScalar> values(dim.order());
    for (auto& v : values) v = DyadicScalar::from_parts(num(rng), exp(rng));
    return FunctionTable::from_values(dim, values);
}

std::vector<CharMask> random_independent_set(Rng& rng, GroupDim dim, int size) {
    if (size < 0 || size > dim.n()) throw InputError("independent set size must lie in [0, n]");
    std::uniform_int_distribution<Mask> mask(1, dim.full_mask());
    DualSubspace span;
    std::vector<CharMask> out;
    while (static_cast<int>(out.size()) < size) {
        Mask m = mask(rng);
        if (span.insert(m)) out.push_back(m);
    }
    return out;
}

std::vector<Rational> random_deltas(Rng& rng, int m, int max_den) {
    std::uniform_int_distribution<std::int64_t> den(1, max_den);
    std::vector<Rational> out;
    for (int i = 0; i < m; ++i) {
        std::int64_t q = den(rng);
        std::uniform_int_distribution<std::int64_t> num(0, q);
        out.emplace_back(num(rng), q);
    }
    return out;
}

}  // namespace f2norm
