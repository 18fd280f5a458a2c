#include "f2norm/spectrum_chang.hpp"

#include "f2norm/errors.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <string>

namespace f2norm {

std::vector<LevelSet> level_sets(const Spectrum& fv_hat, const Spectrum& chi_hat, const DyadicScalar& base) {
    if (base.sign() <= 0) throw ZeroMass("level sets need ||f_V||_1 > 0");
    if (fv_hat.dim() != chi_hat.dim()) throw InputError("spectrum dimensions differ");

    std::map<int, LevelSet> bands;
    for (std::size_t g = 0; g < fv_hat.size(); ++g) {
        DyadicScalar coeff = abs(fv_hat[g]);
        if (coeff.is_zero()) continue;
        if (coeff > base) throw InvariantViolation("|fhat_V| exceeds ||f_V||_1 at character " + std::to_string(g));
        // Largest s with 2^s |fhat| <= B; then 2^-s B >= |fhat| > 2^-(s+1) B.
        int s = 0;
        while (coeff.scaled_pow2(s + 1) <= base) ++s;
        auto& band = bands[s];
        band.s = s;
        band.members.push_back(static_cast<CharMask>(g));
        band.mass += abs(chi_hat[g]);
    }
    std::vector<LevelSet> out;
    out.reserve(bands.size());
    for (auto& [s, band] : bands) out.push_back(std::move(band));
    return out;
}

LevelStrategy parse_level_strategy(std::string_view name) {
    if (name == "smallest-s") return LevelStrategy::smallest_s;
    if (name == "best-ratio") return LevelStrategy::best_ratio;
    throw InputError("unknown strategy '" + std::string(name) + "'");
}

std::string_view to_string(LevelStrategy strategy) {
    return strategy == LevelStrategy::smallest_s ? "smallest-s" : "best-ratio";
}

const LevelSet& select_level(std::span<const LevelSet> levels, LevelStrategy strategy, const DualSubspace& current) {
    const LevelSet* best = nullptr;
    int best_growth = 0;
    for (const auto& level : levels) {
        if (!meets_level_threshold(level.mass, level.s)) continue;
        if (strategy == LevelStrategy::smallest_s) return level;
        DualSubspace grown = current;
        for (CharMask g : level.members) grown.insert(g);
        int growth = grown.dim() - current.dim();
        if (growth <= 0) throw InvariantViolation("level set lies inside the current subspace");
        // mass / growth > best_mass / best_growth
        if (best == nullptr || level.mass * DyadicScalar(best_growth) > best->mass * DyadicScalar(growth)) {
            best = &level;
            best_growth = growth;
        }
    }
    if (best == nullptr) throw NoQualifyingLevel("no level satisfies L_s >= (1/6)(4/3)^s");
    return *best;
}

namespace {

struct NormPair {
    double l1;
    double l2_squared;
};

NormPair norms_of(const FunctionTable& f) {
    DyadicScalar l1 = l1_norm(f);
    if (l1.is_zero()) throw InputError("Chang bound needs f not identically zero");
    return {l1.to_double(), l2_norm_squared(f).to_double()};
}

double bound_from(double eps, double log_term) {
    return std::numbers::e / (eps * eps) * std::max(log_term, 1.0);
}

void check_eps(double eps) {
    if (!(eps > 0.0 && eps <= 1.0)) throw InputError("eps must lie in (0, 1]");
}

}  // namespace

double chang_cardinality_bound(const FunctionTable& f, double eps) {
    check_eps(eps);
    auto n = norms_of(f);
    return bound_from(eps, std::log(n.l2_squared / (n.l1 * n.l1)));
}

double chang_cardinality_bound_as_stated(const FunctionTable& f, double eps) {
    check_eps(eps);
    auto n = norms_of(f);
    return bound_from(eps, std::log(1.0 / (n.l2_squared * n.l1 * n.l1)));
}

ChangSpan chang_span(const Spectrum& spec, const DyadicScalar& threshold) {
    if (threshold.sign() <= 0) throw InputError("threshold must be positive");
    ChangSpan out;
    for (std::size_t g = 0; g < spec.size(); ++g) {
        if (abs(spec[g]) >= threshold) {
            out.large_spectrum.push_back(static_cast<CharMask>(g));
            out.span.insert(static_cast<CharMask>(g));
        }
    }
    FunctionTable f = inverse_fwht(spec);
    DyadicScalar l1 = l1_norm(f);
    if (l1.is_zero()) return out;
    out.eps = threshold.to_double() / l1.to_double();
    // |fhat| <= ||f||_1, so eps > 1 leaves the large spectrum empty.
    if (out.eps <= 1.0) {
        out.bound_dim = chang_cardinality_bound(f, out.eps);
        out.bound_dim_as_stated = chang_cardinality_bound_as_stated(f, out.eps);
    }
    return out;
}

RieszProduct riesz_product(GroupDim dim, const std::vector<CharMask>& lambda, const DyadicScalar& eta) {
    if (abs(eta) > DyadicScalar(1)) throw InputError("eta must lie in [-1, 1]");
    for (CharMask l : lambda)
        if (!dim.contains(l)) throw InputError("character outside the dual of F_2^n");
    if (!linearly_independent(lambda)) throw DependentSet("Riesz product needs a linearly independent set");

    const auto k = lambda.size();
    const DyadicScalar plus = DyadicScalar(1) + eta, minus = DyadicScalar(1) - eta;
    // value(x) = (1+eta)^(k-m) (1-eta)^m, m = #{lambda : lambda(x) = -1}
    std::vector<DyadicScalar> by_m(k + 1);
    for (std::size_t m = 0; m <= k; ++m) {
        DyadicScalar v(1);
        for (std::size_t i = 0; i < k - m; ++i) v *= plus;
        for (std::size_t i = 0; i < m; ++i) v *= minus;
        by_m[m] = v;
    }
    std::vector<DyadicScalar> values(dim.order());
    for (std::size_t x = 0; x < values.size(); ++x) {
        std::size_t m = 0;
        for (CharMask l : lambda) m += static_cast<std::size_t>(pairing(l, static_cast<PointMask>(x)));
        values[x] = by_m[m];
    }
    return {FunctionTable::from_values(dim, values), lambda, eta};
}

BecknerSides beckner_verify(const FunctionTable& f, const std::vector<CharMask>& lambda, double eta) {
    if (!(std::fabs(eta) <= 1.0)) throw InputError("eta must lie in [-1, 1]");
    for (CharMask l : lambda)
        if (!f.dim().contains(l)) throw InputError("character outside the dual of F_2^n");
    if (!linearly_independent(lambda)) throw DependentSet("Riesz product needs a linearly independent set");

    // (f * p_eta)^ is fhat(gamma) eta^|S| on gamma = sum_{S} lambda, zero elsewhere.
    Spectrum fhat = fwht(f);
    double total = 0.0;
    const std::size_t subsets = std::size_t{1} << lambda.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        CharMask gamma = 0;
        for (std::size_t i = 0; i < lambda.size(); ++i)
            if (mask >> i & 1) gamma ^= lambda[i];
        double c = fhat[gamma].to_double() * std::pow(eta, std::popcount(mask));
        total += c * c;
    }
    return {std::sqrt(total), lp_norm(f, 1.0 + eta * eta)};
}

}  // namespace f2norm
