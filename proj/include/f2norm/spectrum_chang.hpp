#pragma once

#include "f2norm/fourier.hpp"
#include "f2norm/group.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace f2norm {

/// Gamma_s = {gamma : 2^-s B >= |fhat_V(gamma)| > 2^-(s+1) B} for B = ||f_V||_1,
/// together with L_s = sum over Gamma_s of |chihat_A|.
struct LevelSet {
    int s = 0;
    std::vector<CharMask> members;
    DyadicScalar mass;
};

/// Partitions the support of fv_hat into dyadic bands relative to base.
/// Sets are returned in increasing s; empty bands are omitted.
/// Throws ZeroMass if base is not positive.
std::vector<LevelSet> level_sets(const Spectrum& fv_hat, const Spectrum& chi_hat, const DyadicScalar& base);

enum class LevelStrategy {
    smallest_s,  // first s with L_s >= (1/6)(4/3)^s
    best_ratio,  // among qualifying s, maximize L_s / (dimension increase); ties to smaller s
};

LevelStrategy parse_level_strategy(std::string_view name);
std::string_view to_string(LevelStrategy strategy);

/// Picks a level with L_s >= (1/6)(4/3)^s. Such a level always exists for a
/// valid partition, so NoQualifyingLevel signals an arithmetic bug.
/// current is the subspace the level would extend (only used by best_ratio).
const LevelSet& select_level(std::span<const LevelSet> levels, LevelStrategy strategy = LevelStrategy::smallest_s,
                             const DualSubspace& current = {});

/// e eps^-2 max{ln(||f||_2^2 / ||f||_1^2), 1}.
double chang_cardinality_bound(const FunctionTable& f, double eps);

/// The same bound with the logarithm read as ln(||f||_2^-2 ||f||_1^-2); kept
/// only so certificates can record both readings.
double chang_cardinality_bound_as_stated(const FunctionTable& f, double eps);

struct ChangSpan {
    DualSubspace span;
    std::vector<CharMask> large_spectrum;  // {gamma : |spec(gamma)| >= threshold}
    double eps = 0.0;                      // threshold / ||f||_1
    double bound_dim = 0.0;
    double bound_dim_as_stated = 0.0;
};

/// GF(2)-span of the large spectrum of f. The dimension ceiling is reported,
/// not used to build the span.
ChangSpan chang_span(const Spectrum& spec, const DyadicScalar& threshold);

struct RieszProduct {
    FunctionTable table;
    std::vector<CharMask> lambda;
    DyadicScalar eta;
};

/// prod_{lambda} (1 + eta lambda), exact. Throws DependentSet if lambda is
/// linearly dependent, InputError if |eta| > 1.
RieszProduct riesz_product(GroupDim dim, const std::vector<CharMask>& lambda, const DyadicScalar& eta);

struct BecknerSides {
    double lhs;  // ||f * p_eta||_2
    double rhs;  // ||f||_{1 + eta^2}
};

/// Evaluates both sides of ||f * p_eta||_2 <= ||f||_{1+eta^2}.
BecknerSides beckner_verify(const FunctionTable& f, const std::vector<CharMask>& lambda, double eta);

}  // namespace f2norm
