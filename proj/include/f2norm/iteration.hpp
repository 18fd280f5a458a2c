#pragma once

#include "f2norm/dyadic.hpp"
#include "f2norm/fourier.hpp"
#include "f2norm/group.hpp"
#include "f2norm/point_set.hpp"
#include "f2norm/spectrum_chang.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace f2norm {

/// One application of the iteration lemma: V -> V' = V + span(Gamma_s).
struct StepResult {
    int s = 0;
    DualSubspace v_new;
    DyadicScalar gain;        // L(V') - L(V)
    DyadicScalar level_mass;  // L_s of the chosen band, <= gain
    DyadicScalar residual_l1;
    int dim_before = 0;
    int dim_after = 0;
    double chang_ceiling = 0.0;           // 4e 4^s max{ln(||f_V||_2^2/||f_V||_1^2), 1}
    double chang_ceiling_as_stated = 0.0; // same with ln(||f_V||_2^-2 ||f_V||_1^-2)
};

/// Sum of |chihat_A(gamma)| over gamma in V.
DyadicScalar captured_mass(const Spectrum& chi_hat, const DualSubspace& v);

/// Throws ZeroResidual when f_V vanishes, InvariantViolation when any of the
/// step guarantees fails.
StepResult iterate_step(const PointSet& a, const DualSubspace& v, LevelStrategy strategy = LevelStrategy::smallest_s);

/// Same, reusing a precomputed transform of chi_A.
StepResult iterate_step(const PointSet& a, const Spectrum& chi_hat, const DualSubspace& v, LevelStrategy strategy);

enum class Termination { order_cap_reached, residual_zero, step_cap };

std::string_view to_string(Termination t);
Termination parse_termination(std::string_view name);

inline constexpr int kDefaultStepCap = 64;

struct IterationTrace {
    std::vector<StepResult> steps;
    std::vector<DyadicScalar> l_sequence;  // L_0 = alpha, L_k = sum over V_k of |chihat_A|
    DyadicScalar final_bound;
    Termination termination = Termination::step_cap;
    DualSubspace final_subspace;

    /// final_bound / sum_l s_l, the empirical growth constant; empty when every s_l = 0.
    std::optional<double> growth_constant() const;
    /// final_bound / sum_l (4/3)^s_l; empty when there are no steps.
    std::optional<double> growth_constant_geometric() const;
    /// final_bound / ln ln M; empty when ln ln M <= 0.
    std::optional<double> loglog_ratio(std::uint64_t max_order) const;
};

/// Runs the iteration from V_0 = {0}. Before each step it stops with
/// residual_zero if f_{V_k} vanishes, then with order_cap_reached if |V_k| > M,
/// then with step_cap after step_cap steps.
IterationTrace run_iteration(const PointSet& a, std::uint64_t max_order,
                             LevelStrategy strategy = LevelStrategy::smallest_s, int step_cap = kDefaultStepCap);

struct HypothesisRow {
    int d;
    DyadicScalar product;         // {alpha 2^d}(1 - {alpha 2^d})
    DyadicScalar scaled_product;  // 2^d * product
};

struct HypothesisReport {
    DyadicScalar alpha;
    std::uint64_t max_order = 1;
    std::vector<HypothesisRow> per_dim;  // every d with 2^d <= M
    DyadicScalar c_plain;                // min product
    DyadicScalar c_scaled;               // min scaled product
};

HypothesisReport hypothesis_check(const DyadicScalar& alpha, std::uint64_t max_order);

}  // namespace f2norm
