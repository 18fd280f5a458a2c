#include "f2norm/iteration.hpp"

#include "f2norm/constructions.hpp"
#include "f2norm/errors.hpp"
#include "f2norm/set_functions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace f2norm {

DyadicScalar captured_mass(const Spectrum& chi_hat, const DualSubspace& v) {
    DyadicScalar total;
    for (CharMask g : v.elements()) total += abs(chi_hat[g]);
    return total;
}

StepResult iterate_step(const PointSet& a, const DualSubspace& v, LevelStrategy strategy) {
    return iterate_step(a, fwht(indicator(a)), v, strategy);
}

StepResult iterate_step(const PointSet& a, const Spectrum& chi_hat, const DualSubspace& v, LevelStrategy strategy) {
    ResidualTable fv = residual(a, v);
    DyadicScalar base = residual_l1(fv);
    if (base.is_zero()) throw ZeroResidual("f_V vanishes: A is a union of V-perp cosets");

    Spectrum fv_hat = fwht(fv.table);
    auto levels = level_sets(fv_hat, chi_hat, base);
    const LevelSet& chosen = select_level(levels, strategy, v);

    StepResult r;
    r.s = chosen.s;
    r.level_mass = chosen.mass;
    r.residual_l1 = base;
    r.dim_before = v.dim();
    r.v_new = v;
    for (CharMask g : chosen.members) {
        if (v.contains(g)) throw InvariantViolation("Gamma_s meets V at character " + std::to_string(g));
        r.v_new.insert(g);
    }
    r.dim_after = r.v_new.dim();
    r.gain = captured_mass(chi_hat, r.v_new) - captured_mass(chi_hat, v);

    // Chang at eps = 2^-(s+1) covers {|fhat_V| >= 2^-(s+1)||f_V||_1}, a superset of Gamma_s.
    const double eps = std::ldexp(1.0, -(r.s + 1));
    r.chang_ceiling = chang_cardinality_bound(fv.table, eps);
    r.chang_ceiling_as_stated = chang_cardinality_bound_as_stated(fv.table, eps);

    if (!meets_level_threshold(r.gain, r.s))
        throw InvariantViolation("step gain " + r.gain.to_string() + " below (1/6)(4/3)^" + std::to_string(r.s));
    if (r.gain < r.level_mass) throw InvariantViolation("step gain smaller than the chosen level mass");
    if (static_cast<double>(r.dim_after - r.dim_before) > r.chang_ceiling)
        throw InvariantViolation("dimension growth exceeds the Chang ceiling");
    return r;
}

std::string_view to_string(Termination t) {
    switch (t) {
        case Termination::order_cap_reached: return "OrderCapReached";
        case Termination::residual_zero: return "ResidualZero";
        case Termination::step_cap: return "StepCap";
    }
    return "StepCap";
}

Termination parse_termination(std::string_view name) {
    if (name == "OrderCapReached") return Termination::order_cap_reached;
    if (name == "ResidualZero") return Termination::residual_zero;
    if (name == "StepCap") return Termination::step_cap;
    throw InputError("unknown termination '" + std::string(name) + "'");
}

std::optional<double> IterationTrace::growth_constant() const {
    long total_s = 0;
    for (const auto& st : steps) total_s += st.s;
    if (total_s == 0) return std::nullopt;
    return final_bound.to_double() / static_cast<double>(total_s);
}

std::optional<double> IterationTrace::growth_constant_geometric() const {
    if (steps.empty()) return std::nullopt;
    double total = 0.0;
    for (const auto& st : steps) total += std::pow(4.0 / 3.0, st.s);
    return final_bound.to_double() / total;
}

std::optional<double> IterationTrace::loglog_ratio(std::uint64_t max_order) const {
    double ll = std::log(std::log(static_cast<double>(max_order)));
    if (!(ll > 0.0)) return std::nullopt;
    return final_bound.to_double() / ll;
}

IterationTrace run_iteration(const PointSet& a, std::uint64_t max_order, LevelStrategy strategy, int step_cap) {
    if (max_order < 1) throw InputError("max order M must be >= 1");
    if (step_cap < 0) throw InputError("step cap must be non-negative");

    const Spectrum chi_hat = fwht(indicator(a));
    IterationTrace trace;
    DualSubspace v;
    DyadicScalar level = captured_mass(chi_hat, v);
    trace.l_sequence.push_back(level);

    while (true) {
        if (residual_l1(residual(a, v)).is_zero()) {
            trace.termination = Termination::residual_zero;
            break;
        }
        if (v.order() > max_order) {
            trace.termination = Termination::order_cap_reached;
            break;
        }
        if (static_cast<int>(trace.steps.size()) >= step_cap) {
            trace.termination = Termination::step_cap;
            break;
        }
        StepResult step = iterate_step(a, chi_hat, v, strategy);
        DyadicScalar next = level + step.gain;
        if (next <= level || !step.v_new.contains_subspace(v) || step.v_new == v)
            throw InvariantViolation("iteration failed to make progress");
        v = step.v_new;
        level = next;
        trace.l_sequence.push_back(level);
        trace.steps.push_back(std::move(step));
    }
    trace.final_bound = level;
    trace.final_subspace = v;
    return trace;
}

HypothesisReport hypothesis_check(const DyadicScalar& alpha, std::uint64_t max_order) {
    if (max_order < 1) throw InputError("max order M must be >= 1");
    int max_dim = 0;
    while (max_dim < 63 && (std::uint64_t{1} << (max_dim + 1)) <= max_order) ++max_dim;

    HypothesisReport report;
    report.alpha = alpha;
    report.max_order = max_order;
    for (const auto& row : density_profile(alpha, max_dim)) {
        HypothesisRow h{row.d, row.product, row.product.scaled_pow2(row.d)};
        if (report.per_dim.empty() || h.product < report.c_plain) report.c_plain = h.product;
        if (report.per_dim.empty() || h.scaled_product < report.c_scaled) report.c_scaled = h.scaled_product;
        report.per_dim.push_back(h);
    }
    return report;
}

}  // namespace f2norm
