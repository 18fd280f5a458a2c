#include "f2norm/verify.hpp"

#include "f2norm/constructions.hpp"
#include "f2norm/errors.hpp"
#include "f2norm/parallel.hpp"
#include "f2norm/random_inputs.hpp"
#include "f2norm/set_functions.hpp"
#include "f2norm/spectrum_chang.hpp"

#include <functional>
#include <optional>

namespace f2norm {

namespace {

constexpr std::size_t kMaxMessages = 5;

// Each check returns an empty optional on success, a description on violation.
using TrialCheck = std::function<std::optional<std::string>(Rng&, const SuiteOptions&)>;

GroupDim random_dim(Rng& rng, const SuiteOptions& o) {
    return GroupDim(std::uniform_int_distribution<int>(o.min_n, o.max_n)(rng));
}

std::optional<std::string> check_t_a(Rng& rng, const SuiteOptions& o) {
    GroupDim dim = random_dim(rng, o);
    PointSet a = random_point_set(rng, dim);
    DualSubspace v = random_subspace(rng, dim);
    ResidualTable fv = residual(a, v);
    DyadicScalar l1 = l1_norm(fv.table);
    DyadicScalar twice_inner = inner_product(indicator(a), fv.table).scaled_pow2(1);
    if (l1 != twice_inner) return "||f_V||_1 = " + l1.to_string() + " != 2<chi_A,f_V> = " + twice_inner.to_string();
    if (!mean(fv.table).is_zero()) return std::string("f_V has nonzero mean");
    for (std::size_t x = 0; x < fv.table.size(); ++x) {
        int sign = fv.table[x].sign();
        if (a.contains(static_cast<PointMask>(x)) ? sign < 0 : sign > 0) return "f_V has the wrong sign at " + std::to_string(x);
    }
    Spectrum fhat = fwht(fv.table);
    for (CharMask g : v.elements())
        if (!fhat[g].is_zero()) return "fhat_V nonzero on V at " + std::to_string(g);
    return std::nullopt;
}

std::optional<std::string> check_lem1(Rng& rng, const SuiteOptions& o) {
    GroupDim dim = random_dim(rng, o);
    PointSet a = random_point_set(rng, dim);
    DualSubspace v = random_subspace(rng, dim);
    DyadicScalar l1 = residual_l1(residual(a, v));
    DyadicScalar bound = physical_lower_bound(a.density(), v.order());
    if (l1 < bound) return "||f_V||_1 = " + l1.to_string() + " < bound " + bound.to_string();

    // Extremal set for a fresh density at the same resolution.
    std::uniform_int_distribution<std::int64_t> count(0, static_cast<std::int64_t>(dim.order()));
    DyadicScalar alpha = DyadicScalar::from_parts(count(rng), dim.n());
    PointSet eq = build_equality_case(alpha, v, dim);
    DyadicScalar eq_l1 = residual_l1(residual(eq, v));
    DyadicScalar eq_bound = physical_lower_bound(alpha, v.order());
    if (eq.density() != alpha) return std::string("equality case has the wrong density");
    if (eq_l1 != eq_bound) return "equality case gives " + eq_l1.to_string() + ", bound " + eq_bound.to_string();
    return std::nullopt;
}

std::optional<std::string> check_techlem(Rng& rng, const SuiteOptions&) {
    int m = std::uniform_int_distribution<int>(1, 8)(rng);
    auto deltas = random_deltas(rng, m, 64);
    auto gap = frac_quadratic_gap(deltas);
    if (gap.lhs < gap.rhs) return "lhs " + std::to_string(gap.lhs.convert_to<double>()) + " < rhs";
    return std::nullopt;
}

std::optional<std::string> check_beckner(Rng& rng, const SuiteOptions& o) {
    static const DyadicScalar kEtas[] = {DyadicScalar::from_parts(1, 2), DyadicScalar::from_parts(1, 1),
                                         DyadicScalar::from_parts(3, 2), DyadicScalar(1)};
    GroupDim dim = random_dim(rng, o);
    FunctionTable f = random_dyadic_table(rng, dim);
    auto lambda = random_independent_set(rng, dim, std::uniform_int_distribution<int>(0, dim.n())(rng));
    const DyadicScalar& eta = kEtas[std::uniform_int_distribution<int>(0, 3)(rng)];
    RieszProduct p = riesz_product(dim, lambda, eta);
    if (l1_norm(p.table) != DyadicScalar(1)) return "||p_eta||_1 = " + l1_norm(p.table).to_string();
    auto sides = beckner_verify(f, lambda, eta.to_double());
    if (sides.lhs > sides.rhs * (1.0 + 1e-9))
        return "Beckner: " + std::to_string(sides.lhs) + " > " + std::to_string(sides.rhs);
    return std::nullopt;
}

std::optional<std::string> check_chang(Rng& rng, const SuiteOptions& o) {
    GroupDim dim = random_dim(rng, o);
    FunctionTable f = random_dyadic_table(rng, dim);
    DyadicScalar l1 = l1_norm(f);
    if (l1.is_zero()) return std::nullopt;
    // eps = k/64, k in [1, 64]
    DyadicScalar eps = DyadicScalar::from_parts(std::uniform_int_distribution<int>(1, 64)(rng), 6);
    Spectrum fhat = fwht(f);
    ChangSpan cs = chang_span(fhat, eps * l1);
    for (std::size_t g = 0; g < fhat.size(); ++g)
        if (abs(fhat[g]) >= eps * l1 && !cs.span.contains(static_cast<CharMask>(g)))
            return "large character " + std::to_string(g) + " outside the span";
    if (!cs.large_spectrum.empty() && static_cast<double>(cs.span.dim()) > cs.bound_dim)
        return "dim W = " + std::to_string(cs.span.dim()) + " exceeds bound " + std::to_string(cs.bound_dim);
    return std::nullopt;
}

struct Suite {
    std::string name;
    TrialCheck check;
};

const std::vector<Suite>& suites() {
    static const std::vector<Suite> all = {
        {"tA", check_t_a}, {"lem1", check_lem1}, {"techlem", check_techlem}, {"beckner", check_beckner}, {"chang", check_chang},
    };
    return all;
}

SuiteReport run_one(std::size_t stream, const Suite& suite, const SuiteOptions& o) {
    std::vector<std::optional<std::string>> results(o.trials);
    parallel_for(o.trials, o.jobs, [&](std::size_t i) {
        Rng rng = trial_rng(o.seed, stream, i);
        try {
            results[i] = suite.check(rng, o);
        } catch (const InvariantViolation& e) {
            results[i] = std::string(e.what());
        }
    });
    SuiteReport report{suite.name, o.trials, 0, {}};
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!results[i]) continue;
        ++report.violations;
        if (report.messages.size() < kMaxMessages) report.messages.push_back("trial " + std::to_string(i) + ": " + *results[i]);
    }
    return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& s : suites()) out.push_back(s.name);
        return out;
    }();
    return names;
}

std::vector<SuiteReport> run_suites(std::string_view name, const SuiteOptions& options) {
    if (options.min_n < 1 || options.max_n < options.min_n || options.max_n > kHardMaxDim)
        throw InputError("invalid n range for verification");
    std::vector<SuiteReport> out;
    for (std::size_t i = 0; i < suites().size(); ++i)
        if (name == "all" || name == suites()[i].name) out.push_back(run_one(i, suites()[i], options));
    if (out.empty()) throw InputError("unknown suite '" + std::string(name) + "'");
    return out;
}

}  // namespace f2norm
