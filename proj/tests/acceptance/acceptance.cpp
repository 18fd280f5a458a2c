// One PASS/FAIL line per acceptance criterion.
//   acceptance                 run all criteria
//   acceptance --criterion N   run only criterion N (exit status reflects it)

#include "f2norm/constructions.hpp"
#include "f2norm/errors.hpp"
#include "f2norm/explorer.hpp"
#include "f2norm/iteration.hpp"
#include "f2norm/random_inputs.hpp"
#include "f2norm/set_functions.hpp"
#include "f2norm/spectrum_chang.hpp"
#include "f2norm/verify.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

using namespace f2norm;

namespace {

// Pinned limits.
constexpr double kLimitCosetSeconds = 10.0;
constexpr double kLimitConstructionSeconds = 5.0;
constexpr double kLimitIdentitySeconds = 60.0;
constexpr double kLimitStepSeconds = 120.0;
constexpr double kLimitExplorerSeconds = 30.0;
constexpr double kBecknerRelTol = 1e-9;
constexpr double kNoLimit = 0.0;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    int failures = 0;

    void fail(const std::string& what) {
        pass = false;
        if (failures++ < 3) detail << (failures > 1 ? "; " : "") << what;
    }
};

DyadicScalar d(Wide num, int exp) { return DyadicScalar::from_parts(num, exp); }

DyadicScalar norm_of(const PointSet& a) { return a_norm(fwht(indicator(a))); }

// Point set x + V^perp, built from the parity conditions.
PointSet perp_coset(GroupDim dim, const std::vector<Mask>& rows, PointMask shift) {
    PointSet a(dim);
    for (PointMask y = 0; y < dim.order(); ++y) {
        bool in = true;
        for (Mask g : rows) in = in && pairing(g, y ^ shift) == 0;
        if (in) a.insert(y);
    }
    return a;
}

// Calls body(rows) for every subspace of the dual of F_2^n, rows in reduced
// echelon form with lowest-set-bit pivots.
void for_each_subspace(int n, const std::function<void(const std::vector<Mask>&)>& body) {
    for (Mask pivots = 0; pivots < (Mask{1} << n); ++pivots) {
        std::vector<int> piv;
        for (int b = 0; b < n; ++b)
            if (pivots >> b & 1) piv.push_back(b);
        std::vector<std::vector<int>> free(piv.size());
        int total = 0;
        for (std::size_t i = 0; i < piv.size(); ++i) {
            for (int q = piv[i] + 1; q < n; ++q)
                if (!(pivots >> q & 1)) free[i].push_back(q);
            total += static_cast<int>(free[i].size());
        }
        std::vector<Mask> rows(piv.size());
        for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << total); ++fill) {
            int used = 0;
            for (std::size_t i = 0; i < piv.size(); ++i) {
                Mask r = Mask{1} << piv[i];
                for (int q : free[i])
                    if (fill >> used++ & 1) r |= Mask{1} << q;
                rows[i] = r;
            }
            body(rows);
        }
    }
}

// Number of subspaces of F_2^n: sum of Gaussian binomials.
std::uint64_t subspace_count(int n) {
    std::uint64_t total = 0;
    for (int k = 0; k <= n; ++k) {
        std::uint64_t num = 1, den = 1;
        for (int i = 0; i < k; ++i) {
            num *= (std::uint64_t{1} << (n - i)) - 1;
            den *= (std::uint64_t{1} << (i + 1)) - 1;
        }
        total += num / den;
    }
    return total;
}

void criterion_1(Outcome& o) {
    Rng rng(1001);
    std::uint64_t visited = 0;
    for (int n = 1; n <= 8; ++n) {
        GroupDim dim(n);
        std::uint64_t count = 0;
        for_each_subspace(n, [&](const std::vector<Mask>& rows) {
            ++count;
            if (!(DualSubspace::span_of(rows).basis() == rows)) o.fail("echelon enumeration disagrees with span_of");
            PointMask shift = static_cast<PointMask>(rng() & dim.full_mask());
            PointSet a = perp_coset(dim, rows, shift);
            DyadicScalar v = norm_of(a);
            if (v != DyadicScalar(1)) o.fail("n=" + std::to_string(n) + " a_norm " + v.to_string());
        });
        if (count != subspace_count(n)) o.fail("enumerated " + std::to_string(count) + " subspaces at n=" + std::to_string(n));
        visited += count;
    }
    o.detail << (o.pass ? "" : "; ") << visited << " subspaces, n<=8";
}

void criterion_2(Outcome& o) {
    for (int k = 1; k <= 5; ++k) {
        GroupDim dim(2 * k);
        auto u = build_coset_union(density_family(DensityFamily::geometric4, k), dim);
        auto chi = fwht(indicator(u.set));
        DyadicScalar v = a_norm(chi);
        if (v > DyadicScalar(k) || v.scaled_pow2(1) < DyadicScalar(k))
            o.fail("k=" + std::to_string(k) + " a_norm " + v.to_string() + " outside [k/2, k]");
        for (int i = 1; i <= k; ++i) {
            const auto& lam = u.witness.lambdas[i - 1];
            for (CharMask g : lam.elements()) {
                if (g == 0 || (i > 1 && u.witness.lambdas[i - 2].contains(g))) continue;
                // |chi_hat(g)| >= (2/3) 4^-i
                if (abs(chi[g]) * DyadicScalar(3) * DyadicScalar(1).scaled_pow2(2 * i) < DyadicScalar(2))
                    o.fail("k=" + std::to_string(k) + " layer " + std::to_string(i) + " floor broken at " + std::to_string(g));
            }
        }
        o.detail << (k > 1 || !o.pass ? " " : "") << "k=" << k << ":" << v.to_string();
    }
}

void criterion_3(Outcome& o) {
    for (int k = 1; k <= 5; ++k) {
        auto alpha = density_family(DensityFamily::geometric4, k).value();
        auto r = hypothesis_check(alpha, (std::uint64_t{1} << (2 * k)) - 1);
        if (r.c_plain * DyadicScalar(12) < DyadicScalar(1))
            o.fail("geometric4 k=" + std::to_string(k) + " c_plain " + r.c_plain.to_string() + " < 1/12");
    }
    int checks = 0;
    std::set<int> failing_d;
    for (int k = 1; k <= 5; ++k) {
        auto alpha = density_family(DensityFamily::double_exp, k).value();
        std::uint64_t m = (std::uint64_t{1} << (1 << (k - 1))) - 1;
        for (int dd = 0; (std::uint64_t{1} << dd) <= m; ++dd) {
            ++checks;
            DyadicScalar t = alpha.scaled_pow2(dd).frac();
            if (t * DyadicScalar(8) > DyadicScalar(7) || t.scaled_pow2(dd) < DyadicScalar(1)) failing_d.insert(dd);
            if (t * DyadicScalar(8) > DyadicScalar(7))
                o.fail("double_exp k=" + std::to_string(k) + " d=" + std::to_string(dd) + " {alpha|V|} = " + t.to_string() + " > 7/8");
            if (t.scaled_pow2(dd) < DyadicScalar(1))
                o.fail("double_exp k=" + std::to_string(k) + " |V|=2^" + std::to_string(dd) + ": {alpha|V|} = " + t.to_string() +
                       " < |V|^-1");
        }
    }
    o.detail << " | double_exp (k, d) pairs checked: " << checks << ", failing d values: {";
    for (int dd : failing_d) o.detail << (dd == *failing_d.begin() ? "" : ",") << dd;
    o.detail << "}";
}

void criteria_4_5(Outcome& c4, Outcome& c5) {
    for (int n = 4; n <= 12; ++n) {
        GroupDim dim(n);
        for (int t = 0; t < 500; ++t) {
            Rng rng = trial_rng(4004, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t));
            PointSet a = random_point_set(rng, dim);
            DualSubspace v = random_subspace(rng, dim);
            ResidualTable fv = residual(a, v);
            DyadicScalar l1 = l1_norm(fv.table);
            DyadicScalar sum_on_a;
            for (PointMask x : a.members()) sum_on_a += fv.table[x];
            DyadicScalar twice_inner = sum_on_a.scaled_pow2(1 - n);
            if (l1 != twice_inner) c4.fail("n=" + std::to_string(n) + " trial " + std::to_string(t));
            if (n <= 8 && oracle::values(fv.table) != oracle::residual(a, oracle::span(v.basis())))
                c4.fail("residual table differs from brute force");
            if (l1 < physical_lower_bound(a.density(), v.order())) c5.fail("n=" + std::to_string(n) + " trial " + std::to_string(t));
        }
    }
    for (int t = 0; t < 100; ++t) {
        Rng rng = trial_rng(5005, 0, static_cast<std::uint64_t>(t));
        GroupDim dim(std::uniform_int_distribution<int>(1, 10)(rng));
        DualSubspace v = random_subspace(rng, dim);
        auto count = std::uniform_int_distribution<std::int64_t>(0, static_cast<std::int64_t>(dim.order()))(rng);
        DyadicScalar alpha = DyadicScalar::from_parts(count, dim.n());
        PointSet a = build_equality_case(alpha, v, dim);
        if (a.density() != alpha || residual_l1(residual(a, v)) != physical_lower_bound(alpha, v.order()))
            c5.fail("equality case trial " + std::to_string(t));
    }
    c4.detail << (c4.pass ? "" : "; ") << "4500 pairs, n=4..12";
    c5.detail << (c5.pass ? "" : "; ") << "4500 pairs + 100 equality cases";
}

void criterion_6(Outcome& o) {
    Rng rng(6006);
    for (int t = 0; t < 10000; ++t) {
        auto deltas = random_deltas(rng, std::uniform_int_distribution<int>(1, 8)(rng), 64);
        auto gap = frac_quadratic_gap(deltas);
        if (gap.lhs < gap.rhs) o.fail("random trial " + std::to_string(t));
    }
    for (int m = 1; m <= 8; ++m)
        for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
            std::vector<Rational> v;
            for (int i = 0; i < m; ++i) v.emplace_back(static_cast<std::int64_t>(bits >> i & 1));
            auto gap = frac_quadratic_gap(v);
            if (gap.lhs != gap.rhs || gap.lhs != 0) o.fail("0/1 vector not an equality case");
        }
    for (int den = 1; den <= 64; ++den)
        for (int num = 0; num <= den; ++num) {
            std::vector<Rational> v{Rational(num, den)};
            auto gap = frac_quadratic_gap(v);
            if (gap.lhs != gap.rhs) o.fail("singleton " + std::to_string(num) + "/" + std::to_string(den));
        }
}

void criterion_7(Outcome& o) {
    int done = 0;
    for (std::uint64_t t = 0; done < 500; ++t) {
        Rng rng = trial_rng(7007, 0, t);
        GroupDim dim(std::uniform_int_distribution<int>(1, 10)(rng));
        PointSet a = random_point_set(rng, dim);
        DualSubspace v = random_subspace(rng, dim);
        ResidualTable fv = residual(a, v);
        DyadicScalar base = l1_norm(fv.table);
        if (base.is_zero()) continue;
        ++done;
        StepResult r = iterate_step(a, v);
        std::string tag = "trial " + std::to_string(t) + ": ";
        if (!meets_level_threshold(r.gain, r.s)) o.fail(tag + "gain below (1/6)(4/3)^s");
        Spectrum fhat = fwht(fv.table);
        std::vector<Mask> grown = v.basis();
        for (CharMask g = 0; g < dim.order(); ++g) {
            DyadicScalar c = abs(fhat[g]);
            if (c.is_zero() || c.scaled_pow2(r.s) > base || c.scaled_pow2(r.s + 1) <= base) continue;
            if (v.contains(g)) o.fail(tag + "Gamma_s meets V");
            grown.push_back(g);
        }
        if (DualSubspace::span_of(grown) != r.v_new) o.fail(tag + "V' is not V + span(Gamma_s)");
        double l1 = base.to_double(), l2sq = l2_norm_squared(fv.table).to_double();
        double ceiling = 4 * std::numbers::e * std::pow(4.0, r.s) * std::max(std::log(l2sq / (l1 * l1)), 1.0);
        if (r.v_new.dim() - v.dim() > ceiling) o.fail(tag + "dimension growth above ceiling");
    }
    o.detail << (o.pass ? "" : "; ") << "500 steps, n<=10";
}

void criterion_8(Outcome& o) {
    auto check_sound = [&](const PointSet& a, std::uint64_t m, const std::string& tag) {
        auto trace = run_iteration(a, m);
        DyadicScalar exact = norm_of(a);
        if (trace.final_bound > exact) o.fail(tag + " final_bound above a_norm");
        if (trace.termination == Termination::residual_zero && trace.final_bound != exact)
            o.fail(tag + " ResidualZero without equality");
    };
    for (int k = 1; k <= 5; ++k) {
        GroupDim dim(2 * k);
        auto u = build_coset_union(density_family(DensityFamily::geometric4, k), dim);
        for (std::uint64_t m : {std::uint64_t{1}, std::uint64_t{4}, (std::uint64_t{1} << (2 * k)) - 1, dim.order()})
            check_sound(u.set, m, "geometric4 k=" + std::to_string(k));
    }
    for (int k = 1; k <= 4; ++k) {
        auto density = density_family(DensityFamily::double_exp, k);
        GroupDim dim(std::max(density.exponents().back(), 2));
        auto u = build_coset_union(density, dim);
        for (std::uint64_t m : {std::uint64_t{1}, (std::uint64_t{1} << (1 << (k - 1))) - 1, dim.order()})
            check_sound(u.set, m, "double_exp k=" + std::to_string(k));
    }
    for (int t = 0; t < 300; ++t) {
        Rng rng = trial_rng(8008, 0, static_cast<std::uint64_t>(t));
        GroupDim dim(std::uniform_int_distribution<int>(1, 10)(rng));
        PointSet a = random_point_set(rng, dim);
        check_sound(a, std::uint64_t{1} << std::uniform_int_distribution<int>(0, dim.n())(rng), "random " + std::to_string(t));
    }
    auto check_exact = [&](const PointSet& a, const std::string& tag) {
        auto trace = run_iteration(a, a.dim().order());
        if (trace.termination != Termination::residual_zero) o.fail(tag + " did not end in ResidualZero");
        if (trace.final_bound != norm_of(a)) o.fail(tag + " final_bound differs from a_norm");
    };
    int exact_cases = 0;
    for (int n = 1; n <= 6; ++n) {
        GroupDim dim(n);
        for (CharMask g = 1; g < dim.order(); ++g)
            for (PointMask shift : {PointMask{0}, dim.full_mask()}) {
                check_exact(perp_coset(dim, {g}, shift), "halfspace");
                ++exact_cases;
            }
    }
    for (int t = 0; t < 200; ++t) {
        Rng rng = trial_rng(8008, 1, static_cast<std::uint64_t>(t));
        GroupDim dim(std::uniform_int_distribution<int>(1, 10)(rng));
        DualSubspace v = random_subspace(rng, dim);
        check_exact(perp_coset(dim, v.basis(), static_cast<PointMask>(rng() & dim.full_mask())), "coset");
        ++exact_cases;
    }
    o.detail << (o.pass ? "" : "; ") << exact_cases << " halfspace/coset cases exact";
}

void criterion_9(Outcome& o) {
    SuiteOptions opts;
    opts.trials = 500;
    opts.seed = 9009;
    opts.min_n = 1;
    opts.max_n = 10;
    for (const char* name : {"chang", "beckner"}) {
        auto r = run_suites(name, opts).at(0);
        if (r.violations != 0) o.fail(r.name + ": " + (r.messages.empty() ? "" : r.messages[0]));
        o.detail << (o.detail.tellp() > 0 ? " " : "") << r.name << " " << r.trials - r.violations << "/" << r.trials;
    }
    // Continuous eta with the tolerance pinned above.
    for (int t = 0; t < 500; ++t) {
        Rng rng = trial_rng(9009, 99, static_cast<std::uint64_t>(t));
        GroupDim dim(std::uniform_int_distribution<int>(1, 10)(rng));
        FunctionTable f = random_dyadic_table(rng, dim);
        auto lambda = random_independent_set(rng, dim, std::uniform_int_distribution<int>(0, dim.n())(rng));
        double eta = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        auto sides = beckner_verify(f, lambda, eta);
        if (sides.lhs > sides.rhs * (1 + kBecknerRelTol)) o.fail("continuous eta trial " + std::to_string(t));
    }
    for (int num = -16; num <= 16; ++num) {
        GroupDim dim(6);
        auto p = riesz_product(dim, {1, 6, 24, 33}, d(num, 4));
        if (l1_norm(p.table) != DyadicScalar(1)) o.fail("||p_eta||_1 != 1 at eta=" + std::to_string(num) + "/16");
    }
}

void criterion_10(Outcome& o) {
    if (min_norm_exhaustive(GroupDim(2), 3).best_norm != d(3, 1)) o.fail("n=2 size 3 minimum is not 3/2");
    AnnealParams params;
    for (int n = 2; n <= 3; ++n) {
        GroupDim dim(n);
        for (std::size_t size = 1; size < dim.order(); ++size) {
            auto ex = min_norm_exhaustive(dim, size);
            if (oracle::to_q(ex.best_norm) != oracle::a_norm(ex.best_set)) o.fail("exhaustive record norm wrong");
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                auto an = min_norm_anneal(dim, size, params, seed);
                if (an.best_norm != ex.best_norm)
                    o.fail("n=" + std::to_string(n) + " size " + std::to_string(size) + " seed " + std::to_string(seed) + ": " +
                           an.best_norm.to_string() + " vs " + ex.best_norm.to_string());
            }
        }
    }
}

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
};

const std::vector<Criterion> kCriteria = {
    {1, "coset norm exact for every subspace, n<=8", kLimitCosetSeconds},
    {2, "geometric4 norm in [k/2, k] and spectrum floor", kLimitConstructionSeconds},
    {3, "hypothesis constants for geometric4 and double_exp", kNoLimit},
    {4, "||f_V||_1 = 2<chi_A, f_V> exactly", kLimitIdentitySeconds},
    {5, "physical lower bound and its equality case", kLimitIdentitySeconds},
    {6, "quadratic gap oracle and equality cases", kNoLimit},
    {7, "iteration step contract", kLimitStepSeconds},
    {8, "certificate soundness and exact capture", kNoLimit},
    {9, "Chang span and Beckner suites", kNoLimit},
    {10, "explorer anneal agrees with exhaustive", kLimitExplorerSeconds},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) only = std::atoi(argv[++i]);
        else {
            std::cerr << "usage: acceptance [--criterion N]\n";
            return 2;
        }
    }

    std::vector<Outcome> outcomes(kCriteria.size() + 1);
    std::vector<double> seconds(kCriteria.size() + 1, 0.0);
    auto timed = [&](int id, auto&& body) {
        auto start = std::chrono::steady_clock::now();
        try {
            body();
        } catch (const std::exception& e) {
            outcomes[id].fail(std::string("exception: ") + e.what());
        }
        seconds[id] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    auto wanted = [&](int id) { return only == 0 || only == id; };

    if (wanted(1)) timed(1, [&] { criterion_1(outcomes[1]); });
    if (wanted(2)) timed(2, [&] { criterion_2(outcomes[2]); });
    if (wanted(3)) timed(3, [&] { criterion_3(outcomes[3]); });
    if (wanted(4) || wanted(5)) {
        timed(4, [&] { criteria_4_5(outcomes[4], outcomes[5]); });
        seconds[5] = seconds[4];
    }
    if (wanted(6)) timed(6, [&] { criterion_6(outcomes[6]); });
    if (wanted(7)) timed(7, [&] { criterion_7(outcomes[7]); });
    if (wanted(8)) timed(8, [&] { criterion_8(outcomes[8]); });
    if (wanted(9)) timed(9, [&] { criterion_9(outcomes[9]); });
    if (wanted(10)) timed(10, [&] { criterion_10(outcomes[10]); });

    bool all_pass = true;
    for (const auto& c : kCriteria) {
        if (!wanted(c.id)) continue;
        Outcome& o = outcomes[c.id];
        if (c.limit_seconds > 0 && seconds[c.id] > c.limit_seconds) {
            std::ostringstream msg;
            msg << "runtime " << seconds[c.id] << "s over " << c.limit_seconds << "s";
            o.fail(msg.str());
        }
        all_pass = all_pass && o.pass;
        std::ostringstream time;
        time.precision(3);
        time << std::fixed << seconds[c.id];
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " [" << time.str() << "s";
        if (c.limit_seconds > 0) std::cout << " / " << c.limit_seconds << "s";
        std::cout << "]";
        std::string detail = o.detail.str();
        if (!detail.empty()) std::cout << "  " << detail;
        if (o.failures > 3) std::cout << " (+" << o.failures - 3 << " more)";
        std::cout << "\n";
    }
    return all_pass ? 0 : 1;
}
