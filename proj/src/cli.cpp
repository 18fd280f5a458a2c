#include "f2norm/cli.hpp"

#include "f2norm/constructions.hpp"
#include "f2norm/errors.hpp"
#include "f2norm/explorer.hpp"
#include "f2norm/formats.hpp"
#include "f2norm/iteration.hpp"
#include "f2norm/parallel.hpp"
#include "f2norm/set_functions.hpp"
#include "f2norm/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace f2norm {

namespace {

std::string decimal(const DyadicScalar& x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x.to_double());
    return buf;
}

void emit(const std::string& path, std::string_view text, std::ostream& out) {
    if (path == "-") out << text;
    else write_text_file(path, text);
}

struct GlobalOptions {
    int max_n = kDefaultMaxDim;
    unsigned jobs = 1;
};

void check_dim(int n, const GlobalOptions& g) {
    if (n > g.max_n)
        throw ResourceLimit("n=" + std::to_string(n) + " exceeds the configured cap --max-n=" + std::to_string(g.max_n));
}

PointSet load_set(const std::string& path, const GlobalOptions& g) {
    PointSet a = read_set_file(path);
    check_dim(a.dim().n(), g);
    return a;
}

std::vector<int> parse_exponent_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw InputError("malformed exponent list '" + text + "'");
        }
    }
    return out;
}

void print_hypothesis(const HypothesisReport& r, std::ostream& out) {
    out << "alpha=" << r.alpha.to_string() << " max_order=" << r.max_order << "\n";
    out << "d\tfrac\tproduct\tscaled_product\n";
    for (const auto& row : r.per_dim) {
        DyadicScalar t = r.alpha.scaled_pow2(row.d).frac();
        out << row.d << '\t' << t.to_string() << '\t' << row.product.to_string() << '\t' << row.scaled_product.to_string()
            << '\n';
    }
    out << "c_plain=" << r.c_plain.to_string() << " (" << decimal(r.c_plain) << ")\n";
    out << "c_scaled=" << r.c_scaled.to_string() << " (" << decimal(r.c_scaled) << ")\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Fourier-algebra norms of subsets of F_2^n", "f2norm"};
    app.set_config("--config", "", "TOML-style file overriding any flag");
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--max-n", global.max_n, "Largest accepted n")->check(CLI::Range(1, kHardMaxDim));
    app.add_option("--jobs", global.jobs, "Worker threads for verify and explore")->check(CLI::Range(1u, 256u));

    // norm
    std::string norm_path;
    auto* norm = app.add_subcommand("norm", "Print the exact A(G) norm of a set");
    norm->add_option("setfile", norm_path)->required();

    // construct
    std::string family_name = "geometric4", exponents_text, construct_out = "-", witness_path;
    int family_k = 1, construct_n = 0;
    auto* construct = app.add_subcommand("construct", "Build a disjoint coset union of dyadic density");
    construct->add_option("--family", family_name)->check(CLI::IsMember({"geometric4", "double_exp"}));
    construct->add_option("--k", family_k)->check(CLI::PositiveNumber);
    construct->add_option("--n", construct_n)->required();
    construct->add_option("--exponents", exponents_text, "Explicit d1,d2,... (overrides --family)");
    construct->add_option("-o,--out", construct_out, "Set file destination ('-' for stdout)");
    construct->add_option("--witness", witness_path, "Witness JSON destination");

    // lowerbound
    std::string lb_path, lb_out = "-", strategy_name = "smallest-s";
    std::uint64_t max_order = 0;
    int step_cap = kDefaultStepCap;
    bool omit_norm = false, omit_hypothesis = false;
    auto* lowerbound = app.add_subcommand("lowerbound", "Run the iteration and write a certificate");
    lowerbound->add_option("setfile", lb_path)->required();
    lowerbound->add_option("--max-order", max_order, "Order cap M on |V_k|")->required()->check(CLI::PositiveNumber);
    lowerbound->add_option("--strategy", strategy_name)->check(CLI::IsMember({"smallest-s", "best-ratio"}));
    lowerbound->add_option("--step-cap", step_cap)->check(CLI::NonNegativeNumber);
    lowerbound->add_option("-o,--out", lb_out, "Certificate destination ('-' for stdout)");
    lowerbound->add_flag("--omit-norm", omit_norm, "Write a_norm as null");
    lowerbound->add_flag("--omit-hypothesis", omit_hypothesis, "Write hypothesis as null");

    // profile
    std::string alpha_text;
    int max_dim = 0;
    bool profile_json = false;
    auto* profile = app.add_subcommand("profile", "Fractional-part profile of a dyadic density");
    profile->add_option("--alpha", alpha_text, "Density as NUM/2^EXP")->required();
    profile->add_option("--max-dim", max_dim)->required()->check(CLI::Range(0, 62));
    profile->add_flag("--json", profile_json);

    // verify
    std::string suite_name = "all";
    SuiteOptions suite_opts;
    auto* verify = app.add_subcommand("verify", "Run randomized property suites");
    std::vector<std::string> suite_choices = suite_names();
    suite_choices.push_back("all");
    verify->add_option("--suite", suite_name)->check(CLI::IsMember(suite_choices));
    verify->add_option("--trials", suite_opts.trials)->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", suite_opts.seed);
    verify->add_option("--min-n", suite_opts.min_n)->check(CLI::Range(1, kHardMaxDim));
    verify->add_option("--max-n-trial", suite_opts.max_n, "Largest n drawn in trials")->check(CLI::Range(1, kHardMaxDim));

    // explore
    int explore_n = 0;
    std::size_t explore_size = 0;
    std::string method_name = "exhaustive", ledger = "explore.csv";
    std::uint64_t explore_seed = 0, budget = kDefaultSearchBudget;
    unsigned restarts = 1;
    AnnealParams anneal;
    auto* explore = app.add_subcommand("explore", "Search for minimum-norm sets of a given size");
    explore->add_option("--n", explore_n)->required();
    explore->add_option("--size", explore_size)->required();
    explore->add_option("--method", method_name)->check(CLI::IsMember({"exhaustive", "anneal"}));
    explore->add_option("--seed", explore_seed);
    explore->add_option("--restarts", restarts, "Anneal seeds seed..seed+R-1, merged")->check(CLI::Range(1u, 100000u));
    explore->add_option("--budget", budget, "Exhaustive candidate budget");
    explore->add_option("--t0", anneal.initial_temperature);
    explore->add_option("--ratio", anneal.cooling_ratio);
    explore->add_option("--steps", anneal.steps);
    explore->add_option("--ledger", ledger, "CSV ledger to append to ('-' for stdout only)");

    // check-cert
    std::string cc_set, cc_cert;
    auto* check_cert = app.add_subcommand("check-cert", "Validate a certificate against its set file");
    check_cert->add_option("setfile", cc_set)->required();
    check_cert->add_option("certificate", cc_cert)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*norm) {
            PointSet a = load_set(norm_path, global);
            DyadicScalar v = a_norm(fwht(indicator(a)));
            out << "n=" << a.dim().n() << " size=" << a.size() << " alpha=" << a.density().to_string() << "\n";
            out << "a_norm=" << wide::to_string(v.numerator()) << "/2^" << v.exponent() << "\n";
            out << "decimal=" << decimal(v) << "\n";
            return kExitOk;
        }

        if (*construct) {
            check_dim(construct_n, global);
            GroupDim dim(construct_n);
            DyadicDensity density = exponents_text.empty()
                                        ? density_family(parse_density_family(family_name), family_k)
                                        : DyadicDensity(parse_exponent_list(exponents_text));
            CosetUnion u = build_coset_union(density, dim);
            emit(construct_out, format_set_file(u.set), out);
            if (!witness_path.empty()) write_text_file(witness_path, witness_to_json(density, u).dump(2) + "\n");
            return kExitOk;
        }

        if (*lowerbound) {
            PointSet a = load_set(lb_path, global);
            auto trace = run_iteration(a, max_order, parse_level_strategy(strategy_name), step_cap);
            DyadicScalar exact = a_norm(fwht(indicator(a)));
            if (trace.final_bound > exact) throw InvariantViolation("final bound exceeds a_norm");
            auto cert = make_certificate(a, trace, omit_norm ? std::nullopt : std::optional(exact),
                                         omit_hypothesis ? std::nullopt : std::optional(hypothesis_check(a.density(), max_order)));
            emit(lb_out, serialize_certificate(cert), out);
            std::ostream& summary = lb_out == "-" ? err : out;
            summary << "final_bound=" << trace.final_bound.to_string() << " (" << decimal(trace.final_bound) << ")"
                    << " a_norm=" << exact.to_string() << " steps=" << trace.steps.size()
                    << " termination=" << to_string(trace.termination) << "\n";
            if (auto c = trace.growth_constant()) summary << "growth_constant=" << *c << "\n";
            if (auto c = trace.growth_constant_geometric()) summary << "growth_constant_geometric=" << *c << "\n";
            if (auto r = trace.loglog_ratio(max_order)) summary << "final_bound/loglogM=" << *r << "\n";
            return kExitOk;
        }

        if (*profile) {
            DyadicScalar alpha = DyadicScalar::parse(alpha_text);
            auto report = hypothesis_check(alpha, std::uint64_t{1} << max_dim);
            if (profile_json) out << hypothesis_to_json(report).dump(2) << "\n";
            else print_hypothesis(report, out);
            return kExitOk;
        }

        if (*verify) {
            suite_opts.jobs = global.jobs;
            check_dim(suite_opts.max_n, global);
            auto reports = run_suites(suite_name, suite_opts);
            bool ok = true;
            for (const auto& r : reports) {
                out << (r.violations == 0 ? "PASS " : "FAIL ") << r.name << " trials=" << r.trials
                    << " violations=" << r.violations << "\n";
                for (const auto& m : r.messages) out << "  " << m << "\n";
                ok = ok && r.violations == 0;
            }
            return ok ? kExitOk : kExitViolation;
        }

        if (*explore) {
            check_dim(explore_n, global);
            GroupDim dim(explore_n);
            SearchMethod method = parse_search_method(method_name);
            SearchRecord record;
            if (method == SearchMethod::exhaustive) {
                record = min_norm_exhaustive(dim, explore_size, budget);
            } else {
                std::vector<std::optional<SearchRecord>> runs(restarts);
                parallel_for(restarts, global.jobs, [&](std::size_t i) {
                    runs[i] = min_norm_anneal(dim, explore_size, anneal, explore_seed + i);
                });
                record = *runs[0];
                for (std::size_t i = 1; i < runs.size(); ++i) record = merge(record, *runs[i]);
            }
            if (ledger != "-") append_search_record(ledger, record);
            out << kSearchCsvHeader << "\n" << search_csv_row(record) << "\n";
            return kExitOk;
        }

        if (*check_cert) {
            PointSet a = load_set(cc_set, global);
            std::ifstream in(cc_cert, std::ios::binary);
            if (!in) throw InputError("cannot open '" + cc_cert + "'");
            std::stringstream ss;
            ss << in.rdbuf();
            auto failures = check_certificate(parse_certificate(ss.str()), a);
            for (const auto& f : failures) out << "FAIL " << f << "\n";
            if (failures.empty()) out << "OK certificate verified\n";
            return failures.empty() ? kExitOk : kExitViolation;
        }
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitResource;
    }
    return kExitBadInput;
}

}  // namespace f2norm
