#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace f2norm {

/// Randomized property suites behind `f2norm verify`.
///
///   tA       ||f_V||_1 = 2<chi_A, f_V> exactly, plus the sign and support structure of f_V
///   lem1     ||f_V||_1 >= 2|V|^-1 {alpha|V|}(1 - {alpha|V|}), with equality on the extremal sets
///   techlem  sum(delta - delta^2) >= g(1 - g), g = frac(sum delta)
///   beckner  ||f * p_eta||_2 <= ||f||_{1+eta^2} and ||p_eta||_1 = 1
///   chang    large spectrum inside its span, span dimension under the Chang ceiling
struct SuiteReport {
    std::string name;
    std::uint64_t trials = 0;
    std::uint64_t violations = 0;
    std::vector<std::string> messages;  // first few violations
};

struct SuiteOptions {
    std::uint64_t trials = 500;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    int min_n = 2;
    int max_n = 10;
};

const std::vector<std::string>& suite_names();

/// name is one of suite_names() or "all".
std::vector<SuiteReport> run_suites(std::string_view name, const SuiteOptions& options);

}  // namespace f2norm
