#include "f2norm/explorer.hpp"

#include "f2norm/errors.hpp"
#include "f2norm/fourier.hpp"
#include "f2norm/set_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace f2norm {

std::string_view to_string(SearchMethod m) {
    return m == SearchMethod::exhaustive ? "exhaustive" : "anneal";
}

SearchMethod parse_search_method(std::string_view name) {
    if (name == "exhaustive") return SearchMethod::exhaustive;
    if (name == "anneal") return SearchMethod::anneal;
    throw InputError("unknown search method '" + std::string(name) + "'");
}

SearchRecord make_search_record(const PointSet& best, const DyadicScalar& claimed_norm, SearchMethod method,
                                std::uint64_t evaluations, std::uint64_t seed) {
    DyadicScalar exact = a_norm(fwht(indicator(best)));
    if (exact != claimed_norm)
        throw InvariantViolation("search reported norm " + claimed_norm.to_string() + " but the set has " +
                                 exact.to_string());
    return {best.dim().n(), best.size(), best, exact, method, evaluations, seed};
}

SearchRecord merge(const SearchRecord& a, const SearchRecord& b) {
    bool take_b = b.best_norm < a.best_norm ||
                  (b.best_norm == a.best_norm && lexicographically_less(b.best_set, a.best_set));
    SearchRecord out = take_b ? b : a;
    out.evaluations = a.evaluations + b.evaluations;
    return out;
}

namespace {

// Integer Walsh-Hadamard coefficients 2^n chihat_A.
std::vector<std::int64_t> integer_spectrum(GroupDim dim, const std::vector<PointMask>& members) {
    std::vector<std::int64_t> c(dim.order(), 0);
    for (PointMask x : members) c[x] = 1;
    for (std::size_t h = 1; h < c.size(); h <<= 1)
        for (std::size_t i = 0; i < c.size(); i += h << 1)
            for (std::size_t j = i; j < i + h; ++j) {
                auto x = c[j], y = c[j + h];
                c[j] = x + y;
                c[j + h] = x - y;
            }
    return c;
}

std::int64_t abs_sum(const std::vector<std::int64_t>& c) {
    std::int64_t total = 0;
    for (auto v : c) total += v < 0 ? -v : v;
    return total;
}

std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    long double r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (r >= 1.8e19L) return UINT64_MAX;
    return static_cast<std::uint64_t>(std::llround(r));
}

}  // namespace

DyadicScalar set_norm(const PointSet& a) {
    return DyadicScalar::from_parts(abs_sum(integer_spectrum(a.dim(), a.members())), a.dim().n());
}

std::uint64_t exhaustive_candidate_count(GroupDim dim, std::size_t size) {
    if (size > dim.order()) throw InputError("set size exceeds 2^n");
    if (size == 0) return 1;
    std::uint64_t total = 0;
    const int max_r = std::min<int>(dim.n(), static_cast<int>(size) - 1);
    for (int r = 0; r <= max_r; ++r) {
        std::uint64_t pool = (std::uint64_t{1} << r) - static_cast<std::uint64_t>(r) - 1;
        std::uint64_t c = saturating_binomial(pool, size - static_cast<std::size_t>(r) - 1);
        total = (UINT64_MAX - total < c) ? UINT64_MAX : total + c;
    }
    return total;
}

SearchRecord min_norm_exhaustive(GroupDim dim, std::size_t size, std::uint64_t budget) {
    const std::uint64_t candidates = exhaustive_candidate_count(dim, size);
    if (candidates > budget)
        throw BudgetExceeded(std::to_string(candidates) + " candidate sets exceed the budget of " + std::to_string(budget));
    if (size == 0) return make_search_record(PointSet(dim), DyadicScalar(0), SearchMethod::exhaustive, 1, 0);

    bool have_best = false;
    PointSet best(dim);
    std::int64_t best_sum = 0;
    std::uint64_t evaluations = 0;

    const int max_r = std::min<int>(dim.n(), static_cast<int>(size) - 1);
    for (int r = 0; r <= max_r; ++r) {
        std::vector<PointMask> fixed{0};
        for (int i = 0; i < r; ++i) fixed.push_back(PointMask{1} << i);
        std::vector<PointMask> pool;
        for (PointMask x = 0; x < (PointMask{1} << r); ++x)
            if (std::find(fixed.begin(), fixed.end(), x) == fixed.end()) pool.push_back(x);
        const std::size_t pick = size - fixed.size();
        if (pick > pool.size()) continue;

        // Walk all pick-subsets of the pool in lexicographic index order.
        std::vector<std::size_t> idx(pick);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<PointMask> members = fixed;
            for (auto i : idx) members.push_back(pool[i]);
            std::int64_t sum = abs_sum(integer_spectrum(dim, members));
            ++evaluations;
            PointSet candidate(dim, members);
            if (!have_best || sum < best_sum || (sum == best_sum && lexicographically_less(candidate, best))) {
                have_best = true;
                best_sum = sum;
                best = std::move(candidate);
            }
            // next combination
            std::size_t i = pick;
            while (i > 0 && idx[i - 1] == pool.size() - pick + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return make_search_record(best, DyadicScalar::from_parts(best_sum, dim.n()), SearchMethod::exhaustive, evaluations, 0);
}

SearchRecord min_norm_anneal(GroupDim dim, std::size_t size, const AnnealParams& params, std::uint64_t seed) {
    if (size == 0 || size >= dim.order()) throw InputError("annealing needs 0 < size < 2^n");
    if (!(params.initial_temperature > 0.0) || !(params.cooling_ratio > 0.0 && params.cooling_ratio <= 1.0))
        throw InputError("annealing needs a positive temperature and a cooling ratio in (0, 1]");

    std::mt19937_64 rng(seed);
    std::vector<PointMask> all(dim.order());
    std::iota(all.begin(), all.end(), PointMask{0});
    std::shuffle(all.begin(), all.end(), rng);
    // all[0..size) is the current set, the rest its complement.
    std::vector<PointMask> members(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
    std::vector<PointMask> outside(all.begin() + static_cast<std::ptrdiff_t>(size), all.end());

    auto coeffs = integer_spectrum(dim, members);
    std::int64_t current = abs_sum(coeffs);
    std::int64_t best_sum = current;
    std::vector<PointMask> best_members = members;
    std::uint64_t evaluations = 1;

    std::uniform_int_distribution<std::size_t> pick_in(0, members.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_out(0, outside.size() - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double scale = std::ldexp(1.0, -dim.n());
    double temperature = params.initial_temperature;
    std::vector<std::int64_t> trial(coeffs.size());

    for (std::uint64_t step = 0; step < params.steps; ++step) {
        std::size_t i = pick_in(rng), j = pick_out(rng);
        PointMask leave = members[i], enter = outside[j];
        std::int64_t sum = 0;
        for (std::size_t g = 0; g < coeffs.size(); ++g) {
            auto gm = static_cast<CharMask>(g);
            trial[g] = coeffs[g] - character_value(gm, leave) + character_value(gm, enter);
            sum += trial[g] < 0 ? -trial[g] : trial[g];
        }
        ++evaluations;
        double delta = static_cast<double>(sum - current) * scale;
        if (delta <= 0.0 || unit(rng) < std::exp(-delta / temperature)) {
            std::swap(members[i], outside[j]);
            coeffs.swap(trial);
            current = sum;
            if (sum < best_sum) {
                best_sum = sum;
                best_members = members;
            }
        }
        temperature *= params.cooling_ratio;
    }
    return make_search_record(PointSet(dim, best_members), DyadicScalar::from_parts(best_sum, dim.n()),
                              SearchMethod::anneal, evaluations, seed);
}

PointSet apply_affine(const PointSet& a, const std::vector<Mask>& columns, PointMask shift) {
    if (static_cast<int>(columns.size()) != a.dim().n() || !linearly_independent(columns))
        throw InputError("affine map needs n linearly independent columns");
    PointSet out(a.dim());
    for (PointMask x : a.members()) {
        PointMask y = shift;
        for (int i = 0; i < a.dim().n(); ++i)
            if (x >> i & 1) y ^= columns[static_cast<std::size_t>(i)];
        out.insert(y);
    }
    return out;
}

}  // namespace f2norm
