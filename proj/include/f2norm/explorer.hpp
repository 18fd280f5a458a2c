#pragma once

#include "f2norm/dyadic.hpp"
#include "f2norm/group.hpp"
#include "f2norm/point_set.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace f2norm {

enum class SearchMethod { exhaustive, anneal };

std::string_view to_string(SearchMethod m);
SearchMethod parse_search_method(std::string_view name);

struct SearchRecord {
    int n = 0;
    std::size_t set_size = 0;
    PointSet best_set{GroupDim{1}};
    DyadicScalar best_norm;
    SearchMethod method = SearchMethod::exhaustive;
    std::uint64_t evaluations = 0;
    std::uint64_t seed = 0;
};

/// Builds a record, recomputing best_norm through the exact transform.
/// Throws InvariantViolation if claimed_norm disagrees.
SearchRecord make_search_record(const PointSet& best, const DyadicScalar& claimed_norm, SearchMethod method,
                                std::uint64_t evaluations, std::uint64_t seed);

/// Lower norm wins, ties go to the lexicographically smaller set; evaluation
/// counts add. Associative and commutative.
SearchRecord merge(const SearchRecord& a, const SearchRecord& b);

/// a_norm of chi_A through a plain integer transform (fast path for search).
DyadicScalar set_norm(const PointSet& a);

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// Number of candidate sets min_norm_exhaustive would evaluate.
std::uint64_t exhaustive_candidate_count(GroupDim dim, std::size_t size);

/// Exact minimum of ||chi_A|| over |A| = size. Candidates are restricted to
/// one representative shape per affine class: 0, e_1, ..., e_r in A and A
/// inside span(e_1..e_r). Throws BudgetExceeded past the budget.
SearchRecord min_norm_exhaustive(GroupDim dim, std::size_t size, std::uint64_t budget = kDefaultSearchBudget);

struct AnnealParams {
    double initial_temperature = 1.0;
    double cooling_ratio = 0.995;
    std::uint64_t steps = 10'000;
};

/// Swap-move simulated annealing with geometric cooling; deterministic in seed.
SearchRecord min_norm_anneal(GroupDim dim, std::size_t size, const AnnealParams& params, std::uint64_t seed);

/// x -> M x + shift, where columns[i] is the image of e_i. Columns must be
/// linearly independent.
PointSet apply_affine(const PointSet& a, const std::vector<Mask>& columns, PointMask shift);

}  // namespace f2norm
