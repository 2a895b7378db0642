#ifndef EXTRI_SEARCH_HPP
#define EXTRI_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "extri/core.hpp"

namespace extri {

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000;

struct SearchOptions
{
    /// 0 means hardware concurrency.
    unsigned workers = 1;
    std::uint64_t node_budget = kDefaultNodeBudget;
    /// Cap on the maximizer representatives kept in a report.
    std::size_t max_reported = 16;
    /// Report maximizers up to relabeling of the ground set (n <= 8 only).
    bool isomorphism_reduction = false;
};

struct EnumerationStats
{
    std::uint64_t nodes = 0;
    std::uint64_t subproblems = 0;
};

struct SearchReport
{
    int n = 0;
    /// Block size; 0 for the non-uniform search.
    int k = 0;
    int r = 0;
    bool uniform = true;
    /// Largest number of (r+1)-triangles over maximal r-wise intersecting families.
    BigCount max_count;
    /// Canonically smallest maximizers (or isomorphism-class representatives), capped.
    std::vector<Family> maximizers;
    BigCount maximizer_count;
    /// Every maximizer satisfies F'_X <= F <= F_X for some (r+1)-set X.
    bool all_maximizers_sandwich = true;
    BigCount families_enumerated;
    EnumerationStats stats;
    /// Non-uniform search: triangle count of F_X over 2^[n], |X| = r+1.
    std::optional<BigCount> target_count;
    std::optional<std::size_t> isomorphism_classes;
};

using FamilyVisitor = std::function<void(const Family&)>;

/**
 * Visits every inclusion-maximal r-wise intersecting subfamily of `universe`
 * exactly once and returns how many there are.
 *
 * The r-wise property is hereditary, so this is a maximal-independent-set
 * walk: candidates are taken in canonical order and either included or
 * excluded. An excluded block must eventually conflict with the chosen
 * family; a branch is cut as soon as some excluded block cannot conflict
 * with the chosen blocks plus every remaining candidate. Visit order is the
 * include-first depth-first order, independent of `options.workers`.
 * Throws BudgetError when the walk exceeds options.node_budget nodes.
 */
BigCount enumerate_maximal_subfamilies(GroundSet ground, std::span<const Block> universe, int r,
                                       const FamilyVisitor& visitor, const SearchOptions& options = {},
                                       EnumerationStats* stats = nullptr);

/// Maximal r-wise intersecting subfamilies of C([n], k).
BigCount enumerate_maximal_families(int n, int k, int r, const FamilyVisitor& visitor,
                                    const SearchOptions& options = {}, EnumerationStats* stats = nullptr);

/// Maximum number of (r+1)-triangles over maximal r-wise intersecting F in C([n], k).
SearchReport max_triangle_search(int n, int k, int r, const SearchOptions& options = {});

/// Same over F in 2^[n] (empty set excluded), with the F_X comparison target.
SearchReport nonuniform_max_triangle_search(int n, int r, const SearchOptions& options = {});

/// Greedy maximal r-wise intersecting family from a seeded shuffle of C([n], k).
Family random_maximal_family(int n, int k, int r, std::uint64_t seed);

/**
 * r-wise intersecting and no further block can be added. The candidate
 * blocks are C([n], k), or every nonempty subset of [n] when k is empty.
 */
bool is_maximal_r_wise_intersecting(const Family& family, int r, std::optional<int> k);

/// Applies element map e -> perm[e-1] (perm is a permutation of 1..n).
Family relabel(const Family& family, std::span<const int> perm);

/// Lexicographically smallest relabeling of the family; n must be <= 8.
Family canonical_form(const Family& family);

} // namespace extri

#endif // EXTRI_SEARCH_HPP
