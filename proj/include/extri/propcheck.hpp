#ifndef EXTRI_PROPCHECK_HPP
#define EXTRI_PROPCHECK_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "extri/core.hpp"

namespace extri {

enum class CheckStatus
{
    NotApplicable,
    Passed,
    Failed,
};

const char* to_string(CheckStatus status);

/// One property evaluated on one input. `details` names the counterexample
/// on failure and the reason on NotApplicable.
struct CheckResult
{
    std::string name;
    CheckStatus status = CheckStatus::NotApplicable;
    std::string details;
};

/// r-wise intersecting with tau = t implies ((r-2)(t-1)+1)-intersecting.
CheckResult check_rwisetau(const Family& family, int r);

/// Intersecting, k-uniform, tau >= t implies |F| <= k^t C(n-t, k-t).
CheckResult check_tau_bound(const Family& family, int t);

/// Cross-t-intersecting k-uniform families with tau >= 2 each satisfy
/// t |F_i| <= k C(k,t) C(n-t-1, k-t-1).
CheckResult check_cross_bound(std::span<const Family> families, int t);

/// Maximal intersecting with n >= 2k: minimal covers of size <= 2 pairwise meet.
CheckResult check_claim_cover(const Family& family);

/// r-wise intersecting k-uniform with (r-1) n >= r k implies |F| <= C(n-1, k-1).
CheckResult check_frankl_bound(const Family& family, int r);

struct PropReport
{
    std::vector<CheckResult> checks;
    bool any_failed() const;
};

/**
 * Runs every check on one family, choosing the free parameters itself:
 * t = tau(F) for the tau bound, and for the cross bound both the identical
 * pair [F, F] and the mixed pair [F, every other block of F], each at the
 * largest t for which the pair is cross-t-intersecting.
 */
PropReport check_all(const Family& family, int r);

struct BatteryOptions
{
    std::size_t count = 1000;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    std::vector<int> n_values{6, 7, 8, 9};
    std::vector<int> k_values{2, 3};
    std::vector<int> r_values{2, 3};
};

struct CheckTally
{
    std::string name;
    std::uint64_t applicable = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
};

struct BatteryFailure
{
    std::size_t index = 0;
    int n = 0, k = 0, r = 0;
    std::uint64_t seed = 0;
    Family family{GroundSet(1)};
    std::vector<CheckResult> failed;
};

struct BatteryReport
{
    BatteryOptions options;
    std::size_t families = 0;
    std::vector<CheckTally> tallies;
    std::vector<BatteryFailure> failures;
    bool passed() const { return failures.empty(); }
};

/**
 * Family i uses grid point i mod |grid| (n fastest, then k, then r) and
 * seed options.seed + i. Results are merged in index order, so the report
 * does not depend on the worker count.
 */
BatteryReport run_battery(const BatteryOptions& options);

} // namespace extri

#endif // EXTRI_PROPCHECK_HPP
