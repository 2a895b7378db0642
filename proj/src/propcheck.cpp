#include "extri/propcheck.hpp"

#include <algorithm>

#include "extri/covers.hpp"
#include "extri/parallel.hpp"
#include "extri/predicates.hpp"
#include "extri/search.hpp"

namespace extri {

namespace {

CheckResult not_applicable(std::string name, std::string why)
{
    return {std::move(name), CheckStatus::NotApplicable, std::move(why)};
}

CheckResult verdict(std::string name, bool ok, std::string details)
{
    return {std::move(name), ok ? CheckStatus::Passed : CheckStatus::Failed, std::move(details)};
}

bool has_empty_block(const Family& family)
{
    for (const auto& b : family)
        if (b.empty())
            return true;
    return false;
}

/// Largest t with every transversal of size >= t; 0 if some transversal is disjoint.
int cross_intersection_level(std::span<const Family> families)
{
    int upper = kMaxWidth;
    for (const auto& f : families)
        for (const auto& b : f)
            upper = std::min(upper, b.size());
    for (int t = upper; t >= 1; --t)
        if (is_cross_t_intersecting(families, t))
            return t;
    return 0;
}

} // namespace

const char* to_string(CheckStatus status)
{
    switch (status) {
    case CheckStatus::NotApplicable:
        return "not_applicable";
    case CheckStatus::Passed:
        return "passed";
    case CheckStatus::Failed:
        return "failed";
    }
    return "unknown";
}

bool PropReport::any_failed() const
{
    for (const auto& c : checks)
        if (c.status == CheckStatus::Failed)
            return true;
    return false;
}

CheckResult check_rwisetau(const Family& family, int r)
{
    const std::string name = "rwisetau";
    if (r < 2)
        return not_applicable(name, "r < 2");
    if (family.empty() || has_empty_block(family))
        return not_applicable(name, "tau undefined");
    if (!is_r_wise_intersecting(family, r))
        return not_applicable(name, "family is not r-wise intersecting");

    const int t = covering_number(family).tau;
    const int s = (r - 2) * (t - 1) + 1;
    const auto blocks = family.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            if ((blocks[i] & blocks[j]).size() < s)
                return verdict(name, false,
                               "tau=" + std::to_string(t) + " but " + blocks[i].to_string() + " and " +
                                   blocks[j].to_string() + " meet in fewer than " + std::to_string(s));
    return verdict(name, true, "tau=" + std::to_string(t) + ", " + std::to_string(s) + "-intersecting");
}

CheckResult check_tau_bound(const Family& family, int t)
{
    const std::string name = "tau_bound";
    const int k = family.uniformity();
    if (k < 1)
        return not_applicable(name, "family is empty or not uniform");
    if (t < 0)
        return not_applicable(name, "t < 0");
    if (!is_intersecting(family))
        return not_applicable(name, "family is not intersecting");
    const int tau = covering_number(family).tau;
    if (tau < t)
        return not_applicable(name, "tau=" + std::to_string(tau) + " < t");

    const BigCount bound = power(BigCount(k), static_cast<unsigned>(t)) * binomial(family.n() - t, k - t);
    const BigCount size = family.size();
    return verdict(name, size <= bound, "|F|=" + size.str() + " bound=" + bound.str());
}

CheckResult check_cross_bound(std::span<const Family> families, int t)
{
    const std::string name = "cross_bound";
    if (families.empty() || t < 1)
        return not_applicable(name, "need at least one family and t >= 1");
    const int k = families.front().uniformity();
    for (const auto& f : families) {
        if (f.uniformity() != k || k < 1)
            return not_applicable(name, "families are not all k-uniform for one k");
        if (f.ground() != families.front().ground())
            return not_applicable(name, "different ground sets");
    }
    for (const auto& f : families)
        if (covering_number(f).tau < 2)
            return not_applicable(name, "some family has tau < 2");
    if (!is_cross_t_intersecting(families, t))
        return not_applicable(name, "families are not cross-" + std::to_string(t) + "-intersecting");

    const int n = families.front().n();
    // k/t * C(k,t) * C(n-t-1, k-t-1), cross-multiplied by t
    const BigCount rhs = BigCount(k) * binomial(k, t) * binomial(n - t - 1, k - t - 1);
    for (std::size_t i = 0; i < families.size(); ++i) {
        const BigCount lhs = BigCount(t) * families[i].size();
        if (lhs > rhs)
            return verdict(name, false,
                           "family " + std::to_string(i) + ": t*|F_i|=" + lhs.str() + " > " + rhs.str());
    }
    return verdict(name, true, "t=" + std::to_string(t) + " t*|F_i| <= " + rhs.str());
}

CheckResult check_claim_cover(const Family& family)
{
    const std::string name = "claim_cover";
    const int k = family.uniformity();
    if (k < 1)
        return not_applicable(name, "family is empty or not uniform");
    if (family.n() < 2 * k)
        return not_applicable(name, "n < 2k");
    if (!is_maximal_r_wise_intersecting(family, 2, k))
        return not_applicable(name, "family is not maximal intersecting");

    const auto covers = minimal_covers(family, 2);
    for (std::size_t i = 0; i < covers.size(); ++i)
        for (std::size_t j = i + 1; j < covers.size(); ++j)
            if (!covers[i].intersects(covers[j]))
                return verdict(name, false,
                               "disjoint covers " + covers[i].to_string() + " and " + covers[j].to_string());
    return verdict(name, true, std::to_string(covers.size()) + " minimal covers of size <= 2 pairwise meet");
}

CheckResult check_frankl_bound(const Family& family, int r)
{
    const std::string name = "frankl_bound";
    const int k = family.uniformity();
    if (k < 1 || r < 2)
        return not_applicable(name, "family is empty or not uniform, or r < 2");
    const long long n = family.n();
    if ((r - 1) * n < static_cast<long long>(r) * k)
        return not_applicable(name, "(r-1)n < rk");
    if (!is_r_wise_intersecting(family, r))
        return not_applicable(name, "family is not r-wise intersecting");
    const BigCount bound = binomial(n - 1, k - 1);
    const BigCount size = family.size();
    return verdict(name, size <= bound, "|F|=" + size.str() + " bound=" + bound.str());
}

PropReport check_all(const Family& family, int r)
{
    PropReport report;
    report.checks.push_back(check_rwisetau(family, r));

    int tau = 0;
    if (!family.empty() && !has_empty_block(family))
        tau = covering_number(family).tau;
    report.checks.push_back(check_tau_bound(family, tau));

    const std::vector<Family> same{family, family};
    CheckResult identical = not_applicable("cross_bound", "family is empty");
    if (!family.empty())
        identical = check_cross_bound(same, std::max(1, cross_intersection_level(same)));
    report.checks.push_back(identical);

    std::vector<Block> every_other;
    for (std::size_t i = 0; i < family.size(); i += 2)
        every_other.push_back(family[i]);
    CheckResult mixed = not_applicable("cross_bound", "family is empty");
    if (!family.empty()) {
        const std::vector<Family> pair{family, Family(family.ground(), every_other)};
        mixed = check_cross_bound(pair, std::max(1, cross_intersection_level(pair)));
    }
    mixed.name = "cross_bound_mixed";
    report.checks.push_back(mixed);

    report.checks.push_back(check_claim_cover(family));
    report.checks.push_back(check_frankl_bound(family, r));
    return report;
}

BatteryReport run_battery(const BatteryOptions& options)
{
    struct Point
    {
        int n, k, r;
    };
    std::vector<Point> grid;
    for (int r : options.r_values)
        for (int k : options.k_values)
            for (int n : options.n_values)
                grid.push_back({n, k, r});
    if (grid.empty())
        throw DomainError("battery grid is empty");

    std::vector<PropReport> reports(options.count);
    std::vector<Family> families(options.count, Family(GroundSet(1)));
    parallel_for_index(options.count, options.workers, [&](std::size_t i) {
        const auto& p = grid[i % grid.size()];
        families[i] = random_maximal_family(p.n, p.k, p.r, options.seed + i);
        reports[i] = check_all(families[i], p.r);
    });

    BatteryReport out;
    out.options = options;
    out.families = options.count;
    for (std::size_t i = 0; i < options.count; ++i) {
        const auto& p = grid[i % grid.size()];
        BatteryFailure failure;
        for (const auto& c : reports[i].checks) {
            auto it = std::find_if(out.tallies.begin(), out.tallies.end(),
                                   [&](const CheckTally& t) { return t.name == c.name; });
            if (it == out.tallies.end()) {
                out.tallies.push_back({c.name});
                it = std::prev(out.tallies.end());
            }
            if (c.status != CheckStatus::NotApplicable)
                ++it->applicable;
            if (c.status == CheckStatus::Passed)
                ++it->passed;
            if (c.status == CheckStatus::Failed) {
                ++it->failed;
                failure.failed.push_back(c);
            }
        }
        if (!failure.failed.empty()) {
            failure.index = i;
            failure.n = p.n;
            failure.k = p.k;
            failure.r = p.r;
            failure.seed = options.seed + i;
            failure.family = families[i];
            out.failures.push_back(std::move(failure));
        }
    }
    return out;
}

} // namespace extri
