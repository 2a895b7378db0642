// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "extri/cli.hpp"
#include "extri/covers.hpp"
#include "extri/extremal.hpp"
#include "extri/propcheck.hpp"
#include "extri/search.hpp"
#include "extri/triangles.hpp"
#include "oracles.hpp"

using namespace extri;

namespace {

struct Outcome
{
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            if (ok)
                detail.clear();
            ok = false;
            if (!detail.empty())
                detail += "; ";
            detail += what;
        }
    }
};

using Clock = std::chrono::steady_clock;

bool run_criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body)
{
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_seconds > 0 && secs >= limit_seconds)
        o.require(false, "runtime " + std::to_string(secs) + " s over " + std::to_string(limit_seconds) + " s");
    std::printf("%s  criterion %d  %s  (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
    return o.ok;
}

std::string cli_output(std::vector<std::string> args)
{
    args.insert(args.begin(), "extri");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return std::to_string(code) + "\n" + out.str();
}

Outcome exact_extremal_values()
{
    Outcome o;
    for (int n = 3; n <= 10; ++n)
        o.require(n_exact(n, 2, 2) == 1, "n_exact(" + std::to_string(n) + ",2,2) != 1");
    for (int n = 6; n <= 10; ++n)
        o.require(n_exact(n, 3, 3) == 1, "n_exact(" + std::to_string(n) + ",3,3) != 1");
    if (o.ok)
        o.detail = "13 values all equal 1";
    return o;
}

Outcome k2_search()
{
    Outcome o;
    std::string detail;
    for (int n = 4; n <= 6; ++n) {
        const auto report = max_triangle_search(n, 2, 2);
        o.require(report.max_count == 1, "max_count at n=" + std::to_string(n) + " is " + report.max_count.str());
        o.require(report.all_maximizers_sandwich, "non-sandwich maximizer at n=" + std::to_string(n));
        if (n == 5)
            o.require(report.maximizer_count == oracle::pascal_binomial(5, 3),
                      "maximizer count at n=5 is " + report.maximizer_count.str());
        detail += (detail.empty() ? "" : ", ") + ("n=" + std::to_string(n) + ": " + report.maximizer_count.str() +
                                                  " maximizers");
    }
    if (o.ok)
        o.detail = detail;
    return o;
}

Outcome bounds_grid()
{
    Outcome o;
    int rows = 0, chain_failures = 0;
    bool failures_have_r_eq_k = true;
    std::string first_chain;
    for (int k = 2; k <= 4; ++k)
        for (int r = 2; r <= k; ++r) {
            const int start = std::max(k * k, k + r + 1);
            for (int n = start; n <= start + 3; ++n) {
                ++rows;
                const auto exact = n_exact(n, k, r, 0);
                const auto bounds = prop1_bounds(n, k, r);
                const auto v = compare_bounds(bounds, exact);
                const std::string at = "(k,r,n)=(" + std::to_string(k) + "," + std::to_string(r) + "," +
                                       std::to_string(n) + ")";
                o.require(v.incl_excl_below_exact, "incl_excl > n_exact at " + at);
                o.require(v.half_power_below_exact, "2*n_exact < half power at " + at);
                if (!v.ratio_below_half_power) {
                    ++chain_failures;
                    failures_have_r_eq_k = failures_have_r_eq_k && r == k;
                    if (first_chain.empty())
                        first_chain = at + ": C(n-r-1,k-r)^(r+1) = " + bounds.half_power_doubled.str() +
                                      " < (n-1)^(r+1)/k^(r+1) = " + bounds.ratio_numerator.str() + "/" +
                                      BigCount(bounds.ratio_denominator / 2).str();
                }
            }
        }
    if (chain_failures > 0)
        o.require(false, "chained ratio inequality fails on " + std::to_string(chain_failures) + " of " +
                             std::to_string(rows) + " rows" + (failures_have_r_eq_k ? " (all with r = k)" : "") +
                             ", first " + first_chain);
    if (o.ok)
        o.detail = std::to_string(rows) + " rows";
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    int mismatches = 0, compared = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = 4 + static_cast<int>(seed % 9);
        const int size = 8 + static_cast<int>(seed % 13);
        const auto f = oracle::random_family(n, size, 0.55, 5000 + seed);
        for (int r = 2; r <= 5; ++r) {
            ++compared;
            if (count_r_triangles(f, r) != oracle::naive_count_triangles(f, r))
                ++mismatches;
        }
    }
    int families = 0;
    for (auto [n, k] : {std::pair{5, 2}, {6, 2}, {6, 3}})
        for (int r = 2; r <= 3; ++r)
            enumerate_maximal_families(n, k, r, [&](const Family& f) {
                ++families;
                const auto cert = covering_number(f);
                if (cert.tau != oracle::brute_covering_number(f) || !is_cover(cert.witness, f))
                    ++mismatches;
            });
    o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
    if (o.ok)
        o.detail = std::to_string(compared) + " triangle counts, " + std::to_string(families) +
                   " covering numbers, 0 mismatches";
    return o;
}

Outcome battery()
{
    Outcome o;
    BatteryOptions options;
    options.workers = 0;
    const auto report = run_battery(options);
    o.require(report.families == 1000, "ran " + std::to_string(report.families) + " families");
    for (const auto& f : report.failures) {
        std::string names;
        for (const auto& c : f.failed)
            names += c.name + " ";
        o.require(false, "family " + std::to_string(f.index) + " failed " + names);
    }
    std::string detail;
    for (const auto& t : report.tallies) {
        o.require(t.applicable > 0, t.name + " never applicable");
        detail += (detail.empty() ? "" : ", ") + t.name + " " + std::to_string(t.passed) + "/" +
                  std::to_string(t.applicable);
    }
    if (o.ok)
        o.detail = detail;
    return o;
}

Outcome cover_graph_structure()
{
    Outcome o;
    for (auto [n, k, r] : {std::tuple{9, 3, 2}, {8, 4, 3}}) {
        Block x;
        for (int e = 1; e <= r + 1; ++e)
            x.set(e);
        const auto g = cover_graph_analysis(construct_extremal(n, k, x));
        std::vector<std::pair<int, int>> clique;
        for (int a = 1; a <= r + 1; ++a)
            for (int b = a + 1; b <= r + 1; ++b)
                clique.emplace_back(a, b);
        const std::string at = "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(r) + ")";
        o.require(g.singleton_covers.empty(), "singleton cover at " + at);
        o.require(g.edges == clique, "edges are not the clique on X at " + at);
        o.require(g.components == std::vector<std::vector<int>>{x.elements()}, "components differ at " + at);
        o.require(!g.has_induced_p3, "induced P3 at " + at);
        o.require(g.max_degree == r, "max degree " + std::to_string(g.max_degree) + " at " + at);
        o.require(g.all_components_cliques, "non-clique component at " + at);
    }
    if (o.ok)
        o.detail = "K3 on {1,2,3} and K4 on {1,2,3,4}";
    return o;
}

Outcome determinism()
{
    Outcome o;
    const std::vector<std::string> search{"search", "--n", "7", "--k", "3", "--r", "2", "--format", "json"};
    const std::vector<std::string> bat{"battery", "--count", "1000", "--seed", "1", "--format", "json"};
    for (const auto& base : {search, bat}) {
        auto one = base, four = base;
        one.insert(one.end(), {"--workers", "1"});
        four.insert(four.end(), {"--workers", "4"});
        const auto a = cli_output(one);
        const auto b = cli_output(four);
        o.require(a.starts_with("0\n"), base[0] + " exited nonzero");
        o.require(a == b, base[0] + " JSON differs between 1 and 4 workers");
    }
    if (o.ok)
        o.detail = "search (7,3,2) and battery (1000, seed 1) byte-identical";
    return o;
}

Outcome nonuniform_exploration()
{
    Outcome o;
    std::string detail;
    for (int n = 3; n <= 4; ++n) {
        const auto report = nonuniform_max_triangle_search(n, 2);
        o.require(report.target_count.has_value(), "no target at n=" + std::to_string(n));
        if (!report.target_count)
            continue;
        o.require(report.max_count >= *report.target_count, "max below target at n=" + std::to_string(n));
        detail += (detail.empty() ? "" : ", ") + ("n=" + std::to_string(n) + ": max " + report.max_count.str() +
                                                  " vs F_X " + report.target_count->str() +
                                                  (report.max_count == *report.target_count ? " (equal)"
                                                                                            : " (exceeds)"));
    }
    if (o.ok)
        o.detail = detail + ", exploratory";
    return o;
}

} // namespace

int main()
{
    bool ok = true;
    ok &= run_criterion(1, "exact extremal values n_exact = 1", 1.0, exact_extremal_values);
    ok &= run_criterion(2, "k=2 exhaustive search, n in 4..6", 10.0, k2_search);
    ok &= run_criterion(3, "lower-bound chain against exact counts", 300.0, bounds_grid);
    ok &= run_criterion(4, "oracle equivalence (triangles, covering number)", 0, oracle_equivalence);
    ok &= run_criterion(5, "property battery, 1000 families", 300.0, battery);
    ok &= run_criterion(6, "cover graph of F_{X,k} is the clique on X", 1.0, cover_graph_structure);
    ok &= run_criterion(7, "JSON identical across 1 and 4 workers", 0, determinism);
    ok &= run_criterion(8, "non-uniform exploration, n in {3,4}", 0, nonuniform_exploration);
    return ok ? 0 : 1;
}
