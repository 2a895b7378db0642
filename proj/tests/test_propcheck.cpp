#include <doctest.h>

#include "extri/propcheck.hpp"
#include "extri/search.hpp"
#include "oracles.hpp"

using namespace extri;

namespace {

const Family kFour(6, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});

Family star(int n, int k)
{
    std::vector<Block> blocks;
    for (const auto& b : oracle::all_k_sets(n, k))
        if (b.test(1))
            blocks.push_back(b);
    return Family(n, blocks);
}

} // namespace

TEST_CASE("check_rwisetau")
{
    CHECK(check_rwisetau(Family(3, {{1, 2}, {1, 3}, {2, 3}}), 2).status == CheckStatus::Passed);
    const auto four = check_rwisetau(kFour, 3);
    CHECK(four.status == CheckStatus::Passed);
    CHECK(four.details == "tau=2, 2-intersecting");
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        CHECK(check_rwisetau(random_maximal_family(7, 3, 3, seed), 3).status == CheckStatus::Passed);
    CHECK(check_rwisetau(Family(4, {{1, 2}, {3, 4}}), 2).status == CheckStatus::NotApplicable);
}

TEST_CASE("check_tau_bound")
{
    CHECK(check_tau_bound(Family(3, {{1, 2}, {1, 3}, {2, 3}}), 2).status == CheckStatus::Passed);
    CHECK(check_tau_bound(star(6, 2), 1).status == CheckStatus::Passed);
    CHECK(check_tau_bound(star(6, 2), 2).status == CheckStatus::NotApplicable);
    CHECK(check_tau_bound(Family(4, {{1, 2}, {3, 4}}), 1).status == CheckStatus::NotApplicable);
}

TEST_CASE("check_cross_bound")
{
    const std::vector<Family> same{kFour, kFour};
    const auto r = check_cross_bound(same, 2);
    CHECK(r.status == CheckStatus::Passed);
    const std::vector<Family> with_star{star(6, 2), star(6, 2)};
    CHECK(check_cross_bound(with_star, 1).status == CheckStatus::NotApplicable);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto f = random_maximal_family(7, 3, 2, seed);
        const std::vector<Family> copies{f, f, f};
        CHECK(check_cross_bound(copies, 1).status != CheckStatus::Failed);
    }
}

TEST_CASE("check_claim_cover")
{
    CHECK(check_claim_cover(star(6, 2)).status == CheckStatus::Passed);
    CHECK(check_claim_cover(Family(4, {{1, 2}, {1, 3}, {2, 3}})).status == CheckStatus::Passed);
    CHECK(check_claim_cover(Family(5, {{1, 2, 3}, {1, 4, 5}, {2, 4, 5}})).status == CheckStatus::NotApplicable);
    CHECK(check_claim_cover(Family(6, {{1, 2}, {1, 3}})).status == CheckStatus::NotApplicable);
}

TEST_CASE("check_frankl_bound")
{
    const auto tight = check_frankl_bound(star(6, 3), 2);
    CHECK(tight.status == CheckStatus::Passed);
    CHECK(star(6, 3).size() == 10);
    CHECK(check_frankl_bound(Family(6, {{1, 2}, {1, 3}, {2, 3}}), 2).status == CheckStatus::Passed);

    // n = 2k: one block from each complementary pair
    std::vector<Block> halves;
    const Block all = Block::full(6);
    for (const auto& b : oracle::all_k_sets(6, 3))
        if (b < (all - b))
            halves.push_back(b);
    const Family pairs(6, halves);
    CHECK(pairs.size() == 10);
    CHECK(check_frankl_bound(pairs, 2).status == CheckStatus::Passed);
    CHECK(check_frankl_bound(Family(5, {{1, 2, 3, 4}}), 3).status == CheckStatus::NotApplicable);
}

TEST_CASE("check_all runs every check in a fixed order")
{
    const auto report = check_all(random_maximal_family(8, 3, 2, 3), 2);
    std::vector<std::string> names;
    for (const auto& c : report.checks)
        names.push_back(c.name);
    CHECK(names == std::vector<std::string>{"rwisetau", "tau_bound", "cross_bound", "cross_bound_mixed",
                                            "claim_cover", "frankl_bound"});
    CHECK_FALSE(report.any_failed());
}

TEST_CASE("small battery passes, covers every check and ignores the worker count")
{
    BatteryOptions options;
    options.count = 96;
    options.seed = 11;
    const auto one = run_battery(options);
    CHECK(one.passed());
    CHECK(one.families == 96);
    for (const auto& t : one.tallies) {
        CAPTURE(t.name);
        CHECK(t.applicable > 0);
        CHECK(t.passed == t.applicable);
    }
    options.workers = 4;
    const auto four = run_battery(options);
    REQUIRE(four.tallies.size() == one.tallies.size());
    for (std::size_t i = 0; i < one.tallies.size(); ++i) {
        CHECK(four.tallies[i].name == one.tallies[i].name);
        CHECK(four.tallies[i].applicable == one.tallies[i].applicable);
        CHECK(four.tallies[i].passed == one.tallies[i].passed);
    }
}

TEST_CASE("battery rejects an empty grid")
{
    BatteryOptions options;
    options.k_values.clear();
    CHECK_THROWS_AS(run_battery(options), DomainError);
}
