#include "extri/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "extri/extremal.hpp"
#include "extri/parallel.hpp"
#include "extri/predicates.hpp"
#include "extri/triangles.hpp"

namespace extri {

namespace {

// Fixed so node statistics and output do not depend on the worker count.
constexpr int kSplitDepth = 8;
constexpr std::uint64_t kBudgetFlush = 1024;

/**
 * Intersections of every j chosen blocks, j = 0..r-1, maintained as a stack
 * so the walk can push and pop blocks. A block q conflicts with the chosen
 * family exactly when some stored intersection with j >= 1 misses it.
 */
class IntersectionLevels
{
  public:
    explicit IntersectionLevels(int r) : levels_(static_cast<std::size_t>(r))
    {
        levels_[0].push_back(Block::universe());
    }

    int depth() const { return static_cast<int>(levels_.size()); }
    const std::vector<Block>& level(int j) const { return levels_[j]; }

    bool conflicts(const Block& q) const
    {
        if (q.empty())
            return true;
        for (std::size_t j = 1; j < levels_.size(); ++j)
            for (const auto& a : levels_[j])
                if (!a.intersects(q))
                    return true;
        return false;
    }

    void push(const Block& p)
    {
        std::vector<std::size_t> sizes(levels_.size());
        for (std::size_t j = 0; j < levels_.size(); ++j)
            sizes[j] = levels_[j].size();
        marks_.push_back(std::move(sizes));
        for (std::size_t j = levels_.size() - 1; j >= 1; --j) {
            auto& dst = levels_[j];
            const auto& src = levels_[j - 1];
            const std::size_t old = marks_.back()[j - 1];
            for (std::size_t i = 0; i < old; ++i)
                dst.push_back(src[i] & p);
        }
    }

    void pop()
    {
        const auto& sizes = marks_.back();
        for (std::size_t j = 0; j < levels_.size(); ++j)
            levels_[j].resize(sizes[j]);
        marks_.pop_back();
    }

  private:
    std::vector<std::vector<Block>> levels_;
    std::vector<std::vector<std::size_t>> marks_;
};

struct WalkState
{
    std::vector<int> chosen;
    std::vector<int> candidates;
    std::vector<int> excluded;
};

class NodeCounter
{
  public:
    NodeCounter(std::atomic<std::uint64_t>& shared, std::uint64_t budget) : shared_(shared), budget_(budget) {}
    ~NodeCounter() { shared_.fetch_add(local_, std::memory_order_relaxed); }
    NodeCounter(const NodeCounter&) = delete;
    NodeCounter& operator=(const NodeCounter&) = delete;

    void tick()
    {
        if (++local_ == kBudgetFlush) {
            const auto total = shared_.fetch_add(local_, std::memory_order_relaxed) + local_;
            local_ = 0;
            if (total > budget_)
                throw BudgetError("node budget of " + std::to_string(budget_) + " exceeded");
        }
    }

  private:
    std::atomic<std::uint64_t>& shared_;
    std::uint64_t budget_;
    std::uint64_t local_ = 0;
};

class MaximalWalker
{
  public:
    MaximalWalker(std::span<const Block> universe, int r, NodeCounter& counter)
        : universe_(universe), r_(r), levels_(r), counter_(counter)
    {
    }

    /// Expands the tree down to kSplitDepth and records the open nodes.
    void split(WalkState& s, int depth, std::vector<WalkState>& frontier)
    {
        if (depth == kSplitDepth || s.candidates.empty()) {
            frontier.push_back(s);
            return;
        }
        counter_.tick();
        branch(s, [&](WalkState& child) { split(child, depth + 1, frontier); });
    }

    template <typename Emit>
    void run(WalkState& s, Emit&& emit)
    {
        for (int c : s.chosen)
            levels_.push(universe_[c]);
        expand(s, emit);
        for (std::size_t i = 0; i < s.chosen.size(); ++i)
            levels_.pop();
    }

  private:
    template <typename Emit>
    void expand(WalkState& s, Emit& emit)
    {
        counter_.tick();
        if (s.candidates.empty()) {
            if (s.excluded.empty())
                emit(std::span<const int>(s.chosen));
            return;
        }
        branch(s, [&](WalkState& child) { expand(child, emit); });
    }

    template <typename Recurse>
    void branch(WalkState& s, Recurse&& recurse)
    {
        for (int x : s.excluded)
            if (!blockable(universe_[x], s.candidates))
                return;

        const int pick = s.candidates.front();
        const Block& picked = universe_[pick];

        {
            levels_.push(picked);
            WalkState child;
            child.chosen = s.chosen;
            child.chosen.push_back(pick);
            for (std::size_t i = 1; i < s.candidates.size(); ++i)
                if (!levels_.conflicts(universe_[s.candidates[i]]))
                    child.candidates.push_back(s.candidates[i]);
            for (int x : s.excluded)
                if (!levels_.conflicts(universe_[x]))
                    child.excluded.push_back(x);
            recurse(child);
            levels_.pop();
        }
        {
            WalkState child;
            child.chosen = s.chosen;
            child.candidates.assign(s.candidates.begin() + 1, s.candidates.end());
            child.excluded = s.excluded;
            child.excluded.push_back(pick);
            recurse(child);
        }
    }

    // Some subcollection of at most r-1 blocks from chosen + candidates has
    // empty intersection with x. Over-approximates what any completion can do.
    bool blockable(const Block& x, const std::vector<int>& candidates) const
    {
        for (int j = 0; j + 1 < r_; ++j)
            for (const auto& a : levels_.level(j))
                if (kills(a & x, candidates, 0, r_ - 1 - j))
                    return true;
        return false;
    }

    bool kills(const Block& running, const std::vector<int>& candidates, std::size_t start, int depth) const
    {
        for (std::size_t i = start; i < candidates.size(); ++i) {
            const Block next = running & universe_[candidates[i]];
            if (next.empty())
                return true;
            if (depth > 1 && kills(next, candidates, i + 1, depth - 1))
                return true;
        }
        return false;
    }

    std::span<const Block> universe_;
    int r_;
    IntersectionLevels levels_;
    NodeCounter& counter_;
};

/**
 * Runs the maximal-family walk, split into subproblems that are processed
 * in parallel. on_family(local, blocks) is called for each maximal family
 * with the Local that belongs to its subproblem; the Locals come back in
 * depth-first order.
 */
template <typename Local, typename OnFamily>
std::vector<Local> walk_maximal(std::span<const Block> universe, int r, const SearchOptions& options,
                                EnumerationStats& stats, OnFamily&& on_family)
{
    if (r < 2)
        throw DomainError("r must be >= 2");
    std::atomic<std::uint64_t> nodes{0};

    std::vector<WalkState> frontier;
    {
        NodeCounter counter(nodes, options.node_budget);
        MaximalWalker walker(universe, r, counter);
        WalkState root;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (!universe[i].empty())
                root.candidates.push_back(static_cast<int>(i));
        walker.split(root, 0, frontier);
    }

    std::vector<Local> locals(frontier.size());
    parallel_for_index(frontier.size(), options.workers, [&](std::size_t i) {
        NodeCounter counter(nodes, options.node_budget);
        MaximalWalker walker(universe, r, counter);
        std::vector<Block> blocks;
        walker.run(frontier[i], [&](std::span<const int> chosen) {
            blocks.clear();
            for (int c : chosen)
                blocks.push_back(universe[c]);
            on_family(locals[i], std::span<const Block>(blocks));
        });
    });

    stats.nodes = nodes.load();
    stats.subproblems = frontier.size();
    if (stats.nodes > options.node_budget)
        throw BudgetError("node budget of " + std::to_string(options.node_budget) + " exceeded");
    return locals;
}

struct SearchLocal
{
    std::uint64_t families = 0;
    bool any = false;
    BigCount best;
    std::uint64_t maximizers = 0;
    bool all_sandwich = true;
    std::vector<Family> kept;
    std::set<Family> classes;
};

void keep_smallest(std::vector<Family>& kept, Family family, std::size_t cap)
{
    auto pos = std::lower_bound(kept.begin(), kept.end(), family);
    if (pos != kept.end() && *pos == family)
        return;
    kept.insert(pos, std::move(family));
    if (kept.size() > cap)
        kept.pop_back();
}

SearchReport run_search(GroundSet ground, std::span<const Block> universe, int r, bool uniform,
                        const SearchOptions& options)
{
    if (options.isomorphism_reduction && ground.size() > 8)
        throw DomainError("isomorphism reduction supports n <= 8 only");

    SearchReport report;
    report.n = ground.size();
    report.r = r;
    report.uniform = uniform;

    auto locals = walk_maximal<SearchLocal>(
        universe, r, options, report.stats, [&](SearchLocal& local, std::span<const Block> blocks) {
            ++local.families;
            Family family(ground, std::vector<Block>(blocks.begin(), blocks.end()));
            const BigCount count = count_r_triangles(family, r + 1);
            if (local.any && count < local.best)
                return;
            if (!local.any || count > local.best) {
                local = SearchLocal{local.families, true, count, 0, true, {}, {}};
            }
            ++local.maximizers;
            const bool sandwich = uniform ? classify_sandwich(family, r).has_value()
                                          : classify_sandwich_nonuniform(family, r).has_value();
            local.all_sandwich = local.all_sandwich && sandwich;
            if (options.isomorphism_reduction)
                local.classes.insert(canonical_form(family));
            else
                keep_smallest(local.kept, std::move(family), options.max_reported);
        });

    bool any = false;
    std::set<Family> classes;
    for (const auto& local : locals) {
        report.families_enumerated += local.families;
        if (!local.any)
            continue;
        if (!any || local.best > report.max_count) {
            any = true;
            report.max_count = local.best;
            report.maximizer_count = 0;
            report.all_maximizers_sandwich = true;
            report.maximizers.clear();
            classes.clear();
        }
        if (local.best == report.max_count) {
            report.maximizer_count += local.maximizers;
            report.all_maximizers_sandwich = report.all_maximizers_sandwich && local.all_sandwich;
            for (const auto& f : local.kept)
                keep_smallest(report.maximizers, f, options.max_reported);
            classes.insert(local.classes.begin(), local.classes.end());
        }
    }
    if (options.isomorphism_reduction) {
        report.isomorphism_classes = classes.size();
        for (const auto& f : classes) {
            if (report.maximizers.size() >= options.max_reported)
                break;
            report.maximizers.push_back(f);
        }
    }
    return report;
}

void check_parameters(int n, int k, int r)
{
    GroundSet ground(n);
    if (r < 2)
        throw DomainError("r must be >= 2");
    if (k < 1 || k > n)
        throw DomainError("need 1 <= k <= n");
}

std::vector<Block> nonempty_subsets(int n)
{
    if (n > 20)
        throw DomainError("non-uniform search supports n <= 20 only");
    std::vector<Block> out;
    const std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        Block b;
        for (int e = 1; e <= n; ++e)
            if ((mask >> (e - 1)) & 1U)
                b.set(e);
        out.push_back(b);
    }
    return out;
}

/// Uniform integer in [0, bound) from a 64-bit engine, by rejection.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

} // namespace

BigCount enumerate_maximal_subfamilies(GroundSet ground, std::span<const Block> universe, int r,
                                       const FamilyVisitor& visitor, const SearchOptions& options,
                                       EnumerationStats* stats)
{
    EnumerationStats local_stats;
    const bool streaming = resolve_workers(options.workers) == 1;
    struct Buffer
    {
        std::uint64_t count = 0;
        std::vector<Family> families;
    };
    auto buffers = walk_maximal<Buffer>(universe, r, options, local_stats,
                                        [&](Buffer& buffer, std::span<const Block> blocks) {
                                            ++buffer.count;
                                            if (!visitor)
                                                return;
                                            Family family(ground, std::vector<Block>(blocks.begin(), blocks.end()));
                                            if (streaming)
                                                visitor(family);
                                            else
                                                buffer.families.push_back(std::move(family));
                                        });
    BigCount total = 0;
    for (const auto& buffer : buffers) {
        total += buffer.count;
        if (!streaming && visitor)
            for (const auto& f : buffer.families)
                visitor(f);
    }
    if (stats != nullptr)
        *stats = local_stats;
    return total;
}

BigCount enumerate_maximal_families(int n, int k, int r, const FamilyVisitor& visitor, const SearchOptions& options,
                                    EnumerationStats* stats)
{
    check_parameters(n, k, r);
    const auto universe = k_subsets(GroundSet(n), k);
    return enumerate_maximal_subfamilies(GroundSet(n), universe, r, visitor, options, stats);
}

SearchReport max_triangle_search(int n, int k, int r, const SearchOptions& options)
{
    check_parameters(n, k, r);
    const auto universe = k_subsets(GroundSet(n), k);
    auto report = run_search(GroundSet(n), universe, r, true, options);
    report.k = k;
    return report;
}

SearchReport nonuniform_max_triangle_search(int n, int r, const SearchOptions& options)
{
    GroundSet ground(n);
    if (r < 2 || r + 1 > n)
        throw DomainError("non-uniform search needs 2 <= r and r+1 <= n");
    const auto universe = nonempty_subsets(n);
    auto report = run_search(ground, universe, r, false, options);
    report.k = 0;
    report.target_count = count_r_triangles(construct_extremal_nonuniform(n, Block::full(r + 1)), r + 1);
    return report;
}

Family random_maximal_family(int n, int k, int r, std::uint64_t seed)
{
    check_parameters(n, k, r);
    auto blocks = k_subsets(GroundSet(n), k);
    std::mt19937_64 rng(seed);
    for (std::size_t i = blocks.size(); i > 1; --i)
        std::swap(blocks[i - 1], blocks[draw_below(rng, i)]);

    IntersectionLevels levels(r);
    std::vector<Block> chosen;
    for (const auto& b : blocks)
        if (!levels.conflicts(b)) {
            levels.push(b);
            chosen.push_back(b);
        }
    return Family(n, std::move(chosen));
}

bool is_maximal_r_wise_intersecting(const Family& family, int r, std::optional<int> k)
{
    if (!is_r_wise_intersecting(family, r))
        return false;
    const auto universe = k ? k_subsets(family.ground(), *k) : nonempty_subsets(family.n());
    std::vector<Block> extended(family.begin(), family.end());
    for (const auto& b : universe) {
        if (family.contains(b))
            continue;
        extended.push_back(b);
        const bool still = is_r_wise_intersecting(Family(family.ground(), extended), r);
        extended.pop_back();
        if (still)
            return false;
    }
    return true;
}

Family relabel(const Family& family, std::span<const int> perm)
{
    const int n = family.n();
    if (static_cast<int>(perm.size()) != n)
        throw DomainError("relabel: permutation has the wrong length");
    Block image;
    for (int v : perm) {
        if (v < 1 || v > n || image.test(v))
            throw DomainError("relabel: not a permutation of 1..n");
        image.set(v);
    }
    std::vector<Block> blocks;
    blocks.reserve(family.size());
    for (const auto& b : family) {
        Block mapped;
        for (int e : b.elements())
            mapped.set(perm[e - 1]);
        blocks.push_back(mapped);
    }
    return Family(family.ground(), std::move(blocks));
}

Family canonical_form(const Family& family)
{
    const int n = family.n();
    if (n > 8)
        throw DomainError("canonical_form: n must be <= 8");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    Family best = family;
    do {
        auto candidate = relabel(family, perm);
        if (candidate < best)
            best = std::move(candidate);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace extri
