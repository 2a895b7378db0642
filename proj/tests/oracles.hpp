// Brute-force reference implementations used only by the tests. None of
// these share code paths with the library beyond the Block/Family types.
#ifndef EXTRI_TESTS_ORACLES_HPP
#define EXTRI_TESTS_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "extri/core.hpp"

namespace oracle {

using extri::BigCount;
using extri::Block;
using extri::Family;

/// Pascal's triangle up to row `rows`.
inline std::vector<std::vector<BigCount>> pascal(int rows)
{
    std::vector<std::vector<BigCount>> t(rows + 1);
    for (int n = 0; n <= rows; ++n) {
        t[n].assign(n + 1, 1);
        for (int k = 1; k < n; ++k)
            t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
}

inline BigCount pascal_binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    return pascal(n)[n][k];
}

/// Every size-m index subset of [0, count), by plain recursion.
inline void subsets_of_size(int count, int m, const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == m) {
            fn(cur);
            return;
        }
        for (int i = start; i < count; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

inline Block intersect_all(const std::vector<Block>& blocks)
{
    Block acc = Block::universe();
    for (const auto& b : blocks)
        acc = acc & b;
    return acc;
}

/// Triangle test straight from the definition: every (r-1)-subcollection
/// recomputed from scratch.
inline bool naive_is_triangle(const std::vector<Block>& t)
{
    if (!intersect_all(t).empty())
        return false;
    for (std::size_t skip = 0; skip < t.size(); ++skip) {
        std::vector<Block> rest;
        for (std::size_t j = 0; j < t.size(); ++j)
            if (j != skip)
                rest.push_back(t[j]);
        if (intersect_all(rest).empty())
            return false;
    }
    return true;
}

inline std::uint64_t naive_count_triangles(const Family& f, int r)
{
    std::uint64_t count = 0;
    subsets_of_size(static_cast<int>(f.size()), r, [&](const std::vector<int>& idx) {
        std::vector<Block> t;
        for (int i : idx)
            t.push_back(f[i]);
        count += naive_is_triangle(t) ? 1 : 0;
    });
    return count;
}

/// r-wise intersecting by checking every subcollection of size 1..min(r, |F|).
inline bool naive_r_wise(const std::vector<Block>& blocks, int r)
{
    const int top = std::min<int>(r, static_cast<int>(blocks.size()));
    for (int m = 1; m <= top; ++m) {
        bool ok = true;
        subsets_of_size(static_cast<int>(blocks.size()), m, [&](const std::vector<int>& idx) {
            if (!ok)
                return;
            std::vector<Block> sub;
            for (int i : idx)
                sub.push_back(blocks[i]);
            ok = !intersect_all(sub).empty();
        });
        if (!ok)
            return false;
    }
    return true;
}

/// All k-subsets of [n] by recursion, sorted ascending.
inline std::vector<Block> all_k_sets(int n, int k)
{
    std::vector<Block> out;
    subsets_of_size(n, k, [&](const std::vector<int>& idx) {
        Block b;
        for (int i : idx)
            b.set(i + 1);
        out.push_back(b);
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// Maximal r-wise intersecting subfamilies of `universe`, over all 2^N masks.
inline std::vector<std::vector<Block>> brute_maximal_families(const std::vector<Block>& universe, int r)
{
    const int n = static_cast<int>(universe.size());
    std::vector<std::vector<Block>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Block> fam;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1U)
                fam.push_back(universe[i]);
        if (!naive_r_wise(fam, r))
            continue;
        bool maximal = true;
        for (int i = 0; i < n && maximal; ++i) {
            if ((mask >> i) & 1U)
                continue;
            fam.push_back(universe[i]);
            maximal = !naive_r_wise(fam, r);
            fam.pop_back();
        }
        if (maximal)
            out.push_back(fam);
    }
    return out;
}

/// Maximal intersecting families as maximal cliques of the "intersects"
/// graph, by Bron-Kerbosch with pivoting.
inline std::vector<std::vector<Block>> bron_kerbosch_intersecting(const std::vector<Block>& universe)
{
    const int n = static_cast<int>(universe.size());
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            adj[i][j] = i != j && universe[i].intersects(universe[j]);
    std::vector<std::vector<Block>> out;
    std::function<void(std::vector<int>&, std::vector<int>, std::vector<int>)> rec =
        [&](std::vector<int>& clique, std::vector<int> p, std::vector<int> x) {
            if (p.empty() && x.empty()) {
                std::vector<Block> fam;
                for (int i : clique)
                    fam.push_back(universe[i]);
                std::sort(fam.begin(), fam.end());
                out.push_back(fam);
                return;
            }
            int pivot = p.empty() ? x.front() : p.front();
            std::vector<int> todo;
            for (int v : p)
                if (!adj[pivot][v])
                    todo.push_back(v);
            for (int v : todo) {
                std::vector<int> np, nx;
                for (int u : p)
                    if (adj[v][u])
                        np.push_back(u);
                for (int u : x)
                    if (adj[v][u])
                        nx.push_back(u);
                clique.push_back(v);
                rec(clique, np, nx);
                clique.pop_back();
                p.erase(std::find(p.begin(), p.end(), v));
                x.push_back(v);
            }
        };
    std::vector<int> clique, p;
    for (int i = 0; i < n; ++i)
        if (!universe[i].empty())
            p.push_back(i);
    rec(clique, p, {});
    return out;
}

/// Minimum hitting set size over all subsets of the support (support <= 24).
inline int brute_covering_number(const Family& f)
{
    Block support;
    for (const auto& b : f)
        support = support | b;
    const auto elems = support.elements();
    const int m = static_cast<int>(elems.size());
    int best = m + 1;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
        const int size = std::popcount(mask);
        if (size >= best)
            continue;
        Block s;
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1U)
                s.set(elems[i]);
        bool covers = true;
        for (const auto& b : f)
            if (!b.intersects(s)) {
                covers = false;
                break;
            }
        if (covers)
            best = size;
    }
    return best;
}

/// Degree maximum over every m-subset of [n], scanned in ascending order.
inline std::pair<std::uint64_t, Block> brute_max_degree(const Family& f, int m)
{
    std::uint64_t best = 0;
    Block witness;
    bool first = true;
    for (const auto& s : all_k_sets(f.n(), m)) {
        std::uint64_t d = 0;
        for (const auto& b : f)
            d += s.subset_of(b) ? 1 : 0;
        if (first || d > best) {
            best = d;
            witness = s;
            first = false;
        }
    }
    return {best, witness};
}

/// Seeded random family: `size` distinct random blocks with element
/// probability p over [n].
inline Family random_family(int n, int size, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Block> blocks;
    for (int attempt = 0; attempt < 50 * size && static_cast<int>(blocks.size()) < size; ++attempt) {
        Block b;
        for (int e = 1; e <= n; ++e)
            if (coin(rng))
                b.set(e);
        if (b.empty() || std::find(blocks.begin(), blocks.end(), b) != blocks.end())
            continue;
        blocks.push_back(b);
    }
    return Family(n, blocks);
}

} // namespace oracle

#endif // EXTRI_TESTS_ORACLES_HPP
