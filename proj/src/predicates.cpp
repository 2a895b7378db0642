#include "extri/predicates.hpp"

#include <map>

namespace extri {

namespace {

/// Depth-first search over distinct subcollections of size <= depth; true
/// as soon as one has an empty running intersection.
bool has_empty_subcollection(std::span<const Block> blocks, std::size_t start, const Block& running, int depth)
{
    if (depth == 0)
        return false;
    for (std::size_t i = start; i < blocks.size(); ++i) {
        const Block next = running & blocks[i];
        if (next.empty())
            return true;
        if (has_empty_subcollection(blocks, i + 1, next, depth - 1))
            return true;
    }
    return false;
}

bool transversal_below(std::span<const Family> families, std::size_t level, const Block& running, int t)
{
    if (level == families.size())
        return false;
    for (const auto& b : families[level]) {
        const Block next = running & b;
        if (next.size() < t)
            return true;
        if (transversal_below(families, level + 1, next, t))
            return true;
    }
    return false;
}

} // namespace

Block common_intersection(std::span<const Block> blocks, GroundSet ground)
{
    Block out = Block::full(ground.size());
    for (const auto& b : blocks)
        out &= b;
    return out;
}

bool is_r_wise_intersecting(const Family& family, int r)
{
    if (r < 2)
        throw DomainError("is_r_wise_intersecting: r must be >= 2");
    return !has_empty_subcollection(family.blocks(), 0, Block::universe(), r);
}

bool is_t_intersecting(const Family& family, int t)
{
    if (t < 1)
        throw DomainError("is_t_intersecting: t must be >= 1");
    const auto blocks = family.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            if ((blocks[i] & blocks[j]).size() < t)
                return false;
    return true;
}

bool is_cross_t_intersecting(std::span<const Family> families, int t)
{
    if (t < 1)
        throw DomainError("is_cross_t_intersecting: t must be >= 1");
    if (families.empty())
        throw DomainError("is_cross_t_intersecting: need at least one family");
    for (const auto& f : families) {
        if (f.empty())
            throw DomainError("is_cross_t_intersecting: member family is empty");
        if (f.ground() != families.front().ground())
            throw DomainError("is_cross_t_intersecting: families over different ground sets");
    }
    return !transversal_below(families, 0, Block::universe(), t);
}

DegreeProfile max_degree(const Family& family, int m)
{
    if (m < 0 || m > family.n())
        throw DomainError("max_degree: need 0 <= m <= n");
    DegreeProfile profile;
    profile.m = m;
    if (m == 0) {
        profile.max_degree = family.size();
        return profile;
    }

    // Only m-subsets of some block have positive degree.
    std::map<Block, std::uint64_t> degree;
    for (const auto& b : family) {
        const auto elems = b.elements();
        for_each_combination(static_cast<int>(elems.size()), m, [&](std::span<const int> idx) {
            Block s;
            for (int i : idx)
                s.set(elems[i]);
            ++degree[s];
        });
    }

    std::uint64_t best = 0;
    Block witness;
    for (const auto& [s, d] : degree)
        if (d > best) {
            best = d;
            witness = s;
        }
    if (best == 0)
        witness = Block::full(m);
    profile.max_degree = best;
    profile.witness = witness;
    return profile;
}

} // namespace extri
