#ifndef EXTRI_TRIANGLES_HPP
#define EXTRI_TRIANGLES_HPP

#include <functional>
#include <optional>
#include <span>

#include "extri/core.hpp"

namespace extri {

/// Which triangles to count: collection size r, optionally k-uniform only.
struct TriangleSpec
{
    int r = 3;
    std::optional<int> k;
};

/**
 * An r-triangle is r distinct blocks whose full intersection is empty while
 * every r-1 of them still share an element. For r = 2 this is a disjoint
 * pair. Throws DomainError on fewer than two blocks or on duplicates.
 */
bool is_r_triangle(std::span<const Block> blocks);

using TriangleVisitor = std::function<void(std::span<const Block>)>;

/**
 * Exact number of r-triangles among the blocks of `family`.
 *
 * Index tuples are enumerated in lexicographic order with a vector of
 * leave-one-out intersections carried down the tree; any prefix of at most
 * r-1 blocks whose intersection (or one of whose leave-one-out
 * intersections) is empty is cut, since it sits inside an (r-1)-subcollection
 * of every completion. With a visitor the count runs sequentially and reports
 * triangles in canonical order; otherwise the first index is split across
 * `workers` threads (0 = hardware concurrency).
 */
BigCount count_r_triangles(const Family& family, int r, const TriangleVisitor& visitor = {}, unsigned workers = 1);

/// Counts spec.r-triangles; if spec.k is set the family must be k-uniform.
BigCount count_triangles(const Family& family, const TriangleSpec& spec, unsigned workers = 1);

} // namespace extri

#endif // EXTRI_TRIANGLES_HPP
