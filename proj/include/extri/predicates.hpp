#ifndef EXTRI_PREDICATES_HPP
#define EXTRI_PREDICATES_HPP

#include <span>

#include "extri/core.hpp"

namespace extri {

/// Intersection of all blocks; the empty list yields the full ground set.
Block common_intersection(std::span<const Block> blocks, GroundSet ground);

/**
 * True iff every min(r, |F|) distinct blocks share an element. Repeated
 * blocks in a subcollection never make the intersection smaller, so only
 * distinct subcollections are enumerated. The empty family is vacuously
 * r-wise intersecting; a single block passes iff it is nonempty.
 */
bool is_r_wise_intersecting(const Family& family, int r);

inline bool is_intersecting(const Family& family) { return is_r_wise_intersecting(family, 2); }

/// Every pair of distinct blocks meets in at least t elements.
bool is_t_intersecting(const Family& family, int t);

/**
 * Every transversal (one block from each family) has a common intersection
 * of at least t elements. Throws DomainError if any family is empty.
 */
bool is_cross_t_intersecting(std::span<const Family> families, int t);

/// Largest degree d(S) = |{F : S subset of F}| over m-subsets S.
struct DegreeProfile
{
    int m = 0;
    BigCount max_degree;
    /// Canonically smallest m-set attaining max_degree.
    Block witness;
};

DegreeProfile max_degree(const Family& family, int m);

} // namespace extri

#endif // EXTRI_PREDICATES_HPP
