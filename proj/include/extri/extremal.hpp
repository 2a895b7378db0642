#ifndef EXTRI_EXTREMAL_HPP
#define EXTRI_EXTREMAL_HPP

#include <optional>

#include "extri/core.hpp"

namespace extri {

enum class ExtremalVariant
{
    Full,     ///< |F & X| >= |X| - 1
    Boundary, ///< |F & X| == |X| - 1
};

/**
 * The k-uniform family of all k-sets meeting X in at least (Full) or
 * exactly (Boundary) |X|-1 elements. Requires X inside [n], |X| >= 2 and
 * |X| - 1 <= k <= n.
 */
Family construct_extremal(int n, int k, const Block& x, ExtremalVariant variant = ExtremalVariant::Full);

/// Non-uniform analogue over all nonempty subsets of [n].
Family construct_extremal_nonuniform(int n, const Block& x, ExtremalVariant variant = ExtremalVariant::Full);

/**
 * Number of (r+1)-triangles in the full extremal family with |X| = r+1,
 * counted exactly by enumeration. X defaults to {1, ..., r+1}; any other
 * (r+1)-set gives the same value.
 */
BigCount n_exact(int n, int k, int r, unsigned workers = 1);
BigCount n_exact(int n, int k, int r, const Block& x, unsigned workers = 1);

/**
 * Lower bounds for the extremal triangle count, all exact:
 *
 *   incl_excl          = C(n-r-1, k-r)^(r+1) - (n-r-1) * C(n-r-2, k-r-1)^(r+1)
 *   half_power_doubled = C(n-r-1, k-r)^(r+1)       (compare with 2 * count)
 *   ratio              = (n-1)^(r+1) / (2 k^(r+1))  as numerator, denominator
 *
 * incl_excl can be negative for small n; the chain is only claimed when
 * n >= k^2, recorded in hypothesis_holds.
 */
struct BoundsTriple
{
    BigCount incl_excl;
    BigCount half_power_doubled;
    BigCount ratio_numerator;
    BigCount ratio_denominator;
    bool hypothesis_holds = false;
};

BoundsTriple prop1_bounds(int n, int k, int r);

/// Outcome of comparing the bounds against an exact count.
struct BoundsVerdict
{
    bool incl_excl_below_exact = false;   ///< incl_excl <= exact
    bool half_power_below_exact = false;  ///< half_power_doubled <= 2 * exact
    bool ratio_below_half_power = false;  ///< 2 * numerator <= half_power_doubled * denominator
    bool all() const { return incl_excl_below_exact && half_power_below_exact && ratio_below_half_power; }
};

BoundsVerdict compare_bounds(const BoundsTriple& bounds, const BigCount& exact);

/// F'_X <= F <= F_X for the k-uniform families over [n].
bool is_sandwiched(const Family& family, const Block& x, int k);
/// Same test against the non-uniform families over 2^[n] minus the empty set.
bool is_sandwiched_nonuniform(const Family& family, const Block& x);

/**
 * Finds an (r+1)-set X with F'_{X,k} <= F <= F_{X,k}. Vertex sets of
 * (r+1)-clique components of the cover graph are tried first, then every
 * (r+1)-subset in canonical order. Throws DomainError if F is not uniform.
 */
std::optional<Block> classify_sandwich(const Family& family, int r);
std::optional<Block> classify_sandwich_nonuniform(const Family& family, int r);

} // namespace extri

#endif // EXTRI_EXTREMAL_HPP
