#ifndef EXTRI_COVERS_HPP
#define EXTRI_COVERS_HPP

#include <utility>
#include <vector>

#include "extri/core.hpp"

namespace extri {

enum class CoverMethod
{
    Exhaustive,
    BranchAndBound,
};

/// tau(F) together with a minimum cover. The witness is the canonically
/// smallest cover of size tau.
struct CoverCertificate
{
    int tau = 0;
    Block witness;
    CoverMethod method = CoverMethod::BranchAndBound;
};

/// S meets every block (vacuously true for the empty family).
bool is_cover(const Block& cover, const Family& family);

/**
 * Covering number with a minimum witness. Branch and bound picks the
 * smallest uncovered block and branches on its elements, under iterative
 * deepening on the cover size; a disjoint-packing lower bound cuts early.
 * Throws DomainError on an empty family or an empty block.
 */
CoverCertificate covering_number(const Family& family, CoverMethod method = CoverMethod::BranchAndBound);

/// All inclusion-minimal covers of size 1..max_size, canonical order.
std::vector<Block> minimal_covers(const Family& family, int max_size);

/**
 * The graph G on [n] whose edges are the 2-element covers, plus singleton
 * covers and the structure flags that drive the tau = 2 analysis.
 * Only vertices with at least one edge appear in `components`.
 */
struct CoverGraphReport
{
    int n = 0;
    std::vector<int> singleton_covers;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> components;
    bool has_induced_p3 = false;
    int max_degree = 0;
    bool all_components_cliques = true;
    /// Sizes of the components that are cliques, in component order.
    std::vector<int> clique_sizes;

    friend bool operator==(const CoverGraphReport&, const CoverGraphReport&) = default;
};

CoverGraphReport cover_graph_analysis(const Family& family);

/// Recomputes components and flags of `report` from its edge list.
void derive_graph_structure(CoverGraphReport& report);

} // namespace extri

#endif // EXTRI_COVERS_HPP
