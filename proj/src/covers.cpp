#include "extri/covers.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace extri {

namespace {

Block support_of(const Family& family)
{
    Block s;
    for (const auto& b : family)
        s |= b;
    return s;
}

class CoverSearch
{
  public:
    explicit CoverSearch(std::span<const Block> blocks) : blocks_(blocks) {}

    /// Smallest canonical cover of exactly `size` elements, if any exists.
    std::optional<Block> search(int size)
    {
        best_.reset();
        extend(Block{}, size);
        return best_;
    }

  private:
    // Greedy packing of pairwise disjoint uncovered blocks; each needs its
    // own cover element.
    int packing_bound(const Block& chosen, int limit) const
    {
        Block used;
        int packed = 0;
        for (const auto& b : blocks_) {
            if (b.intersects(chosen) || b.intersects(used))
                continue;
            used |= b;
            if (++packed > limit)
                break;
        }
        return packed;
    }

    void extend(const Block& chosen, int remaining)
    {
        const Block* target = nullptr;
        for (const auto& b : blocks_)
            if (!b.intersects(chosen) && (target == nullptr || b.size() < target->size()))
                target = &b;
        if (target == nullptr) {
            if (remaining == 0 && (!best_ || chosen < *best_))
                best_ = chosen;
            return;
        }
        if (remaining == 0 || packing_bound(chosen, remaining) > remaining)
            return;
        for (int e : target->elements()) {
            Block next = chosen;
            next.set(e);
            extend(next, remaining - 1);
        }
    }

    std::span<const Block> blocks_;
    std::optional<Block> best_;
};

} // namespace

bool is_cover(const Block& cover, const Family& family)
{
    return std::all_of(family.begin(), family.end(), [&](const Block& b) { return b.intersects(cover); });
}

CoverCertificate covering_number(const Family& family, CoverMethod method)
{
    if (family.empty())
        throw DomainError("covering_number: family is empty");
    for (const auto& b : family)
        if (b.empty())
            throw DomainError("covering_number: family contains the empty block");

    CoverCertificate cert;
    cert.method = method;

    // A minimum cover uses only elements that occur in some block, and any
    // set of one element per block covers, so tau <= min(|support|, |F|).
    const auto support = support_of(family).elements();
    const int upper = static_cast<int>(std::min(support.size(), family.size()));

    if (method == CoverMethod::Exhaustive) {
        for (int t = 1; t <= upper; ++t) {
            std::optional<Block> found;
            for_each_combination(static_cast<int>(support.size()), t, [&](std::span<const int> idx) {
                if (found)
                    return;
                Block candidate;
                for (int i : idx)
                    candidate.set(support[i]);
                if (is_cover(candidate, family))
                    found = candidate;
            });
            if (found) {
                cert.tau = t;
                cert.witness = *found;
                return cert;
            }
        }
    } else {
        CoverSearch search(family.blocks());
        for (int t = 1; t <= upper; ++t)
            if (auto found = search.search(t)) {
                cert.tau = t;
                cert.witness = *found;
                return cert;
            }
    }
    throw DomainError("covering_number: no cover found"); // unreachable for valid input
}

std::vector<Block> minimal_covers(const Family& family, int max_size)
{
    if (max_size < 1)
        throw DomainError("minimal_covers: max_size must be >= 1");
    std::vector<Block> out;
    if (family.empty())
        return out; // the empty set is the only minimal cover
    const auto support = support_of(family).elements();
    const int universe = static_cast<int>(support.size());
    for (int size = 1; size <= std::min(max_size, universe); ++size) {
        for_each_combination(universe, size, [&](std::span<const int> idx) {
            Block candidate;
            for (int i : idx)
                candidate.set(support[i]);
            if (!is_cover(candidate, family))
                return;
            // covers are closed upward, so checking one-element deletions suffices
            for (int i : idx) {
                Block smaller = candidate;
                smaller.reset(support[i]);
                if (is_cover(smaller, family))
                    return;
            }
            out.push_back(candidate);
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

void derive_graph_structure(CoverGraphReport& report)
{
    const int n = report.n;
    std::vector<std::vector<bool>> adj(n + 1, std::vector<bool>(n + 1, false));
    std::vector<int> degree(n + 1, 0);
    for (auto [a, b] : report.edges) {
        adj[a][b] = adj[b][a] = true;
        ++degree[a];
        ++degree[b];
    }

    report.max_degree = n > 0 ? *std::max_element(degree.begin(), degree.end()) : 0;

    report.has_induced_p3 = false;
    for (int c = 1; c <= n && !report.has_induced_p3; ++c)
        for (int x = 1; x <= n && !report.has_induced_p3; ++x)
            for (int y = x + 1; y <= n; ++y)
                if (adj[c][x] && adj[c][y] && !adj[x][y]) {
                    report.has_induced_p3 = true;
                    break;
                }

    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [a, b] : report.edges)
        parent[find(a)] = find(b);

    report.components.clear();
    std::vector<int> slot(n + 1, -1);
    for (int v = 1; v <= n; ++v) {
        if (degree[v] == 0)
            continue;
        const int root = find(v);
        if (slot[root] < 0) {
            slot[root] = static_cast<int>(report.components.size());
            report.components.emplace_back();
        }
        report.components[slot[root]].push_back(v);
    }

    report.all_components_cliques = true;
    report.clique_sizes.clear();
    for (const auto& comp : report.components) {
        bool clique = true;
        for (std::size_t i = 0; i < comp.size() && clique; ++i)
            for (std::size_t j = i + 1; j < comp.size(); ++j)
                if (!adj[comp[i]][comp[j]]) {
                    clique = false;
                    break;
                }
        if (clique)
            report.clique_sizes.push_back(static_cast<int>(comp.size()));
        else
            report.all_components_cliques = false;
    }
}

CoverGraphReport cover_graph_analysis(const Family& family)
{
    CoverGraphReport report;
    report.n = family.n();
    const auto vertices = support_of(family).elements();

    for (int v : vertices)
        if (is_cover(Block{v}, family))
            report.singleton_covers.push_back(v);

    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (is_cover(Block{vertices[i], vertices[j]}, family))
                report.edges.emplace_back(vertices[i], vertices[j]);

    derive_graph_structure(report);
    return report;
}

} // namespace extri
