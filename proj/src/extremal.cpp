#include "extri/extremal.hpp"

#include "extri/covers.hpp"
#include "extri/triangles.hpp"

namespace extri {

namespace {

void validate_x(int n, const Block& x)
{
    GroundSet ground(n);
    if (x.max_element() > n)
        throw DomainError("X = " + x.to_string() + " is not a subset of [" + std::to_string(n) + "]");
    if (x.size() < 2)
        throw DomainError("X must have at least two elements");
}

bool keep(const Block& b, const Block& x, ExtremalVariant variant)
{
    const int meet = (b & x).size();
    const int need = x.size() - 1;
    return variant == ExtremalVariant::Full ? meet >= need : meet == need;
}

template <typename Accept>
std::optional<Block> find_sandwich(const Family& family, int r, Accept&& accept)
{
    const int n = family.n();
    if (r < 2)
        throw DomainError("classify_sandwich: r must be >= 2");
    if (r + 1 > n)
        return std::nullopt;

    const auto graph = cover_graph_analysis(family);
    for (const auto& comp : graph.components)
        if (static_cast<int>(comp.size()) == r + 1) {
            const auto x = Block::from_elements(comp);
            if (accept(x))
                return x;
        }

    std::optional<Block> found;
    for_each_combination(n, r + 1, [&](std::span<const int> idx) {
        if (found)
            return;
        Block x;
        for (int i : idx)
            x.set(i + 1);
        if (accept(x))
            found = x;
    });
    return found;
}

} // namespace

Family construct_extremal(int n, int k, const Block& x, ExtremalVariant variant)
{
    validate_x(n, x);
    if (k < x.size() - 1 || k > n)
        throw DomainError("construct_extremal: need |X|-1 <= k <= n");
    std::vector<Block> blocks;
    enumerate_k_subsets(GroundSet(n), k, [&](const Block& b) {
        if (keep(b, x, variant))
            blocks.push_back(b);
    });
    return Family(n, std::move(blocks));
}

Family construct_extremal_nonuniform(int n, const Block& x, ExtremalVariant variant)
{
    validate_x(n, x);
    if (n > 24)
        throw DomainError("construct_extremal_nonuniform: n too large to materialize 2^n sets");
    std::vector<Block> blocks;
    for (int k = 1; k <= n; ++k)
        enumerate_k_subsets(GroundSet(n), k, [&](const Block& b) {
            if (keep(b, x, variant))
                blocks.push_back(b);
        });
    return Family(n, std::move(blocks));
}

BigCount n_exact(int n, int k, int r, unsigned workers)
{
    if (r < 2 || r + 1 > n)
        throw DomainError("n_exact: need 2 <= r and r+1 <= n");
    return n_exact(n, k, r, Block::full(r + 1), workers);
}

BigCount n_exact(int n, int k, int r, const Block& x, unsigned workers)
{
    if (r < 2 || k < r)
        throw DomainError("n_exact: need 2 <= r <= k");
    if (x.size() != r + 1)
        throw DomainError("n_exact: |X| must be r+1");
    const auto family = construct_extremal(n, k, x, ExtremalVariant::Full);
    return count_r_triangles(family, r + 1, {}, workers);
}

BoundsTriple prop1_bounds(int n, int k, int r)
{
    if (r < 2 || r > k)
        throw DomainError("prop1_bounds: need 2 <= r <= k");
    if (n < 1)
        throw DomainError("prop1_bounds: n must be positive");
    const auto exp = static_cast<unsigned>(r + 1);
    BoundsTriple out;
    out.half_power_doubled = power(binomial(n - r - 1, k - r), exp);
    out.incl_excl = out.half_power_doubled - BigCount(n - r - 1) * power(binomial(n - r - 2, k - r - 1), exp);
    out.ratio_numerator = power(BigCount(n - 1), exp);
    out.ratio_denominator = 2 * power(BigCount(k), exp);
    out.hypothesis_holds = static_cast<long long>(n) >= static_cast<long long>(k) * k;
    return out;
}

BoundsVerdict compare_bounds(const BoundsTriple& bounds, const BigCount& exact)
{
    BoundsVerdict v;
    v.incl_excl_below_exact = bounds.incl_excl <= exact;
    v.half_power_below_exact = bounds.half_power_doubled <= 2 * exact;
    // (1/2) H >= N / D  <=>  H * D >= 2 N
    v.ratio_below_half_power = 2 * bounds.ratio_numerator <= bounds.half_power_doubled * bounds.ratio_denominator;
    return v;
}

bool is_sandwiched(const Family& family, const Block& x, int k)
{
    const int n = family.n();
    const int r = x.size() - 1;
    if (x.max_element() > n || r < 1)
        return false;
    BigCount boundary = 0;
    for (const auto& b : family) {
        if (b.size() != k)
            return false;
        const int meet = (b & x).size();
        if (meet < r)
            return false;
        if (meet == r)
            ++boundary;
    }
    // the family's boundary blocks are distinct members of F'_X, so equal
    // counts means F'_X is contained in F
    return boundary == BigCount(r + 1) * binomial(n - r - 1, k - r);
}

bool is_sandwiched_nonuniform(const Family& family, const Block& x)
{
    const int n = family.n();
    const int r = x.size() - 1;
    if (x.max_element() > n || r < 1)
        return false;
    BigCount boundary = 0;
    for (const auto& b : family) {
        const int meet = (b & x).size();
        if (meet < r)
            return false;
        if (meet == r)
            ++boundary;
    }
    // drop one element of X, then any subset of the other n-r-1 elements;
    // every such set is nonempty because r >= 1
    return boundary == BigCount(r + 1) * power(BigCount(2), static_cast<unsigned>(n - r - 1));
}

std::optional<Block> classify_sandwich(const Family& family, int r)
{
    if (family.empty())
        return std::nullopt;
    const int k = family.uniformity();
    if (k < 0)
        throw DomainError("classify_sandwich: family is not uniform");
    return find_sandwich(family, r, [&](const Block& x) { return is_sandwiched(family, x, k); });
}

std::optional<Block> classify_sandwich_nonuniform(const Family& family, int r)
{
    if (family.empty())
        return std::nullopt;
    return find_sandwich(family, r, [&](const Block& x) { return is_sandwiched_nonuniform(family, x); });
}

} // namespace extri
