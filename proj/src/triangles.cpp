#include "extri/triangles.hpp"

#include <algorithm>

#include "extri/parallel.hpp"

namespace extri {

namespace {

class TriangleCounter
{
  public:
    TriangleCounter(std::span<const Block> blocks, int r, const TriangleVisitor* visitor)
        : blocks_(blocks), r_(r), visitor_(visitor), running_(static_cast<std::size_t>(r) + 1),
          leave_out_(static_cast<std::size_t>(r) + 1, std::vector<Block>(static_cast<std::size_t>(r))),
          chosen_(static_cast<std::size_t>(r))
    {
        running_[0] = Block::universe();
    }

    /// Counts triangles whose smallest index is `first`.
    std::uint64_t count_from(std::size_t first)
    {
        count_ = 0;
        if (push(0, first))
            descend(1, first + 1);
        return count_;
    }

  private:
    /// Places block `index` at depth `p`; false if the prefix is dead.
    bool push(int p, std::size_t index)
    {
        const Block& b = blocks_[index];
        chosen_[p] = b;
        auto& next = leave_out_[p + 1];
        const auto& cur = leave_out_[p];
        for (int i = 0; i < p; ++i)
            next[i] = cur[i] & b;
        next[p] = running_[p];
        running_[p + 1] = running_[p] & b;

        if (p + 1 < r_) {
            if (running_[p + 1].empty())
                return false;
            for (int i = 0; i < p; ++i)
                if (next[i].empty())
                    return false;
        }
        return true;
    }

    void descend(int p, std::size_t start)
    {
        if (p == r_ - 1) {
            finish(start);
            return;
        }
        const std::size_t last = blocks_.size() - static_cast<std::size_t>(r_ - p);
        for (std::size_t i = start; i <= last; ++i)
            if (push(p, i))
                descend(p + 1, i + 1);
    }

    // Last position: the new block must miss the running intersection and
    // meet every (r-1)-wise intersection that omits one earlier block.
    void finish(std::size_t start)
    {
        const int p = r_ - 1;
        const Block& running = running_[p];
        const auto& cur = leave_out_[p];
        for (std::size_t i = start; i < blocks_.size(); ++i) {
            const Block& b = blocks_[i];
            if (running.intersects(b))
                continue;
            bool ok = true;
            for (int j = 0; j < p && ok; ++j)
                ok = cur[j].intersects(b);
            if (!ok)
                continue;
            ++count_;
            if (visitor_ != nullptr && *visitor_) {
                chosen_[p] = b;
                (*visitor_)(std::span<const Block>(chosen_));
            }
        }
    }

    std::span<const Block> blocks_;
    int r_;
    const TriangleVisitor* visitor_;
    std::vector<Block> running_;
    std::vector<std::vector<Block>> leave_out_;
    std::vector<Block> chosen_;
    std::uint64_t count_ = 0;
};

} // namespace

bool is_r_triangle(std::span<const Block> blocks)
{
    const std::size_t r = blocks.size();
    if (r < 2)
        throw DomainError("is_r_triangle: need at least two blocks");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (blocks[i] == blocks[j])
                throw DomainError("is_r_triangle: duplicate block " + blocks[i].to_string());

    // prefix[i] = blocks[0..i), suffix[i] = blocks[i..r)
    std::vector<Block> prefix(r + 1, Block::universe()), suffix(r + 1, Block::universe());
    for (std::size_t i = 0; i < r; ++i)
        prefix[i + 1] = prefix[i] & blocks[i];
    for (std::size_t i = r; i-- > 0;)
        suffix[i] = suffix[i + 1] & blocks[i];

    if (!prefix[r].empty())
        return false;
    for (std::size_t i = 0; i < r; ++i)
        if ((prefix[i] & suffix[i + 1]).empty())
            return false;
    return true;
}

BigCount count_r_triangles(const Family& family, int r, const TriangleVisitor& visitor, unsigned workers)
{
    if (r < 2)
        throw DomainError("count_r_triangles: r must be >= 2");
    const auto blocks = family.blocks();
    const auto size = static_cast<std::size_t>(r);
    if (blocks.size() < size)
        return 0;
    const std::size_t firsts = blocks.size() - size + 1;

    if (visitor) {
        TriangleCounter counter(blocks, r, &visitor);
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < firsts; ++i)
            total += counter.count_from(i);
        return total;
    }

    std::vector<std::uint64_t> partial(firsts, 0);
    parallel_for_index(firsts, workers, [&](std::size_t i) {
        TriangleCounter counter(blocks, r, nullptr);
        partial[i] = counter.count_from(i);
    });
    BigCount total = 0;
    for (auto c : partial)
        total += c;
    return total;
}

BigCount count_triangles(const Family& family, const TriangleSpec& spec, unsigned workers)
{
    if (spec.k && !family.empty() && family.uniformity() != *spec.k)
        throw DomainError("count_triangles: family is not " + std::to_string(*spec.k) + "-uniform");
    return count_r_triangles(family, spec.r, {}, workers);
}

} // namespace extri
