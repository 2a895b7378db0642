#include "extri/core.hpp"

#include <algorithm>

namespace extri {

GroundSet::GroundSet(int n) : n_(n)
{
    if (n < 1 || n > kMaxWidth)
        throw DomainError("ground set size must be in 1.." + std::to_string(kMaxWidth) + ", got " +
                          std::to_string(n));
}

Block::Block(std::initializer_list<int> elements)
{
    for (int e : elements)
        set(e);
}

Block Block::from_elements(std::span<const int> elements)
{
    Block b;
    for (int e : elements)
        b.set(e);
    return b;
}

Block Block::full(int n)
{
    if (n < 0 || n > kMaxWidth)
        throw DomainError("Block::full: width out of range: " + std::to_string(n));
    Block b;
    for (int e = 1; e <= n; ++e)
        b.set(e);
    return b;
}

bool Block::test(int element) const
{
    if (element < 1 || element > kMaxWidth)
        return false;
    const int bit = element - 1;
    return (words_[bit / kWordBits] >> (bit % kWordBits)) & 1U;
}

void Block::set(int element)
{
    if (element < 1 || element > kMaxWidth)
        throw DomainError("element out of range: " + std::to_string(element));
    const int bit = element - 1;
    words_[bit / kWordBits] |= Word{1} << (bit % kWordBits);
}

void Block::reset(int element)
{
    if (element < 1 || element > kMaxWidth)
        return;
    const int bit = element - 1;
    words_[bit / kWordBits] &= ~(Word{1} << (bit % kWordBits));
}

int Block::max_element() const noexcept
{
    for (int i = kWords - 1; i >= 0; --i)
        if (words_[i] != 0)
            return i * kWordBits + (kWordBits - std::countl_zero(words_[i]));
    return 0;
}

std::vector<int> Block::elements() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int i = 0; i < kWords; ++i) {
        Word w = words_[i];
        while (w != 0) {
            out.push_back(i * kWordBits + std::countr_zero(w) + 1);
            w &= w - 1;
        }
    }
    return out;
}

std::string Block::to_string() const
{
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
        if (!first)
            s += ',';
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

std::vector<Block> canonicalize(std::vector<Block> blocks)
{
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    return blocks;
}

Family::Family(GroundSet ground, std::vector<Block> blocks) : ground_(ground), blocks_(canonicalize(std::move(blocks)))
{
    for (const auto& b : blocks_)
        if (b.max_element() > ground_.size())
            throw DomainError("block " + b.to_string() + " lies outside [" + std::to_string(ground_.size()) + "]");
}

Family Family::k_uniform(GroundSet ground, std::vector<Block> blocks, int k)
{
    for (const auto& b : blocks)
        if (b.size() != k)
            throw DomainError("block " + b.to_string() + " is not a " + std::to_string(k) + "-set");
    return Family(ground, std::move(blocks));
}

bool Family::contains(const Block& b) const
{
    return std::binary_search(blocks_.begin(), blocks_.end(), b);
}

int Family::uniformity() const noexcept
{
    if (blocks_.empty())
        return -1;
    const int k = blocks_.front().size();
    for (const auto& b : blocks_)
        if (b.size() != k)
            return -1;
    return k;
}

BigCount binomial(long long n, long long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigCount result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigCount power(const BigCount& base, unsigned exp)
{
    return boost::multiprecision::pow(base, exp);
}

std::vector<Block> k_subsets(GroundSet ground, int k)
{
    std::vector<Block> out;
    enumerate_k_subsets(ground, k, [&](const Block& b) { out.push_back(b); });
    return out;
}

} // namespace extri
