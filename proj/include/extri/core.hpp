#ifndef EXTRI_CORE_HPP
#define EXTRI_CORE_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace extri {

/// Exact arbitrary-precision integer used for every count and bound.
using BigCount = boost::multiprecision::cpp_int;

/// Raised when an operation is called outside its domain.
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

/// Raised when an enumeration exceeds its configured node budget.
class BudgetError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Widest supported ground set (two machine words).
inline constexpr int kMaxWidth = 128;

/// The ground set [n] = {1, ..., n}.
class GroundSet
{
  public:
    explicit GroundSet(int n);

    int size() const noexcept { return n_; }
    bool contains(int element) const noexcept { return element >= 1 && element <= n_; }

    friend bool operator==(const GroundSet&, const GroundSet&) = default;

  private:
    int n_;
};

/**
 * A subset of [n] stored as a fixed 128-bit vector.
 *
 * Elements are 1-based at the interface; element i lives at bit i-1.
 * Blocks order by the integer value of their bit vector, which for
 * equal-size blocks is colexicographic order of the element lists.
 */
class Block
{
  public:
    using Word = std::uint64_t;
    static constexpr int kWordBits = 64;
    static constexpr int kWords = kMaxWidth / kWordBits;

    constexpr Block() = default;
    Block(std::initializer_list<int> elements);

    static Block from_elements(std::span<const int> elements);
    /// The block {1, ..., n}.
    static Block full(int n);
    /// All-ones over the whole 128-bit width; identity for intersection.
    static constexpr Block universe()
    {
        Block b;
        b.words_.fill(~Word{0});
        return b;
    }

    bool test(int element) const;
    void set(int element);
    void reset(int element);

    int size() const noexcept
    {
        int total = 0;
        for (auto w : words_)
            total += std::popcount(w);
        return total;
    }
    bool empty() const noexcept
    {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }
    /// Largest element, or 0 for the empty block.
    int max_element() const noexcept;

    std::vector<int> elements() const;
    std::string to_string() const;

    bool intersects(const Block& other) const noexcept { return !(*this & other).empty(); }
    bool subset_of(const Block& other) const noexcept { return (*this & other) == *this; }

    Block& operator&=(const Block& o) noexcept
    {
        for (int i = 0; i < kWords; ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    Block& operator|=(const Block& o) noexcept
    {
        for (int i = 0; i < kWords; ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference.
    Block& operator-=(const Block& o) noexcept
    {
        for (int i = 0; i < kWords; ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }
    friend Block operator&(Block a, const Block& b) noexcept { return a &= b; }
    friend Block operator|(Block a, const Block& b) noexcept { return a |= b; }
    friend Block operator-(Block a, const Block& b) noexcept { return a -= b; }

    friend bool operator==(const Block&, const Block&) = default;
    friend std::strong_ordering operator<=>(const Block& a, const Block& b) noexcept
    {
        for (int i = kWords - 1; i >= 0; --i)
            if (auto c = a.words_[i] <=> b.words_[i]; c != 0)
                return c;
        return std::strong_ordering::equal;
    }

    std::size_t hash() const noexcept
    {
        return static_cast<std::size_t>(words_[0] * 0x9E3779B97F4A7C15ULL ^ (words_[1] + 0x632BE59BD9B4E019ULL));
    }

  private:
    std::array<Word, kWords> words_{};
};

struct BlockHash
{
    std::size_t operator()(const Block& b) const noexcept { return b.hash(); }
};

/// Sorts ascending and removes duplicates.
std::vector<Block> canonicalize(std::vector<Block> blocks);

/**
 * An ordered, deduplicated collection of blocks over a shared ground set.
 * Construction canonicalizes; every block must lie inside [n].
 */
class Family
{
  public:
    explicit Family(GroundSet ground, std::vector<Block> blocks = {});
    Family(int n, std::vector<Block> blocks) : Family(GroundSet(n), std::move(blocks)) {}

    /// Like the constructor, but rejects any block whose size is not k.
    static Family k_uniform(GroundSet ground, std::vector<Block> blocks, int k);

    GroundSet ground() const noexcept { return ground_; }
    int n() const noexcept { return ground_.size(); }

    std::span<const Block> blocks() const noexcept { return blocks_; }
    std::size_t size() const noexcept { return blocks_.size(); }
    bool empty() const noexcept { return blocks_.empty(); }
    const Block& operator[](std::size_t i) const { return blocks_[i]; }
    auto begin() const noexcept { return blocks_.begin(); }
    auto end() const noexcept { return blocks_.end(); }

    bool contains(const Block& b) const;
    /// Common block size, or -1 when the family is empty or mixed.
    int uniformity() const noexcept;

    friend bool operator==(const Family& a, const Family& b)
    {
        return a.ground_ == b.ground_ && a.blocks_ == b.blocks_;
    }
    /// Lexicographic on the block sequence; used to order search output.
    friend std::strong_ordering operator<=>(const Family& a, const Family& b)
    {
        if (auto c = a.n() <=> b.n(); c != 0)
            return c;
        return std::lexicographical_compare_three_way(a.blocks_.begin(), a.blocks_.end(), b.blocks_.begin(),
                                                      b.blocks_.end());
    }

  private:
    GroundSet ground_;
    std::vector<Block> blocks_;
};

/// C(n, k) exactly; zero when k > n or either argument is negative.
BigCount binomial(long long n, long long k);

/// base^exp exactly.
BigCount power(const BigCount& base, unsigned exp);

/**
 * Calls fn(indices) for every k-subset of {0, ..., n-1}, indices ascending,
 * in colexicographic order. Returns the number of subsets visited.
 */
template <typename Fn>
std::uint64_t for_each_combination(int n, int k, Fn&& fn)
{
    if (k < 0 || k > n)
        return 0;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    std::uint64_t visited = 0;
    while (true) {
        fn(std::span<const int>(idx));
        ++visited;
        // find the lowest position that can advance without colliding
        int j = 0;
        while (j < k && idx[j] + 1 == (j + 1 < k ? idx[j + 1] : n))
            ++j;
        if (j == k)
            return visited;
        ++idx[j];
        for (int i = 0; i < j; ++i)
            idx[i] = i;
    }
}

/**
 * Visits every k-subset of the ground set exactly once in canonical
 * (ascending bit-vector) order and returns the number visited.
 */
template <typename Visitor>
BigCount enumerate_k_subsets(GroundSet ground, int k, Visitor&& visitor)
{
    if (k < 0 || k > ground.size())
        throw DomainError("enumerate_k_subsets: need 0 <= k <= n, got k=" + std::to_string(k) +
                          " n=" + std::to_string(ground.size()));
    auto visited = for_each_combination(ground.size(), k, [&](std::span<const int> idx) {
        Block b;
        for (int i : idx)
            b.set(i + 1);
        visitor(static_cast<const Block&>(b));
    });
    return BigCount(visited);
}

/// All k-subsets of [n] in canonical order.
std::vector<Block> k_subsets(GroundSet ground, int k);

} // namespace extri

#endif // EXTRI_CORE_HPP
