#ifndef rect_index_kmr_hpp
#define rect_index_kmr_hpp

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "rect_index/grid.hpp"

namespace rect_index {

// floor(log2(x)) for x >= 1
inline std::uint32_t floor_log2(std::uint64_t x) {
    assert(x > 0);
    return static_cast<std::uint32_t>(std::bit_width(x) - 1);
}

/*
 * Identifier of a fixed-width row fragment: the ranks of its two (possibly
 * overlapping) power-of-two fragments that together cover it.
 */
struct MetaId {
    std::uint32_t prefix_rank = 0;
    std::uint32_t suffix_rank = 0;

    auto operator<=>(const MetaId&) const = default;

    // order-preserving packing into one word
    std::uint64_t packed() const {
        return (std::uint64_t(prefix_rank) << 32) | suffix_rank;
    }
    static MetaId unpack(std::uint64_t v) {
        return {std::uint32_t(v >> 32), std::uint32_t(v)};
    }
};

/*
 * Karp-Miller-Rosenberg renaming of all row fragments of length 2^k, for every
 * k with 2^k <= W. Ranks at each level are dense and lexicographic.
 */
class KmrTable {
public:
    KmrTable() = default;
    explicit KmrTable(const Grid2D& text);

    std::size_t height() const { return height_; }
    std::size_t width() const { return width_; }
    std::size_t num_levels() const { return levels_.size(); }

    // fragments of length 2^k start in columns 1..level_width(k)
    std::size_t level_width(std::uint32_t k) const { return width_ - (std::size_t(1) << k) + 1; }

    std::uint32_t num_distinct(std::uint32_t k) const { return distinct_[k]; }

    // rank of T[i][j..j+2^k-1], 1-based i and j
    std::uint32_t rank(std::uint32_t k, std::size_t i, std::size_t j) const {
        assert(k < levels_.size());
        assert(i >= 1 && i <= height_ && j >= 1 && j <= level_width(k));
        return levels_[k][(i - 1) * level_width(k) + (j - 1)];
    }

    // row-major ranks of level k
    std::span<const std::uint32_t> level(std::uint32_t k) const { return levels_[k]; }

    // identifier of T[i][j..j+w-1], 1-based i and j
    MetaId meta_id(std::size_t i, std::size_t j, std::size_t w) const {
        assert(w >= 1 && w <= width_ && j + w - 1 <= width_);
        std::uint32_t k = floor_log2(w);
        return {rank(k, i, j), rank(k, i, j + w - (std::size_t(1) << k))};
    }

    // total stored rank entries over all levels
    std::size_t num_entries() const;

private:
    std::size_t height_ = 0;
    std::size_t width_ = 0;
    std::vector<std::vector<std::uint32_t>> levels_;
    std::vector<std::uint32_t> distinct_;
};

inline KmrTable build_kmr(const Grid2D& text) {
    return KmrTable(text);
}

}

#endif /* rect_index_kmr_hpp */
