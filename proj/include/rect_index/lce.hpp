#ifndef rect_index_lce_hpp
#define rect_index_lce_hpp

#include <cstdint>
#include <span>
#include <vector>

#include "rect_index/kmr.hpp"

namespace rect_index {

/*
 * sparse table data structure to compute O(1) range minimum with O(n log n) space
 */
class SparseTableMin {
public:
    SparseTableMin() = default;
    explicit SparseTableMin(std::vector<std::uint32_t> values);

    // min of values[begin..end), assumes begin < end
    std::uint32_t range_min(std::size_t begin, std::size_t end) const;

    std::size_t num_entries() const;

private:
    // table_[k][i] = min(values[i..i+2^k))
    std::vector<std::vector<std::uint32_t>> table_;
};

/*
 * Longest common extension oracle over the concatenation of a list of
 * strings, each followed by its own separator symbol. Separators are distinct
 * and smaller than every live symbol, so a string sorts before its
 * extensions. Built from a prefix-doubling suffix array, the Kasai LCP
 * array and a sparse table over the LCP array.
 */
class LceOracle {
public:
    LceOracle() = default;
    explicit LceOracle(const std::vector<std::vector<std::uint64_t>>& strings);

    // length of the concatenation, separators included
    std::size_t size() const { return seq_.size(); }
    std::size_t num_strings() const { return starts_.size(); }

    // 1-based global positions in the concatenation
    std::size_t lce(std::size_t p, std::size_t q) const;

    // same query with 0-based string ids and offsets; an offset equal to the
    // string length denotes the empty suffix
    std::size_t common_prefix(std::size_t s, std::size_t i, std::size_t t, std::size_t j) const {
        if (s == t && i == j) {
            return string_length(s) - i;
        }
        return lce0(starts_[s] + i, starts_[t] + j);
    }

    std::size_t string_length(std::size_t s) const {
        std::size_t end = s + 1 < starts_.size() ? starts_[s + 1] : seq_.size();
        return end - starts_[s] - 1;
    }

    // dense-ranked concatenation; separator of string s is the value s
    std::span<const std::uint32_t> sequence() const { return seq_; }
    // 0-based start positions in lexicographic order of their suffixes
    std::span<const std::uint32_t> suffix_array() const { return sa_; }
    std::span<const std::uint32_t> inverse_suffix_array() const { return isa_; }
    // lcp_array()[r] = lcp of suffixes ranked r-1 and r, lcp_array()[0] = 0
    std::span<const std::uint32_t> lcp_array() const { return lcp_; }

    std::size_t num_words() const;

private:
    std::size_t lce0(std::size_t p, std::size_t q) const;

    std::vector<std::uint32_t> seq_;
    std::vector<std::uint32_t> starts_;
    std::vector<std::uint32_t> sa_;
    std::vector<std::uint32_t> isa_;
    std::vector<std::uint32_t> lcp_;
    SparseTableMin rmq_;
};

inline LceOracle build_lce(const std::vector<std::vector<std::uint64_t>>& strings) {
    return LceOracle(strings);
}

/*
 * LCE between 1D strings induced by column strips of a text. Only strips of
 * power-of-two widths are indexed; a width-w strip is covered by its left and
 * right 2^floor(log w) strips, and its LCE is the minimum of the two.
 *
 * With reversed = true the oracle indexes the vertically reversed text, so a
 * query at (reversed) row j compares the original strips read upwards from
 * row H - j + 1.
 */
class StripLceOracle {
public:
    StripLceOracle() = default;
    // builds levels [min_level, max_level]; others stay unavailable
    StripLceOracle(const KmrTable& kmr, bool reversed, std::uint32_t min_level, std::uint32_t max_level);
    // all levels
    StripLceOracle(const KmrTable& kmr, bool reversed);

    bool has_level(std::uint32_t k) const { return k < levels_.size() && levels_[k].size() > 0; }

    // LCE of S_i[j..] and S_i'[j'..] for strips of width w, all 1-based;
    // row H + 1 denotes the empty suffix
    std::size_t strip_lce(std::size_t i, std::size_t j, std::size_t i2, std::size_t j2, std::size_t w) const;

    std::size_t height() const { return height_; }
    std::size_t num_words() const;

private:
    std::size_t height_ = 0;
    std::vector<LceOracle> levels_;
};

}

#endif /* rect_index_lce_hpp */
