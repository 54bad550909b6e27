#ifndef rect_index_index2d_hpp
#define rect_index_index2d_hpp

#include <memory>
#include <variant>
#include <vector>

#include "rect_index/counters.hpp"
#include "rect_index/fragment_index.hpp"
#include "rect_index/grid.hpp"
#include "rect_index/index1d_long.hpp"
#include "rect_index/index1d_suffix.hpp"
#include "rect_index/kmr.hpp"
#include "rect_index/lce.hpp"

namespace rect_index {

/*
 * The W - w + 1 column strips of width w, read top to bottom, as 1D texts of
 * length H over packed MetaId symbols. Nothing is materialized: symbols come
 * from the KMR rank tables.
 */
class StripTexts {
public:
    StripTexts() = default;
    StripTexts(const KmrTable& kmr, std::size_t w);

    std::size_t num_texts() const { return num_strips_; }
    std::size_t length(std::size_t) const { return height_; }
    Symbol at(std::size_t strip, std::size_t row) const {
        const std::uint32_t* r = ranks_ + row * level_width_ + strip;
        return (Symbol(r[0]) << 32) | r[shift_];
    }
    std::size_t width() const { return w_; }

private:
    const std::uint32_t* ranks_ = nullptr;
    std::size_t level_width_ = 0;
    std::size_t shift_ = 0;
    std::size_t height_ = 0;
    std::size_t num_strips_ = 0;
    std::size_t w_ = 0;
};

// TextLce over StripTexts of one width, backed by strip oracles on the text and
// on its vertical reversal
class StripLce {
public:
    StripLce(const StripLceOracle& forward, const StripLceOracle& reversed, std::size_t w)
        : fwd_(&forward), rev_(&reversed), w_(w), height_(forward.height()) {}

    std::size_t forward(std::size_t t, std::size_t p, std::size_t t2, std::size_t p2) const {
        return fwd_->strip_lce(t + 1, p + 1, t2 + 1, p2 + 1, w_);
    }
    std::size_t backward(std::size_t t, std::size_t c, std::size_t t2, std::size_t c2) const {
        return rev_->strip_lce(t + 1, height_ - c + 1, t2 + 1, height_ - c2 + 1, w_);
    }

private:
    const StripLceOracle* fwd_;
    const StripLceOracle* rev_;
    std::size_t w_;
    std::size_t height_;
};

// word counts of the query-time structure, per part
struct SpaceStats {
    std::size_t text_words = 0;
    std::size_t kmr_words = 0;
    std::size_t fragment_trie_words = 0;
    std::size_t suffix_index_words = 0;
    std::size_t long_index_trie_words = 0;
    std::size_t point_words = 0;
    std::size_t trie_nodes = 0;
    std::size_t trie_leaves = 0;
    std::size_t cuts = 0;
    std::size_t points = 0;
    // largest LCE footprint alive at once while building; freed afterwards
    std::size_t lce_build_peak_words = 0;

    std::size_t total_words() const {
        return text_words + kmr_words + fragment_trie_words + suffix_index_words + long_index_trie_words +
               point_words;
    }

    SpaceStats& operator+=(const SpaceStats& o);
};

/*
 * Index of a 2D text answering rectangular pattern queries. Patterns with
 * h >= w go to the tall component, built over column strips of the text;
 * the others are transposed and go to the same structure built over the
 * transposed text. Within a component, every strip width w <= min(W, H) has
 * a suffix-trie index if w <= max(1, floor(log2 n)) and a cut-based long
 * pattern index otherwise.
 */
class Index2D {
public:
    explicit Index2D(const Grid2D& text);
    ~Index2D();
    Index2D(Index2D&&) noexcept;
    Index2D& operator=(Index2D&&) noexcept;

    const Grid2D& text() const;
    std::size_t small_width_threshold() const { return threshold_; }

    // ascending (row, col), duplicate-free
    std::vector<Occurrence> query(const Grid2D& pattern, WorkCounters* counters = nullptr) const;

    SpaceStats space_stats() const;

    // kind of 1D index behind width w of the tall (or wide) component
    enum class WidthKind { none, suffix, long_pattern };
    WidthKind width_kind(std::size_t w, bool wide = false) const;

private:
    struct Component;

    std::size_t threshold_ = 1;
    std::unique_ptr<Component> tall_;
    std::unique_ptr<Component> wide_;
};

inline Index2D build_index(const Grid2D& text) {
    return Index2D(text);
}

}

#endif /* rect_index_index2d_hpp */
