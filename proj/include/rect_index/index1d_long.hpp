#ifndef rect_index_index1d_long_hpp
#define rect_index_index1d_long_hpp

#include <cassert>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "rect_index/range.hpp"
#include "rect_index/texts.hpp"
#include "rect_index/trie.hpp"

namespace rect_index {

/*
 * 1D index for patterns of length h >= w.
 *
 * Every text is cut at each position i = 0, w, 2w, ... <= len. A cut splits
 * the text into T1 = text[..i) and T2 = text[i..). S1 stores reversed T1s and
 * S2 the T2s; each cut becomes the point (leaf number of rev(T1) in S1, leaf
 * number of T2 in S2). An occurrence starting at p is certified by the unique
 * cut i in [p, p + w), found at anchor j = i - p by a rectangle query over the
 * leaf ranges of rev(P[..j)) and P[j..).
 */
template<TextCollection Texts>
class LongPatternIndex {
public:
    struct Cut {
        std::uint32_t text;
        std::uint32_t pos;
    };

    LongPatternIndex() = default;

    template<TextLce Lce>
    LongPatternIndex(Texts texts, std::size_t w, const Lce& lce) : texts_(std::move(texts)), w_(w) {
        assert(w >= 1);
        for (std::size_t t = 0; t < texts_.num_texts(); ++t) {
            const std::size_t len = texts_.length(t);
            if (len < w_) {
                continue;
            }
            for (std::size_t i = 0; i <= len; i += w_) {
                cuts_.push_back(Cut{std::uint32_t(t), std::uint32_t(i)});
            }
        }
        prefixes_ = CompactedTrie::build(PrefixSource<Lce>{{this}, &lce});
        suffixes_ = CompactedTrie::build(SuffixSource<Lce>{{this}, &lce});

        std::vector<Point2D> points(cuts_.size());
        auto xs = prefixes_.leaf_payloads();
        for (std::size_t r = 0; r < xs.size(); ++r) {
            points[xs[r]].x = std::uint32_t(r + 1);
            points[xs[r]].payload = xs[r];
        }
        auto ys = suffixes_.leaf_payloads();
        for (std::size_t r = 0; r < ys.size(); ++r) {
            points[ys[r]].y = std::uint32_t(r + 1);
        }
        points_ = PointSet2D(std::move(points));
    }

    std::size_t width() const { return w_; }
    std::span<const Cut> cuts() const { return cuts_; }
    const CompactedTrie& prefix_trie() const { return prefixes_; }
    const CompactedTrie& suffix_trie() const { return suffixes_; }
    const PointSet2D& points() const { return points_; }

    // appends 1-based hits of pattern[0..h), h >= w, in no particular order
    void query(std::span<const Symbol> pattern, std::vector<Hit>& out, WorkCounters* counters = nullptr) const {
        const std::size_t h = pattern.size();
        assert(h >= w_);
        if (h < w_ || cuts_.empty()) {
            return;
        }
        std::vector<std::uint32_t> found;
        for (std::size_t j = 0; j < w_; ++j) {
            auto right = suffixes_.prefix_search(SuffixSource<void>{{this}}, h - j,
                                                 [&](std::size_t i) { return pattern[j + i]; }, counters);
            if (!right) {
                continue;
            }
            auto left = j == 0 ? std::optional<Locus>(prefixes_.root_locus())
                               : prefixes_.prefix_search(PrefixSource<void>{{this}}, j,
                                                         [&](std::size_t i) { return pattern[j - 1 - i]; }, counters);
            if (!left) {
                continue;
            }
            auto [x1, x2] = prefixes_.leaf_range(*left);
            auto [y1, y2] = suffixes_.leaf_range(*right);
            found.clear();
            points_.query(x1, x2, y1, y2, found, counters);
            for (std::uint32_t c : found) {
                out.push_back(Hit{std::size_t(cuts_[c].text) + 1, std::size_t(cuts_[c].pos) - j + 1});
            }
        }
    }

    std::vector<Hit> query(std::span<const Symbol> pattern, WorkCounters* counters = nullptr) const {
        std::vector<Hit> out;
        query(pattern, out, counters);
        return out;
    }

    // additional words on top of the texts
    std::size_t num_words() const {
        return cuts_.size() + prefixes_.num_words() + suffixes_.num_words() + points_.num_words();
    }

private:
    struct SourceBase {
        const LongPatternIndex* index;

        std::size_t num_strings() const { return index->cuts_.size(); }
        const Cut& cut(std::size_t id) const { return index->cuts_[id]; }
    };

    // reversed T1 of every cut
    template<typename Lce>
    struct PrefixSource : SourceBase {
        const Lce* oracle = nullptr;

        std::size_t length(std::size_t id) const { return this->cut(id).pos; }
        Symbol at(std::size_t id, std::size_t i) const {
            const Cut& c = this->cut(id);
            return this->index->texts_.at(c.text, c.pos - 1 - i);
        }
        std::size_t lce(std::size_t a, std::size_t b) const {
            if constexpr (std::is_void_v<Lce>) {
                assert(false && "lce is only available during construction");
                return 0;
            }
            else {
                const Cut &ca = this->cut(a), &cb = this->cut(b);
                return oracle->backward(ca.text, ca.pos, cb.text, cb.pos);
            }
        }
    };

    // T2 of every cut
    template<typename Lce>
    struct SuffixSource : SourceBase {
        const Lce* oracle = nullptr;

        std::size_t length(std::size_t id) const {
            const Cut& c = this->cut(id);
            return this->index->texts_.length(c.text) - c.pos;
        }
        Symbol at(std::size_t id, std::size_t i) const {
            const Cut& c = this->cut(id);
            return this->index->texts_.at(c.text, c.pos + i);
        }
        std::size_t lce(std::size_t a, std::size_t b) const {
            if constexpr (std::is_void_v<Lce>) {
                assert(false && "lce is only available during construction");
                return 0;
            }
            else {
                const Cut &ca = this->cut(a), &cb = this->cut(b);
                return oracle->forward(ca.text, ca.pos, cb.text, cb.pos);
            }
        }
    };

    Texts texts_;
    std::size_t w_ = 1;
    std::vector<Cut> cuts_;
    CompactedTrie prefixes_;
    CompactedTrie suffixes_;
    PointSet2D points_;
};

template<TextCollection Texts, TextLce Lce>
LongPatternIndex<Texts> build_long_index(Texts texts, std::size_t w, const Lce& lce) {
    return LongPatternIndex<Texts>(std::move(texts), w, lce);
}

}

#endif /* rect_index_index1d_long_hpp */
