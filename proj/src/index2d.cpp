#include "rect_index/index2d.hpp"

#include <algorithm>

namespace rect_index {

StripTexts::StripTexts(const KmrTable& kmr, std::size_t w) : height_(kmr.height()), w_(w) {
    const std::uint32_t k = floor_log2(w);
    ranks_ = kmr.level(k).data();
    level_width_ = kmr.level_width(k);
    shift_ = w - (std::size_t(1) << k);
    num_strips_ = kmr.width() - w + 1;
}

SpaceStats& SpaceStats::operator+=(const SpaceStats& o) {
    text_words += o.text_words;
    kmr_words += o.kmr_words;
    fragment_trie_words += o.fragment_trie_words;
    suffix_index_words += o.suffix_index_words;
    long_index_trie_words += o.long_index_trie_words;
    point_words += o.point_words;
    trie_nodes += o.trie_nodes;
    trie_leaves += o.trie_leaves;
    cuts += o.cuts;
    points += o.points;
    lce_build_peak_words = std::max(lce_build_peak_words, o.lce_build_peak_words);
    return *this;
}

struct Index2D::Component {
    using WidthIndex = std::variant<std::monostate, SuffixTrieIndex<StripTexts>, LongPatternIndex<StripTexts>>;

    Grid2D text;
    KmrTable kmr;
    FragmentIndex fragments;
    // entry w - 1
    std::vector<WidthIndex> widths;
    std::size_t lce_peak_words = 0;

    Component(const Grid2D& t, std::size_t threshold) : text(t), kmr(text), fragments(text, kmr) {
        const std::size_t height = text.height();
        const std::size_t max_w = std::min(text.width(), height);
        widths.resize(text.width());

        // widths sharing floor(log2 w) share one pair of strip oracles
        std::uint32_t level = std::uint32_t(-1);
        StripLceOracle fwd, rev;
        for (std::size_t w = 1; w <= max_w; ++w) {
            const std::uint32_t k = floor_log2(w);
            if (k != level) {
                fwd = StripLceOracle();
                rev = StripLceOracle();
                fwd = StripLceOracle(kmr, false, k, k);
                rev = StripLceOracle(kmr, true, k, k);
                level = k;
                lce_peak_words = std::max(lce_peak_words, fwd.num_words() + rev.num_words());
            }
            StripLce lce(fwd, rev, w);
            if (w <= threshold) {
                widths[w - 1] = SuffixTrieIndex<StripTexts>(StripTexts(kmr, w), lce);
            }
            else {
                widths[w - 1] = LongPatternIndex<StripTexts>(StripTexts(kmr, w), w, lce);
            }
        }
    }

    // pattern with h >= w and w <= text width
    void query(const Grid2D& pattern, std::vector<Hit>& hits, WorkCounters* counters) const {
        const auto& slot = widths[pattern.width() - 1];
        if (std::holds_alternative<std::monostate>(slot)) {
            return;
        }
        auto ids = fragments.encode_pattern(pattern, counters);
        if (!ids) {
            return;
        }
        std::vector<Symbol> seq(ids->size());
        std::transform(ids->begin(), ids->end(), seq.begin(), [](const MetaId& m) { return m.packed(); });
        std::visit(
            [&](const auto& index) {
                if constexpr (!std::is_same_v<std::decay_t<decltype(index)>, std::monostate>) {
                    index.query(seq, hits, counters);
                }
            },
            slot);
    }

    SpaceStats stats() const {
        SpaceStats s;
        s.text_words = (text.size() + 1) / 2;
        s.kmr_words = (kmr.num_entries() + 1) / 2;
        s.fragment_trie_words = fragments.num_words();
        for (std::size_t k = 0; k < fragments.num_levels(); ++k) {
            s.trie_nodes += fragments.trie(std::uint32_t(k)).num_nodes();
            s.trie_leaves += fragments.trie(std::uint32_t(k)).num_leaves();
        }
        for (const auto& slot : widths) {
            if (auto* sfx = std::get_if<SuffixTrieIndex<StripTexts>>(&slot)) {
                s.suffix_index_words += sfx->num_words();
                s.trie_nodes += sfx->trie().num_nodes();
                s.trie_leaves += sfx->trie().num_leaves();
            }
            else if (auto* lng = std::get_if<LongPatternIndex<StripTexts>>(&slot)) {
                s.long_index_trie_words += lng->num_words() - lng->points().num_words();
                s.point_words += lng->points().num_words();
                s.trie_nodes += lng->prefix_trie().num_nodes() + lng->suffix_trie().num_nodes();
                s.trie_leaves += lng->prefix_trie().num_leaves() + lng->suffix_trie().num_leaves();
                s.cuts += lng->cuts().size();
                s.points += lng->points().size();
            }
        }
        s.lce_build_peak_words = lce_peak_words;
        return s;
    }
};

Index2D::Index2D(const Grid2D& text) {
    if (text.empty()) {
        throw std::invalid_argument("cannot index an empty grid");
    }
    threshold_ = std::max<std::size_t>(1, floor_log2(text.size()));
    tall_ = std::make_unique<Component>(text, threshold_);
    wide_ = std::make_unique<Component>(transpose(text), threshold_);
}

Index2D::~Index2D() = default;
Index2D::Index2D(Index2D&&) noexcept = default;
Index2D& Index2D::operator=(Index2D&&) noexcept = default;

const Grid2D& Index2D::text() const {
    return tall_->text;
}

std::vector<Occurrence> Index2D::query(const Grid2D& pattern, WorkCounters* counters) const {
    std::vector<Occurrence> out;
    const Grid2D& text = tall_->text;
    if (pattern.empty() || pattern.height() > text.height() || pattern.width() > text.width()) {
        return out;
    }
    std::vector<Hit> hits;
    if (pattern.height() >= pattern.width()) {
        tall_->query(pattern, hits, counters);
        for (const auto& hit : hits) {
            out.push_back(Occurrence{hit.pos, hit.text});
        }
    }
    else {
        wide_->query(transpose(pattern), hits, counters);
        for (const auto& hit : hits) {
            out.push_back(Occurrence{hit.text, hit.pos});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SpaceStats Index2D::space_stats() const {
    SpaceStats s = tall_->stats();
    s += wide_->stats();
    return s;
}

Index2D::WidthKind Index2D::width_kind(std::size_t w, bool wide) const {
    const auto& comp = wide ? *wide_ : *tall_;
    if (w == 0 || w > comp.widths.size()) {
        return WidthKind::none;
    }
    const auto& slot = comp.widths[w - 1];
    if (std::holds_alternative<SuffixTrieIndex<StripTexts>>(slot)) {
        return WidthKind::suffix;
    }
    if (std::holds_alternative<LongPatternIndex<StripTexts>>(slot)) {
        return WidthKind::long_pattern;
    }
    return WidthKind::none;
}

}
