#include "rect_index/fragment_index.hpp"

namespace rect_index {

FragmentIndex::FragmentIndex(const Grid2D& text, const KmrTable& kmr) : text_(&text) {
    if (text.empty()) {
        return;
    }
    // LCE over the concatenated rows; only needed while building the tries
    std::vector<std::vector<std::uint64_t>> rows(text.height());
    for (std::size_t i = 0; i < text.height(); ++i) {
        auto r = text.row(i + 1);
        rows[i].assign(r.begin(), r.end());
    }
    LceOracle row_lce(rows);

    for (std::uint32_t k = 0; k < kmr.num_levels(); ++k) {
        std::vector<Position> reps(kmr.num_distinct(k), Position{0, 0});
        std::vector<char> seen(reps.size(), 0);
        const std::size_t lw = kmr.level_width(k);
        auto ranks = kmr.level(k);
        for (std::size_t p = 0; p < ranks.size(); ++p) {
            if (!seen[ranks[p]]) {
                seen[ranks[p]] = 1;
                reps[ranks[p]] = Position{std::uint32_t(p / lw), std::uint32_t(p % lw)};
            }
        }
        reps_.push_back(std::move(reps));
        LevelSource src = source(k);
        src.rows = &row_lce;
        tries_.push_back(CompactedTrie::build(src));
    }
}

std::optional<std::uint32_t> FragmentIndex::rank_for_fragment(std::uint32_t k, std::span<const GridSymbol> fragment,
                                                              WorkCounters* counters) const {
    assert(k < tries_.size() && fragment.size() == (std::size_t(1) << k));
    const auto& trie = tries_[k];
    auto locus = trie.prefix_search(source(k), fragment.size(),
                                    [&](std::size_t i) { return Symbol(fragment[i]); }, counters);
    if (!locus) {
        return std::nullopt;
    }
    // all stored fragments have the same length, so a full match ends at a leaf
    assert(trie.is_leaf(locus->node));
    return trie.leaves_under(*locus).front();
}

std::optional<std::vector<MetaId>> FragmentIndex::encode_pattern(const Grid2D& pattern, WorkCounters* counters) const {
    const std::size_t w = pattern.width();
    const std::uint32_t k = floor_log2(w);
    if (k >= tries_.size() || w > text_->width()) {
        return std::nullopt;
    }
    const std::size_t frag = std::size_t(1) << k;
    std::vector<MetaId> ids;
    ids.reserve(pattern.height());
    for (std::size_t i = 1; i <= pattern.height(); ++i) {
        auto row = pattern.row(i);
        auto prefix = rank_for_fragment(k, row.first(frag), counters);
        if (!prefix) {
            return std::nullopt;
        }
        auto suffix = frag == w ? prefix : rank_for_fragment(k, row.last(frag), counters);
        if (!suffix) {
            return std::nullopt;
        }
        ids.push_back(MetaId{*prefix, *suffix});
    }
    return ids;
}

std::size_t FragmentIndex::num_words() const {
    std::size_t total = 0;
    for (std::size_t k = 0; k < tries_.size(); ++k) {
        total += tries_[k].num_words() + reps_[k].size();
    }
    return total;
}

}
