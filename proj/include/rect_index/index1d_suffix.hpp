#ifndef rect_index_index1d_suffix_hpp
#define rect_index_index1d_suffix_hpp

#include <algorithm>
#include <span>
#include <vector>

#include "rect_index/texts.hpp"
#include "rect_index/trie.hpp"

namespace rect_index {

/*
 * Compacted trie over every suffix of every text (each with its own logical
 * terminator). A query is one prefix search followed by a walk over the
 * contiguous leaves below the locus.
 */
template<TextCollection Texts>
class SuffixTrieIndex {
public:
    SuffixTrieIndex() = default;

    template<TextLce Lce>
    SuffixTrieIndex(Texts texts, const Lce& lce) : texts_(std::move(texts)) {
        offsets_.push_back(0);
        for (std::size_t t = 0; t < texts_.num_texts(); ++t) {
            offsets_.push_back(offsets_.back() + std::uint32_t(texts_.length(t)));
            if (texts_.length(t) != texts_.length(0)) {
                uniform_length_ = 0;
            }
        }
        if (texts_.num_texts() > 0 && uniform_length_ != 0) {
            uniform_length_ = texts_.length(0);
        }
        trie_ = CompactedTrie::build(BuildSource<Lce>{this, &lce});
    }

    std::size_t num_texts() const { return texts_.num_texts(); }
    const CompactedTrie& trie() const { return trie_; }

    // appends 1-based hits of pattern[0..h) in no particular order
    void query(std::span<const Symbol> pattern, std::vector<Hit>& out, WorkCounters* counters = nullptr) const {
        if (pattern.empty()) {
            return;
        }
        auto locus = trie_.prefix_search(Source{this}, pattern.size(),
                                         [&](std::size_t i) { return pattern[i]; }, counters);
        if (!locus) {
            return;
        }
        for (std::uint32_t id : trie_.leaves_under(*locus)) {
            auto [t, p] = decode(id);
            out.push_back(Hit{t + 1, p + 1});
        }
    }

    std::vector<Hit> query(std::span<const Symbol> pattern, WorkCounters* counters = nullptr) const {
        std::vector<Hit> out;
        query(pattern, out, counters);
        return out;
    }

    std::size_t num_words() const { return trie_.num_words() + (offsets_.size() + 1) / 2; }

private:
    // string id -> (text, start), both 0-based
    std::pair<std::size_t, std::size_t> decode(std::size_t id) const {
        if (uniform_length_ != 0) {
            return {id / uniform_length_, id % uniform_length_};
        }
        std::size_t t = std::upper_bound(offsets_.begin(), offsets_.end(), std::uint32_t(id)) - offsets_.begin() - 1;
        return {t, id - offsets_[t]};
    }

    struct Source {
        const SuffixTrieIndex* index;

        std::size_t num_strings() const { return index->offsets_.back(); }
        std::size_t length(std::size_t id) const {
            auto [t, p] = index->decode(id);
            return index->texts_.length(t) - p;
        }
        Symbol at(std::size_t id, std::size_t pos) const {
            auto [t, p] = index->decode(id);
            return index->texts_.at(t, p + pos);
        }
        std::size_t lce(std::size_t, std::size_t) const {
            assert(false && "lce is only available during construction");
            return 0;
        }
    };

    template<typename Lce>
    struct BuildSource : Source {
        const Lce* oracle;

        BuildSource(const SuffixTrieIndex* index, const Lce* lce) : Source{index}, oracle(lce) {}

        std::size_t lce(std::size_t a, std::size_t b) const {
            auto [ta, pa] = this->index->decode(a);
            auto [tb, pb] = this->index->decode(b);
            return oracle->forward(ta, pa, tb, pb);
        }
    };

    Texts texts_;
    std::vector<std::uint32_t> offsets_;
    // common text length, or 0 if lengths differ
    std::size_t uniform_length_ = 1;
    CompactedTrie trie_;
};

template<TextCollection Texts, TextLce Lce>
SuffixTrieIndex<Texts> build_suffix_index(Texts texts, const Lce& lce) {
    return SuffixTrieIndex<Texts>(std::move(texts), lce);
}

}

#endif /* rect_index_index1d_suffix_hpp */
