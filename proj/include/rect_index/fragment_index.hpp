#ifndef rect_index_fragment_index_hpp
#define rect_index_fragment_index_hpp

#include <optional>
#include <span>
#include <vector>

#include "rect_index/counters.hpp"
#include "rect_index/grid.hpp"
#include "rect_index/kmr.hpp"
#include "rect_index/lce.hpp"
#include "rect_index/trie.hpp"

namespace rect_index {

/*
 * One compacted trie per KMR level over the distinct row fragments of length
 * 2^k; the leaf of a fragment carries its level-k rank. Used to rank the
 * fragments of a pattern row without touching the text's rank tables.
 *
 * Edge labels point into `text`, which must outlive this object.
 */
class FragmentIndex {
public:
    FragmentIndex() = default;
    FragmentIndex(const Grid2D& text, const KmrTable& kmr);

    std::size_t num_levels() const { return tries_.size(); }
    const CompactedTrie& trie(std::uint32_t k) const { return tries_[k]; }

    // level-k rank of a fragment of length exactly 2^k, or nullopt if it is
    // not a row substring of the text
    std::optional<std::uint32_t> rank_for_fragment(std::uint32_t k, std::span<const GridSymbol> fragment,
                                                   WorkCounters* counters = nullptr) const;

    // MetaId of every pattern row; nullopt if some fragment is absent from the text
    std::optional<std::vector<MetaId>> encode_pattern(const Grid2D& pattern, WorkCounters* counters = nullptr) const;

    std::size_t num_words() const;

private:
    struct Position {
        std::uint32_t row;
        std::uint32_t col;
    };

    /*
     * Distinct level-k fragments addressed by rank; lce is only available
     * while the row oracle is alive during construction.
     */
    struct LevelSource {
        const Grid2D* text;
        std::span<const Position> reps;
        std::size_t frag_len;
        const LceOracle* rows = nullptr;

        std::size_t num_strings() const { return reps.size(); }
        std::size_t length(std::size_t) const { return frag_len; }
        Symbol at(std::size_t id, std::size_t pos) const {
            return text->cells()[std::size_t(reps[id].row) * text->width() + reps[id].col + pos];
        }
        std::size_t lce(std::size_t a, std::size_t b) const {
            assert(rows != nullptr);
            return std::min(frag_len, rows->common_prefix(reps[a].row, reps[a].col, reps[b].row, reps[b].col));
        }
    };

    LevelSource source(std::uint32_t k) const {
        return LevelSource{text_, reps_[k], std::size_t(1) << k};
    }

    const Grid2D* text_ = nullptr;
    std::vector<std::vector<Position>> reps_;
    std::vector<CompactedTrie> tries_;
};

}

#endif /* rect_index_fragment_index_hpp */
