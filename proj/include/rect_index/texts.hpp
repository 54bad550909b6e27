#ifndef rect_index_texts_hpp
#define rect_index_texts_hpp

#include <concepts>
#include <cstdint>
#include <vector>

#include "rect_index/lce.hpp"
#include "rect_index/trie.hpp"

namespace rect_index {

/*
 * A collection of 1D texts with constant-time read-only symbol access.
 * Text ids and positions are 0-based. Implementations are cheap handles; the
 * 1D indexes keep a copy of the handle, never of the symbols.
 */
template<typename T>
concept TextCollection = requires(const T& t, std::size_t id, std::size_t pos) {
    { t.num_texts() } -> std::convertible_to<std::size_t>;
    { t.length(id) } -> std::convertible_to<std::size_t>;
    { t.at(id, pos) } -> std::convertible_to<Symbol>;
};

/*
 * LCE capability over a TextCollection, needed only while building.
 * forward: common prefix of t[p..] and t2[p2..];
 * backward: common suffix of t[..c) and t2[..c2).
 */
template<typename L>
concept TextLce = requires(const L& l, std::size_t id, std::size_t pos) {
    { l.forward(id, pos, id, pos) } -> std::convertible_to<std::size_t>;
    { l.backward(id, pos, id, pos) } -> std::convertible_to<std::size_t>;
};

// 1-based (text, position) of a 1D occurrence
struct Hit {
    std::size_t text = 0;
    std::size_t pos = 0;

    auto operator<=>(const Hit&) const = default;
};

/*
 * Materialized texts. Handles returned by view() point into this object.
 */
class SequenceCollection {
public:
    SequenceCollection() = default;
    explicit SequenceCollection(std::vector<std::vector<Symbol>> texts) : texts_(std::move(texts)) {}

    struct View {
        const std::vector<std::vector<Symbol>>* texts;

        std::size_t num_texts() const { return texts->size(); }
        std::size_t length(std::size_t t) const { return (*texts)[t].size(); }
        Symbol at(std::size_t t, std::size_t p) const { return (*texts)[t][p]; }
    };

    // forward oracle over the texts, backward oracle over their reversals
    class Lce {
    public:
        explicit Lce(const std::vector<std::vector<Symbol>>& texts);

        std::size_t forward(std::size_t t, std::size_t p, std::size_t t2, std::size_t p2) const {
            return fwd_.common_prefix(t, p, t2, p2);
        }
        std::size_t backward(std::size_t t, std::size_t c, std::size_t t2, std::size_t c2) const {
            return bwd_.common_prefix(t, fwd_.string_length(t) - c, t2, fwd_.string_length(t2) - c2);
        }

    private:
        LceOracle fwd_;
        LceOracle bwd_;
    };

    View view() const { return View{&texts_}; }
    Lce make_lce() const { return Lce(texts_); }
    const std::vector<std::vector<Symbol>>& texts() const { return texts_; }

private:
    std::vector<std::vector<Symbol>> texts_;
};

}

#endif /* rect_index_texts_hpp */
