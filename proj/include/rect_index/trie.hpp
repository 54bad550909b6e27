#ifndef rect_index_trie_hpp
#define rect_index_trie_hpp

#include <algorithm>
#include <cassert>
#include <concepts>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rect_index/counters.hpp"

namespace rect_index {

// symbol of a 1D string: a byte, a grid symbol or a packed MetaId
using Symbol = std::uint64_t;

/*
 * A collection of strings the trie refers to without copying. Positions are
 * 0-based. lce(a, b) is the longest common prefix of whole strings a and b.
 */
template<typename S>
concept StringSource = requires(const S& s, std::size_t id, std::size_t pos) {
    { s.num_strings() } -> std::convertible_to<std::size_t>;
    { s.length(id) } -> std::convertible_to<std::size_t>;
    { s.at(id, pos) } -> std::convertible_to<Symbol>;
    { s.lce(id, id) } -> std::convertible_to<std::size_t>;
};

/*
 * Match endpoint of a prefix search. `node` is the explicit node at or below
 * the end of the match; edge_offset counts symbols consumed on the edge above
 * it (0 means the locus is `node` itself).
 */
struct Locus {
    std::uint32_t node = 0;
    std::uint32_t edge_offset = 0;
    std::uint32_t depth = 0;
};

/*
 * Compacted trie over strings held by a StringSource. Every stored string ends
 * with a logical terminator unique to it, so each string owns exactly one leaf
 * (also when it is a prefix of, or equal to, another string). Leaves carry the
 * string id as payload and are numbered 1..L in pre-order; children are
 * ordered terminators first (by string id), then by first edge symbol.
 */
class CompactedTrie {
public:
    static constexpr std::uint32_t npos = std::numeric_limits<std::uint32_t>::max();

    struct Node {
        std::uint32_t parent = npos;
        // string depth excluding the terminator
        std::uint32_t depth = 0;
        // the edge label is str_id[parent.depth .. depth) (+ terminator for leaves)
        std::uint32_t str_id = npos;
        std::uint32_t child_begin = 0;
        // children in [child_begin, sym_begin) are terminator-only leaves
        std::uint32_t sym_begin = 0;
        std::uint32_t child_end = 0;
        std::uint32_t leaf_lo = 1;
        std::uint32_t leaf_hi = 0;
    };

    CompactedTrie();

    template<StringSource Source>
    static CompactedTrie build(const Source& src);

    std::uint32_t root() const { return 0; }
    std::size_t num_nodes() const { return nodes_.size(); }
    std::size_t num_leaves() const { return leaf_payload_.size(); }
    const Node& node(std::uint32_t v) const { return nodes_[v]; }
    bool is_leaf(std::uint32_t v) const { return nodes_[v].child_begin == nodes_[v].child_end && v != root(); }

    std::span<const std::uint32_t> children(std::uint32_t v) const {
        return std::span<const std::uint32_t>(child_node_).subspan(nodes_[v].child_begin,
                                                                    nodes_[v].child_end - nodes_[v].child_begin);
    }
    // first edge symbol of a non-terminator child (index into children(v))
    Symbol child_key(std::uint32_t v, std::size_t idx) const { return child_key_[nodes_[v].child_begin + idx]; }

    // payloads (string ids) in pre-order
    std::span<const std::uint32_t> leaf_payloads() const { return leaf_payload_; }

    // 1-based inclusive pre-order range; lo > hi for an empty trie
    std::pair<std::uint32_t, std::uint32_t> leaf_range(const Locus& locus) const {
        return {nodes_[locus.node].leaf_lo, nodes_[locus.node].leaf_hi};
    }

    std::span<const std::uint32_t> leaves_under(const Locus& locus) const {
        const auto& n = nodes_[locus.node];
        if (n.leaf_lo > n.leaf_hi) {
            return {};
        }
        return std::span<const std::uint32_t>(leaf_payload_).subspan(n.leaf_lo - 1, n.leaf_hi - n.leaf_lo + 1);
    }

    Locus root_locus() const { return Locus{root(), 0, 0}; }

    // child of v whose edge starts with sym, or npos
    std::uint32_t find_child(std::uint32_t v, Symbol sym, WorkCounters* counters = nullptr) const;

    /*
     * Locus spelling query[0..m) if it is a prefix of some stored string.
     * `query(i)` returns the i-th query symbol. Edge interiors are verified
     * against the stored strings through `src`.
     */
    template<StringSource Source, typename Query>
    std::optional<Locus> prefix_search(const Source& src, std::size_t m, Query&& query,
                                       WorkCounters* counters = nullptr) const;

    std::size_t num_words() const;

private:
    std::vector<Node> nodes_;
    std::vector<std::uint32_t> child_node_;
    std::vector<Symbol> child_key_;
    std::vector<std::uint32_t> leaf_payload_;
};

template<StringSource Source>
CompactedTrie CompactedTrie::build(const Source& src) {
    const std::size_t num = src.num_strings();
    CompactedTrie trie;
    if (num == 0) {
        return trie;
    }

    auto common = [&](std::uint32_t a, std::uint32_t b) {
        return std::min({std::size_t(src.lce(a, b)), std::size_t(src.length(a)), std::size_t(src.length(b))});
    };

    // sort with one LCE and one symbol comparison per string comparison;
    // a proper prefix sorts first, equal strings by id
    std::vector<std::uint32_t> order(num);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        std::size_t la = src.length(a), lb = src.length(b);
        std::size_t l = common(a, b);
        if (l == la || l == lb) {
            return la != lb ? la < lb : a < b;
        }
        return Symbol(src.at(a, l)) < Symbol(src.at(b, l));
    });

    // insert each string as the rightmost leaf; the stack holds the rightmost path
    std::vector<Node> nodes(1);
    std::vector<std::uint32_t> first_child(1, npos), last_child(1, npos), next_sib(1, npos), prev_sib(1, npos);
    auto new_node = [&](std::uint32_t parent, std::size_t depth, std::uint32_t str) {
        Node n;
        n.parent = parent;
        n.depth = std::uint32_t(depth);
        n.str_id = str;
        nodes.push_back(n);
        first_child.push_back(npos);
        last_child.push_back(npos);
        next_sib.push_back(npos);
        prev_sib.push_back(npos);
        return std::uint32_t(nodes.size() - 1);
    };
    auto append_child = [&](std::uint32_t parent, std::uint32_t child) {
        prev_sib[child] = last_child[parent];
        next_sib[child] = npos;
        if (last_child[parent] == npos) {
            first_child[parent] = child;
        }
        else {
            next_sib[last_child[parent]] = child;
        }
        last_child[parent] = child;
    };
    std::vector<char> leaf(1, 0);
    auto effective_depth = [&](std::uint32_t v) -> std::size_t {
        return std::size_t(nodes[v].depth) + (leaf[v] ? 1 : 0);
    };

    std::vector<std::uint32_t> stack{0};
    for (std::size_t idx = 0; idx < num; ++idx) {
        const std::uint32_t s = order[idx];
        const std::size_t l = idx == 0 ? 0 : common(order[idx - 1], s);
        std::uint32_t last = npos;
        while (effective_depth(stack.back()) > l) {
            last = stack.back();
            stack.pop_back();
        }
        std::uint32_t top = stack.back();
        if (nodes[top].depth < l) {
            // split the edge into `last`, which is the rightmost child of top
            std::uint32_t mid = new_node(top, l, s);
            leaf.push_back(0);
            std::uint32_t before = prev_sib[last];
            prev_sib[mid] = before;
            if (before == npos) {
                first_child[top] = mid;
            }
            else {
                next_sib[before] = mid;
            }
            last_child[top] = mid;
            nodes[last].parent = mid;
            prev_sib[last] = npos;
            first_child[mid] = last_child[mid] = last;
            stack.push_back(mid);
            top = mid;
        }
        std::uint32_t lf = new_node(top, src.length(s), s);
        leaf.push_back(1);
        append_child(top, lf);
        stack.push_back(lf);
    }

    // renumber in pre-order, flatten children and number leaves
    std::vector<std::uint32_t> pre;
    pre.reserve(nodes.size());
    std::vector<std::uint32_t> dfs{0};
    while (!dfs.empty()) {
        std::uint32_t v = dfs.back();
        dfs.pop_back();
        pre.push_back(v);
        std::size_t mark = dfs.size();
        for (std::uint32_t c = first_child[v]; c != npos; c = next_sib[c]) {
            dfs.push_back(c);
        }
        std::reverse(dfs.begin() + mark, dfs.end());
    }
    std::vector<std::uint32_t> new_id(nodes.size());
    for (std::size_t i = 0; i < pre.size(); ++i) {
        new_id[pre[i]] = std::uint32_t(i);
    }

    trie.nodes_.assign(pre.size(), Node{});
    trie.child_node_.reserve(pre.size());
    trie.child_key_.reserve(pre.size());
    for (std::size_t i = 0; i < pre.size(); ++i) {
        const Node& old = nodes[pre[i]];
        Node& n = trie.nodes_[i];
        n.parent = old.parent == npos ? npos : new_id[old.parent];
        n.depth = old.depth;
        n.str_id = old.str_id;
        n.child_begin = std::uint32_t(trie.child_node_.size());
        n.sym_begin = n.child_begin;
        for (std::uint32_t c = first_child[pre[i]]; c != npos; c = next_sib[c]) {
            trie.child_node_.push_back(new_id[c]);
            if (nodes[c].depth == old.depth) {
                trie.child_key_.push_back(0);
                ++n.sym_begin;
            }
            else {
                trie.child_key_.push_back(Symbol(src.at(nodes[c].str_id, old.depth)));
            }
        }
        n.child_end = std::uint32_t(trie.child_node_.size());
        if (leaf[pre[i]]) {
            trie.leaf_payload_.push_back(old.str_id);
            n.leaf_lo = n.leaf_hi = std::uint32_t(trie.leaf_payload_.size());
        }
    }
    for (auto& n : trie.nodes_) {
        if (n.leaf_hi == 0) {
            n.leaf_lo = npos;
        }
    }
    // children follow parents in pre-order, so a reverse sweep folds ranges up
    for (std::size_t i = trie.nodes_.size(); i-- > 1;) {
        const Node& n = trie.nodes_[i];
        Node& p = trie.nodes_[n.parent];
        p.leaf_lo = std::min(p.leaf_lo, n.leaf_lo);
        p.leaf_hi = std::max(p.leaf_hi, n.leaf_hi);
    }
    return trie;
}

template<StringSource Source, typename Query>
std::optional<Locus> CompactedTrie::prefix_search(const Source& src, std::size_t m, Query&& query,
                                                  WorkCounters* counters) const {
    std::uint32_t v = root();
    std::size_t d = 0;
    while (d < m) {
        std::uint32_t child = find_child(v, Symbol(query(d)), counters);
        if (child == npos) {
            return std::nullopt;
        }
        v = child;
        ++d;
        const Node& n = nodes_[v];
        const std::size_t end = std::min<std::size_t>(n.depth, m);
        for (; d < end; ++d) {
            if (counters) {
                ++counters->symbol_comparisons;
            }
            if (Symbol(src.at(n.str_id, d)) != Symbol(query(d))) {
                return std::nullopt;
            }
        }
    }
    const Node& n = nodes_[v];
    std::uint32_t offset = (d == n.depth || v == root()) ? 0 : std::uint32_t(d - nodes_[n.parent].depth);
    return Locus{v, offset, std::uint32_t(d)};
}

}

#endif /* rect_index_trie_hpp */
