#include "rect_index/trie.hpp"

namespace rect_index {

CompactedTrie::CompactedTrie() : nodes_(1) {}

std::uint32_t CompactedTrie::find_child(std::uint32_t v, Symbol sym, WorkCounters* counters) const {
    const Node& n = nodes_[v];
    if (counters) {
        ++counters->trie_steps;
    }
    auto first = child_key_.begin() + n.sym_begin;
    auto last = child_key_.begin() + n.child_end;
    if (last - first <= 8) {
        for (auto it = first; it != last; ++it) {
            if (*it == sym) {
                return child_node_[it - child_key_.begin()];
            }
        }
        return npos;
    }
    auto it = std::lower_bound(first, last, sym);
    if (it == last || *it != sym) {
        return npos;
    }
    return child_node_[it - child_key_.begin()];
}

std::size_t CompactedTrie::num_words() const {
    std::size_t bytes = nodes_.size() * sizeof(Node) + child_node_.size() * sizeof(std::uint32_t) +
                        child_key_.size() * sizeof(Symbol) + leaf_payload_.size() * sizeof(std::uint32_t);
    return (bytes + 7) / 8;
}

}
