#ifndef rect_index_counters_hpp
#define rect_index_counters_hpp

#include <cstdint>

namespace rect_index {

// instrumentation of query work, filled only when a caller passes one in
struct WorkCounters {
    std::uint64_t symbol_comparisons = 0;
    std::uint64_t trie_steps = 0;
    std::uint64_t range_visits = 0;

    std::uint64_t total() const { return symbol_comparisons + trie_steps + range_visits; }

    WorkCounters& operator+=(const WorkCounters& o) {
        symbol_comparisons += o.symbol_comparisons;
        trie_steps += o.trie_steps;
        range_visits += o.range_visits;
        return *this;
    }
};

}

#endif /* rect_index_counters_hpp */
