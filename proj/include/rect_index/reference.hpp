#ifndef rect_index_reference_hpp
#define rect_index_reference_hpp

#include <cstdint>
#include <span>
#include <vector>

#include "rect_index/grid.hpp"
#include "rect_index/range.hpp"
#include "rect_index/trie.hpp"

/*
 * Brute-force reference implementations. Nothing here shares code with the
 * indexed query paths; they exist to cross-check them.
 */
namespace rect_index::reference {

// every (row, col) where the pattern matches, ascending
std::vector<Occurrence> naive_search_2d(const Grid2D& text, const Grid2D& pattern);

// 1-based start positions, overlapping matches included; pattern must be nonempty
std::vector<std::size_t> naive_search_1d(std::span<const Symbol> text, std::span<const Symbol> pattern);

// payloads of points in [x1, x2] x [y1, y2], in input order
std::vector<std::uint32_t> naive_rect(std::span<const Point2D> points, std::uint32_t x1, std::uint32_t x2,
                                      std::uint32_t y1, std::uint32_t y2);

// common prefix length of seq[p..] and seq[q..], 1-based positions
std::size_t naive_lce(std::span<const Symbol> seq, std::size_t p, std::size_t q);

}

#endif /* rect_index_reference_hpp */
