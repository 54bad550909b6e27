#ifndef rect_index_test_util_hpp
#define rect_index_test_util_hpp

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rect_index/grid.hpp"
#include "rect_index/trie.hpp"

namespace rect_index::test {

inline Grid2D grid(const std::vector<std::string>& rows) {
    return Grid2D::from_rows(rows);
}

inline Grid2D random_grid(std::mt19937_64& rng, std::size_t h, std::size_t w, std::uint32_t sigma) {
    std::vector<GridSymbol> cells(h * w);
    for (auto& c : cells) {
        c = GridSymbol('a' + rng() % sigma);
    }
    return Grid2D(h, w, std::move(cells));
}

inline std::vector<Symbol> symbols(const std::string& s) {
    return std::vector<Symbol>(s.begin(), s.end());
}

inline std::vector<Symbol> random_string(std::mt19937_64& rng, std::size_t len, std::uint32_t sigma) {
    std::vector<Symbol> s(len);
    for (auto& c : s) {
        c = 'a' + rng() % sigma;
    }
    return s;
}

// strings held in memory with a brute-force lce
struct VectorSource {
    std::vector<std::vector<Symbol>> strings;

    std::size_t num_strings() const { return strings.size(); }
    std::size_t length(std::size_t id) const { return strings[id].size(); }
    Symbol at(std::size_t id, std::size_t pos) const { return strings[id][pos]; }
    std::size_t lce(std::size_t a, std::size_t b) const {
        std::size_t l = 0;
        while (l < strings[a].size() && l < strings[b].size() && strings[a][l] == strings[b][l]) {
            ++l;
        }
        return l;
    }
};

}

#endif
