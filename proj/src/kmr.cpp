#include "rect_index/kmr.hpp"

#include <algorithm>

namespace rect_index {

namespace {

// stable counting sort of `order` by key(order[i]) with keys in [0, range)
template<typename Key>
void counting_sort(std::vector<std::uint32_t>& order, std::vector<std::uint32_t>& scratch,
                   std::uint32_t range, Key key) {
    std::vector<std::uint32_t> count(std::size_t(range) + 1, 0);
    for (auto idx : order) {
        ++count[key(idx) + 1];
    }
    for (std::size_t r = 1; r < count.size(); ++r) {
        count[r] += count[r - 1];
    }
    scratch.resize(order.size());
    for (auto idx : order) {
        scratch[count[key(idx)]++] = idx;
    }
    order.swap(scratch);
}

}

KmrTable::KmrTable(const Grid2D& text) : height_(text.height()), width_(text.width()) {
    if (text.empty()) {
        return;
    }
    auto cells = text.cells();

    // level 0: dense ranks of the distinct symbols
    std::vector<GridSymbol> alphabet(cells.begin(), cells.end());
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    std::vector<std::uint32_t> base(cells.size());
    for (std::size_t p = 0; p < cells.size(); ++p) {
        base[p] = std::uint32_t(std::lower_bound(alphabet.begin(), alphabet.end(), cells[p]) - alphabet.begin());
    }
    levels_.push_back(std::move(base));
    distinct_.push_back(std::uint32_t(alphabet.size()));

    std::vector<std::uint32_t> order, scratch;
    for (std::uint32_t k = 0; (std::size_t(2) << k) <= width_; ++k) {
        const std::size_t half = std::size_t(1) << k;
        const std::size_t prev_w = level_width(k);
        const std::size_t cur_w = level_width(k + 1);
        const auto& prev = levels_[k];
        auto first = [&](std::uint32_t idx) {
            return prev[(idx / cur_w) * prev_w + idx % cur_w];
        };
        auto second = [&](std::uint32_t idx) {
            return prev[(idx / cur_w) * prev_w + idx % cur_w + half];
        };

        // two-pass radix sort of (first, second) pairs
        order.resize(height_ * cur_w);
        for (std::uint32_t idx = 0; idx < order.size(); ++idx) {
            order[idx] = idx;
        }
        counting_sort(order, scratch, distinct_[k], second);
        counting_sort(order, scratch, distinct_[k], first);

        std::vector<std::uint32_t> cur(order.size());
        std::uint32_t next_rank = 0;
        for (std::size_t r = 0; r < order.size(); ++r) {
            if (r > 0 && (first(order[r]) != first(order[r - 1]) || second(order[r]) != second(order[r - 1]))) {
                ++next_rank;
            }
            cur[order[r]] = next_rank;
        }
        levels_.push_back(std::move(cur));
        distinct_.push_back(next_rank + 1);
    }
}

std::size_t KmrTable::num_entries() const {
    std::size_t total = 0;
    for (const auto& lvl : levels_) {
        total += lvl.size();
    }
    return total;
}

}
