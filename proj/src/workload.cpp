#include "rect_index/workload.hpp"

#include <algorithm>

namespace rect_index {

Grid2D Workload::random_grid(std::size_t height, std::size_t width, std::uint32_t sigma) {
    std::vector<GridSymbol> cells(height * width);
    for (auto& c : cells) {
        c = GridSymbol('a' + rng_() % sigma);
    }
    return Grid2D(height, width, std::move(cells));
}

std::pair<std::size_t, std::size_t> Workload::dimensions(std::size_t max_h, std::size_t max_w, Shape shape) {
    const std::size_t lim = std::min(max_h, max_w);
    switch (shape) {
    case Shape::tall:
        if (max_h >= 2) {
            std::size_t w = uniform(1, std::min(max_w, max_h - 1));
            return {uniform(w + 1, max_h), w};
        }
        break;
    case Shape::wide:
        if (max_w >= 2) {
            std::size_t h = uniform(1, std::min(max_h, max_w - 1));
            return {h, uniform(h + 1, max_w)};
        }
        break;
    case Shape::square: {
        std::size_t s = uniform(1, lim);
        return {s, s};
    }
    case Shape::any:
        break;
    }
    return {uniform(1, max_h), uniform(1, max_w)};
}

Grid2D Workload::pattern(const Grid2D& text, Shape shape, Kind kind, std::uint32_t sigma) {
    if (kind == Kind::random) {
        auto [h, w] = dimensions(std::min<std::size_t>(3, text.height()), std::min<std::size_t>(3, text.width()), shape);
        return random_grid(h, w, sigma);
    }
    auto [h, w] = dimensions(text.height(), text.width(), shape);
    std::size_t r = uniform(1, text.height() - h + 1);
    std::size_t c = uniform(1, text.width() - w + 1);
    std::vector<GridSymbol> cells;
    cells.reserve(h * w);
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t j = 0; j < w; ++j) {
            cells.push_back(text.at(r + i, c + j));
        }
    }
    if (kind == Kind::mutated) {
        auto& cell = cells[uniform(0, cells.size() - 1)];
        // a symbol of the same alphabet when possible, otherwise one outside it
        cell = sigma > 1 ? GridSymbol('a' + (cell - 'a' + 1 + uniform(0, sigma - 2)) % sigma) : GridSymbol('a' + sigma);
    }
    return Grid2D(h, w, std::move(cells));
}

}
