#include "rect_index/reference.hpp"

#include <cassert>

namespace rect_index::reference {

std::vector<Occurrence> naive_search_2d(const Grid2D& text, const Grid2D& pattern) {
    std::vector<Occurrence> out;
    if (text.empty() || pattern.empty() || pattern.height() > text.height() || pattern.width() > text.width()) {
        return out;
    }
    for (std::size_t r = 1; r + pattern.height() - 1 <= text.height(); ++r) {
        for (std::size_t c = 1; c + pattern.width() - 1 <= text.width(); ++c) {
            bool match = true;
            for (std::size_t i = 1; match && i <= pattern.height(); ++i) {
                for (std::size_t j = 1; j <= pattern.width(); ++j) {
                    if (text.at(r + i - 1, c + j - 1) != pattern.at(i, j)) {
                        match = false;
                        break;
                    }
                }
            }
            if (match) {
                out.push_back(Occurrence{r, c});
            }
        }
    }
    return out;
}

std::vector<std::size_t> naive_search_1d(std::span<const Symbol> text, std::span<const Symbol> pattern) {
    assert(!pattern.empty());
    std::vector<std::size_t> out;
    if (pattern.empty() || pattern.size() > text.size()) {
        return out;
    }
    for (std::size_t p = 0; p + pattern.size() <= text.size(); ++p) {
        std::size_t i = 0;
        while (i < pattern.size() && text[p + i] == pattern[i]) {
            ++i;
        }
        if (i == pattern.size()) {
            out.push_back(p + 1);
        }
    }
    return out;
}

std::vector<std::uint32_t> naive_rect(std::span<const Point2D> points, std::uint32_t x1, std::uint32_t x2,
                                      std::uint32_t y1, std::uint32_t y2) {
    std::vector<std::uint32_t> out;
    for (const auto& p : points) {
        if (x1 <= p.x && p.x <= x2 && y1 <= p.y && p.y <= y2) {
            out.push_back(p.payload);
        }
    }
    return out;
}

std::size_t naive_lce(std::span<const Symbol> seq, std::size_t p, std::size_t q) {
    assert(p >= 1 && q >= 1);
    std::size_t l = 0;
    while (p - 1 + l < seq.size() && q - 1 + l < seq.size() && seq[p - 1 + l] == seq[q - 1 + l]) {
        ++l;
    }
    return l;
}

}
