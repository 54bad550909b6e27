#include "rect_index/grid.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

namespace rect_index {

Grid2D::Grid2D(std::size_t height, std::size_t width, std::vector<GridSymbol> cells)
    : height_(height), width_(width), cells_(std::move(cells)) {
    if (height == 0 || width == 0) {
        throw std::invalid_argument("grid dimensions must be positive");
    }
    if (cells_.size() != height * width) {
        throw std::invalid_argument("grid cell count does not match dimensions");
    }
}

Grid2D Grid2D::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) {
        throw std::invalid_argument("grid needs at least one row");
    }
    std::size_t width = rows.front().size();
    std::vector<GridSymbol> cells;
    cells.reserve(rows.size() * width);
    for (const auto& r : rows) {
        if (r.size() != width) {
            throw std::invalid_argument("grid rows have unequal lengths");
        }
        for (unsigned char c : r) {
            cells.push_back(c);
        }
    }
    return Grid2D(rows.size(), width, std::move(cells));
}

Grid2D transpose(const Grid2D& g) {
    const std::size_t h = g.height(), w = g.width();
    std::vector<GridSymbol> cells(h * w);
    auto src = g.cells();
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t j = 0; j < w; ++j) {
            cells[j * h + i] = src[i * w + j];
        }
    }
    return Grid2D(w, h, std::move(cells));
}

Grid2D parse_grid(std::string_view input) {
    std::vector<GridSymbol> cells;
    std::size_t width = 0;
    std::size_t height = 0;
    std::size_t pos = 0;
    while (pos < input.size()) {
        std::size_t end = input.find('\n', pos);
        std::size_t next = end == std::string_view::npos ? input.size() : end + 1;
        if (end == std::string_view::npos) {
            end = input.size();
        }
        std::string_view line = input.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            throw FormatError("blank line " + std::to_string(height + 1) + " in grid");
        }
        if (height == 0) {
            width = line.size();
        }
        else if (line.size() != width) {
            throw FormatError("ragged grid: line " + std::to_string(height + 1) + " has length " +
                              std::to_string(line.size()) + ", expected " + std::to_string(width));
        }
        for (unsigned char c : line) {
            cells.push_back(c);
        }
        ++height;
        pos = next;
    }
    if (height == 0) {
        throw FormatError("empty grid");
    }
    return Grid2D(height, width, std::move(cells));
}

Grid2D parse_grid(std::istream& in) {
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_grid(std::string_view(data));
}

Grid2D read_grid_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::ios_base::failure("cannot open " + path);
    }
    return parse_grid(in);
}

std::string serialize_grid(const Grid2D& g) {
    std::string out;
    out.reserve(g.size() + g.height());
    for (std::size_t i = 1; i <= g.height(); ++i) {
        for (GridSymbol s : g.row(i)) {
            out.push_back(static_cast<char>(s));
        }
        out.push_back('\n');
    }
    return out;
}

}
