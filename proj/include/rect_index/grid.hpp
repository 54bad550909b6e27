#ifndef rect_index_grid_hpp
#define rect_index_grid_hpp

#include <cassert>
#include <cstdint>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rect_index {

// a single cell of a text or pattern grid
using GridSymbol = std::uint32_t;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/*
 * Rectangular array of symbols stored row-major. Public indexing is 1-based
 * (row i, column j); the cell storage is 0-based.
 */
class Grid2D {
public:
    Grid2D() = default;
    // throws std::invalid_argument if the dimensions are zero or do not match
    Grid2D(std::size_t height, std::size_t width, std::vector<GridSymbol> cells);

    static Grid2D from_rows(const std::vector<std::string>& rows);

    std::size_t height() const { return height_; }
    std::size_t width() const { return width_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    GridSymbol at(std::size_t i, std::size_t j) const {
        assert(i >= 1 && i <= height_ && j >= 1 && j <= width_);
        return cells_[(i - 1) * width_ + (j - 1)];
    }

    // 0-based row view
    std::span<const GridSymbol> row(std::size_t i) const {
        assert(i >= 1 && i <= height_);
        return {cells_.data() + (i - 1) * width_, width_};
    }

    std::span<const GridSymbol> cells() const { return cells_; }

    bool operator==(const Grid2D& other) const = default;

private:
    std::size_t height_ = 0;
    std::size_t width_ = 0;
    std::vector<GridSymbol> cells_;
};

// top-left corner of an occurrence, 1-based
struct Occurrence {
    std::size_t row = 0;
    std::size_t col = 0;

    auto operator<=>(const Occurrence&) const = default;
};

inline GridSymbol char_at(const Grid2D& g, std::size_t i, std::size_t j) {
    return g.at(i, j);
}

Grid2D transpose(const Grid2D& g);

// one row per line, LF or CRLF, trailing newline optional
Grid2D parse_grid(std::string_view input);
Grid2D parse_grid(std::istream& in);
Grid2D read_grid_file(const std::string& path);

// inverse of parse_grid for byte-valued grids; every row is LF terminated
std::string serialize_grid(const Grid2D& g);

}

#endif /* rect_index_grid_hpp */
