#ifndef rect_index_range_hpp
#define rect_index_range_hpp

#include <cstdint>
#include <vector>

#include "rect_index/counters.hpp"

namespace rect_index {

struct Point2D {
    std::uint32_t x = 0;
    std::uint32_t y = 0;
    std::uint32_t payload = 0;
};

// plain bit vector with constant-time rank
class RankBitVector {
public:
    RankBitVector() = default;
    explicit RankBitVector(const std::vector<bool>& bits);

    std::size_t size() const { return size_; }
    // number of set bits in [0, i)
    std::size_t rank1(std::size_t i) const;
    std::size_t rank0(std::size_t i) const { return i - rank1(i); }

    std::size_t num_words() const { return words_.size() + (counts_.size() + 1) / 2; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
    // set bits before each word
    std::vector<std::uint32_t> counts_;
};

/*
 * Static 2D orthogonal range reporting. Coordinates are reduced to ranks so
 * that the points form a permutation, which is stored in a wavelet matrix
 * (x-rank -> y-rank). Space is O(N) words plus N log N bits; a query walks
 * O((1 + k) log N) wavelet nodes.
 */
class PointSet2D {
public:
    PointSet2D() = default;
    explicit PointSet2D(std::vector<Point2D> points);

    std::size_t size() const { return xs_.size(); }

    // payloads of the points in [x1, x2] x [y1, y2], appended to `out`
    void query(std::uint32_t x1, std::uint32_t x2, std::uint32_t y1, std::uint32_t y2,
               std::vector<std::uint32_t>& out, WorkCounters* counters = nullptr) const;

    std::vector<std::uint32_t> query_rect(std::uint32_t x1, std::uint32_t x2, std::uint32_t y1, std::uint32_t y2,
                                          WorkCounters* counters = nullptr) const {
        std::vector<std::uint32_t> out;
        query(x1, x2, y1, y2, out, counters);
        return out;
    }

    std::size_t num_words() const;

private:
    void report(std::size_t level, std::size_t begin, std::size_t end, std::uint32_t prefix,
                std::uint32_t y_lo, std::uint32_t y_hi, std::vector<std::uint32_t>& out,
                WorkCounters* counters) const;

    // x coordinate of each x-rank, and y coordinate of each y-rank
    std::vector<std::uint32_t> xs_;
    std::vector<std::uint32_t> ys_;
    std::vector<std::uint32_t> payload_by_y_;
    std::vector<RankBitVector> bits_;
    std::vector<std::size_t> zeros_;
};

inline PointSet2D build_points(std::vector<Point2D> points) {
    return PointSet2D(std::move(points));
}

}

#endif /* rect_index_range_hpp */
