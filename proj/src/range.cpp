#include "rect_index/range.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <tuple>

namespace rect_index {

RankBitVector::RankBitVector(const std::vector<bool>& bits) : size_(bits.size()) {
    words_.assign((size_ + 63) / 64, 0);
    for (std::size_t i = 0; i < size_; ++i) {
        if (bits[i]) {
            words_[i / 64] |= std::uint64_t(1) << (i % 64);
        }
    }
    counts_.resize(words_.size() + 1);
    counts_[0] = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        counts_[w + 1] = counts_[w] + std::uint32_t(std::popcount(words_[w]));
    }
}

std::size_t RankBitVector::rank1(std::size_t i) const {
    std::size_t w = i / 64, b = i % 64;
    std::size_t r = counts_[w];
    if (b != 0) {
        r += std::popcount(words_[w] & ((std::uint64_t(1) << b) - 1));
    }
    return r;
}

PointSet2D::PointSet2D(std::vector<Point2D> points) {
    const std::size_t n = points.size();
    if (n == 0) {
        return;
    }
    // y-rank: order by (y, x, input index) so that ranks are unique
    std::vector<std::uint32_t> by_y(n);
    std::iota(by_y.begin(), by_y.end(), 0u);
    std::sort(by_y.begin(), by_y.end(), [&](std::uint32_t a, std::uint32_t b) {
        return std::tie(points[a].y, points[a].x, a) < std::tie(points[b].y, points[b].x, b);
    });
    std::vector<std::uint32_t> y_rank(n);
    ys_.resize(n);
    payload_by_y_.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
        y_rank[by_y[r]] = std::uint32_t(r);
        ys_[r] = points[by_y[r]].y;
        payload_by_y_[r] = points[by_y[r]].payload;
    }

    std::vector<std::uint32_t> by_x(n);
    std::iota(by_x.begin(), by_x.end(), 0u);
    std::sort(by_x.begin(), by_x.end(), [&](std::uint32_t a, std::uint32_t b) {
        return std::tie(points[a].x, points[a].y, a) < std::tie(points[b].x, points[b].y, b);
    });
    xs_.resize(n);
    std::vector<std::uint32_t> seq(n);
    for (std::size_t r = 0; r < n; ++r) {
        xs_[r] = points[by_x[r]].x;
        seq[r] = y_rank[by_x[r]];
    }

    // wavelet matrix, most significant bit first
    const std::size_t levels = std::max<std::size_t>(1, std::bit_width(n - 1));
    std::vector<std::uint32_t> next(n);
    for (std::size_t l = 0; l < levels; ++l) {
        const std::size_t shift = levels - 1 - l;
        std::vector<bool> bits(n);
        std::size_t zeros = 0;
        for (std::size_t i = 0; i < n; ++i) {
            bits[i] = (seq[i] >> shift) & 1;
            zeros += bits[i] ? 0 : 1;
        }
        std::size_t z = 0, o = zeros;
        for (std::size_t i = 0; i < n; ++i) {
            next[bits[i] ? o++ : z++] = seq[i];
        }
        seq.swap(next);
        bits_.emplace_back(bits);
        zeros_.push_back(zeros);
    }
}

void PointSet2D::query(std::uint32_t x1, std::uint32_t x2, std::uint32_t y1, std::uint32_t y2,
                       std::vector<std::uint32_t>& out, WorkCounters* counters) const {
    if (xs_.empty() || x1 > x2 || y1 > y2) {
        return;
    }
    std::size_t begin = std::lower_bound(xs_.begin(), xs_.end(), x1) - xs_.begin();
    std::size_t end = std::upper_bound(xs_.begin(), xs_.end(), x2) - xs_.begin();
    std::size_t y_lo = std::lower_bound(ys_.begin(), ys_.end(), y1) - ys_.begin();
    std::size_t y_hi = std::upper_bound(ys_.begin(), ys_.end(), y2) - ys_.begin();
    if (begin >= end || y_lo >= y_hi) {
        return;
    }
    report(0, begin, end, 0, std::uint32_t(y_lo), std::uint32_t(y_hi - 1), out, counters);
}

void PointSet2D::report(std::size_t level, std::size_t begin, std::size_t end, std::uint32_t prefix,
                        std::uint32_t y_lo, std::uint32_t y_hi, std::vector<std::uint32_t>& out,
                        WorkCounters* counters) const {
    if (counters) {
        ++counters->range_visits;
    }
    const std::size_t levels = bits_.size();
    const std::size_t span_bits = levels - level;
    const std::uint64_t node_lo = std::uint64_t(prefix) << span_bits;
    const std::uint64_t node_hi = node_lo + (std::uint64_t(1) << span_bits) - 1;
    if (node_hi < y_lo || node_lo > y_hi) {
        return;
    }
    if (level == levels) {
        // ranks form a permutation, so a leaf holds exactly one point
        out.push_back(payload_by_y_[prefix]);
        return;
    }
    const auto& bv = bits_[level];
    std::size_t b0 = bv.rank0(begin), e0 = bv.rank0(end);
    if (b0 < e0) {
        report(level + 1, b0, e0, prefix << 1, y_lo, y_hi, out, counters);
    }
    std::size_t b1 = zeros_[level] + (begin - b0), e1 = zeros_[level] + (end - e0);
    if (b1 < e1) {
        report(level + 1, b1, e1, (prefix << 1) | 1, y_lo, y_hi, out, counters);
    }
}

std::size_t PointSet2D::num_words() const {
    std::size_t words = (xs_.size() + ys_.size() + payload_by_y_.size() + 1) / 2 + zeros_.size();
    for (const auto& bv : bits_) {
        words += bv.num_words();
    }
    return words;
}

}
