#include "rect_index/lce.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace rect_index {

SparseTableMin::SparseTableMin(std::vector<std::uint32_t> values) {
    const std::size_t n = values.size();
    table_.push_back(std::move(values));
    for (std::size_t stride = 2; stride <= n; stride *= 2) {
        const auto& prev = table_.back();
        std::vector<std::uint32_t> cur(n - stride + 1);
        const std::size_t half = stride / 2;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            cur[i] = std::min(prev[i], prev[i + half]);
        }
        table_.push_back(std::move(cur));
    }
}

std::uint32_t SparseTableMin::range_min(std::size_t begin, std::size_t end) const {
    assert(begin < end);
    std::uint32_t k = floor_log2(end - begin);
    return std::min(table_[k][begin], table_[k][end - (std::size_t(1) << k)]);
}

std::size_t SparseTableMin::num_entries() const {
    std::size_t total = 0;
    for (const auto& row : table_) {
        total += row.size();
    }
    return total;
}

namespace {

// prefix doubling with two counting-sort passes per round
std::vector<std::uint32_t> build_suffix_array(const std::vector<std::uint32_t>& seq, std::uint32_t sigma) {
    const std::size_t n = seq.size();
    std::vector<std::uint32_t> sa(n), rank(seq), tmp(n), order(n);
    if (n == 0) {
        return sa;
    }
    std::vector<std::uint32_t> count(std::max<std::size_t>(sigma, n) + 1);

    auto sort_by_rank = [&](std::uint32_t range) {
        std::fill(count.begin(), count.begin() + range + 1, 0);
        for (std::size_t i = 0; i < n; ++i) {
            ++count[rank[order[i]] + 1];
        }
        for (std::size_t r = 1; r <= range; ++r) {
            count[r] += count[r - 1];
        }
        for (std::size_t i = 0; i < n; ++i) {
            sa[count[rank[order[i]]]++] = order[i];
        }
    };

    for (std::size_t i = 0; i < n; ++i) {
        order[i] = std::uint32_t(i);
    }
    std::uint32_t range = sigma;
    sort_by_rank(range);
    // re-rank densely by first symbol
    tmp[sa[0]] = 0;
    for (std::size_t r = 1; r < n; ++r) {
        tmp[sa[r]] = tmp[sa[r - 1]] + (seq[sa[r]] != seq[sa[r - 1]] ? 1 : 0);
    }
    rank.swap(tmp);
    range = rank[sa[n - 1]] + 1;

    for (std::size_t h = 1; range < n; h *= 2) {
        // order by second key: suffixes without a second half come first
        std::size_t p = 0;
        for (std::size_t i = n - std::min(h, n); i < n; ++i) {
            order[p++] = std::uint32_t(i);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (sa[r] >= h) {
                order[p++] = std::uint32_t(sa[r] - h);
            }
        }
        sort_by_rank(range);

        auto second = [&](std::size_t i) -> std::int64_t {
            return i + h < n ? std::int64_t(rank[i + h]) : -1;
        };
        tmp[sa[0]] = 0;
        for (std::size_t r = 1; r < n; ++r) {
            bool differs = rank[sa[r]] != rank[sa[r - 1]] || second(sa[r]) != second(sa[r - 1]);
            tmp[sa[r]] = tmp[sa[r - 1]] + (differs ? 1 : 0);
        }
        rank.swap(tmp);
        range = rank[sa[n - 1]] + 1;
    }
    return sa;
}

}

LceOracle::LceOracle(const std::vector<std::vector<std::uint64_t>>& strings) {
    std::vector<std::uint64_t> alphabet;
    for (const auto& s : strings) {
        alphabet.insert(alphabet.end(), s.begin(), s.end());
    }
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    // separator of string s is s; live symbols are shifted above all separators
    const std::uint32_t seps = std::uint32_t(strings.size());
    for (std::size_t s = 0; s < strings.size(); ++s) {
        starts_.push_back(std::uint32_t(seq_.size()));
        for (auto c : strings[s]) {
            seq_.push_back(seps + std::uint32_t(std::lower_bound(alphabet.begin(), alphabet.end(), c) - alphabet.begin()));
        }
        seq_.push_back(std::uint32_t(s));
    }
    const std::size_t n = seq_.size();
    sa_ = build_suffix_array(seq_, seps + std::uint32_t(alphabet.size()));

    isa_.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
        isa_[sa_[r]] = std::uint32_t(r);
    }

    // Kasai et al.
    lcp_.assign(n, 0);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (isa_[i] == 0) {
            h = 0;
            continue;
        }
        std::size_t j = sa_[isa_[i] - 1];
        while (i + h < n && j + h < n && seq_[i + h] == seq_[j + h]) {
            ++h;
        }
        lcp_[isa_[i]] = std::uint32_t(h);
        if (h > 0) {
            --h;
        }
    }
    rmq_ = SparseTableMin(lcp_);
}

std::size_t LceOracle::lce0(std::size_t p, std::size_t q) const {
    if (p == q) {
        return seq_.size() - p;
    }
    std::size_t a = isa_[p], b = isa_[q];
    if (a > b) {
        std::swap(a, b);
    }
    return rmq_.range_min(a + 1, b + 1);
}

std::size_t LceOracle::lce(std::size_t p, std::size_t q) const {
    assert(p >= 1 && p <= seq_.size() && q >= 1 && q <= seq_.size());
    return lce0(p - 1, q - 1);
}

std::size_t LceOracle::num_words() const {
    std::size_t u32 = seq_.size() + starts_.size() + sa_.size() + isa_.size() + lcp_.size() + rmq_.num_entries();
    return (u32 + 1) / 2;
}

StripLceOracle::StripLceOracle(const KmrTable& kmr, bool reversed)
    : StripLceOracle(kmr, reversed, 0, kmr.num_levels() == 0 ? 0 : std::uint32_t(kmr.num_levels() - 1)) {}

StripLceOracle::StripLceOracle(const KmrTable& kmr, bool reversed, std::uint32_t min_level, std::uint32_t max_level)
    : height_(kmr.height()) {
    if (kmr.num_levels() == 0) {
        return;
    }
    max_level = std::min<std::uint32_t>(max_level, std::uint32_t(kmr.num_levels() - 1));
    levels_.resize(max_level + 1);
    for (std::uint32_t k = min_level; k <= max_level; ++k) {
        const std::size_t strips = kmr.level_width(k);
        std::vector<std::vector<std::uint64_t>> strings(strips, std::vector<std::uint64_t>(height_));
        auto ranks = kmr.level(k);
        for (std::size_t c = 0; c < strips; ++c) {
            for (std::size_t r = 0; r < height_; ++r) {
                std::size_t src_row = reversed ? height_ - 1 - r : r;
                strings[c][r] = ranks[src_row * strips + c];
            }
        }
        levels_[k] = LceOracle(strings);
    }
}

std::size_t StripLceOracle::strip_lce(std::size_t i, std::size_t j, std::size_t i2, std::size_t j2, std::size_t w) const {
    assert(j >= 1 && j <= height_ + 1 && j2 >= 1 && j2 <= height_ + 1);
    if (j > height_ || j2 > height_) {
        return 0;
    }
    const std::uint32_t k = floor_log2(w);
    assert(has_level(k));
    const auto& oracle = levels_[k];
    const std::size_t shift = w - (std::size_t(1) << k);
    std::size_t left = oracle.common_prefix(i - 1, j - 1, i2 - 1, j2 - 1);
    if (shift == 0 || left == 0) {
        return left;
    }
    std::size_t right = oracle.common_prefix(i - 1 + shift, j - 1, i2 - 1 + shift, j2 - 1);
    return std::min(left, right);
}

std::size_t StripLceOracle::num_words() const {
    std::size_t total = 0;
    for (const auto& o : levels_) {
        total += o.num_words();
    }
    return total;
}

}
