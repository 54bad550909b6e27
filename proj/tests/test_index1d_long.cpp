#include "doctest.h"

#include <algorithm>
#include <random>

#include "rect_index/index1d_long.hpp"
#include "rect_index/reference.hpp"
#include "test_util.hpp"

using namespace rect_index;

namespace {

std::vector<Hit> naive_hits(const std::vector<std::vector<Symbol>>& texts, std::span<const Symbol> pattern) {
    std::vector<Hit> out;
    for (std::size_t t = 0; t < texts.size(); ++t) {
        for (std::size_t p : reference::naive_search_1d(texts[t], pattern)) {
            out.push_back(Hit{t + 1, p});
        }
    }
    return out;
}

std::vector<Hit> sorted(std::vector<Hit> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<std::vector<Symbol>> strings_of_length(std::initializer_list<std::size_t> lens) {
    std::vector<std::vector<Symbol>> out;
    for (auto len : lens) {
        out.push_back(std::vector<Symbol>(len, 'a'));
    }
    return out;
}

}

TEST_CASE("cut placement") {
    SequenceCollection seven(strings_of_length({7}));
    auto i1 = build_long_index(seven.view(), 2, seven.make_lce());
    CHECK(i1.cuts().size() == 4);

    SequenceCollection four(strings_of_length({4}));
    auto i2 = build_long_index(four.view(), 4, four.make_lce());
    REQUIRE(i2.cuts().size() == 2);
    CHECK(i2.cuts()[0].pos == 0);
    CHECK(i2.cuts()[1].pos == 4);

    SequenceCollection mixed(strings_of_length({5, 6}));
    auto i3 = build_long_index(mixed.view(), 3, mixed.make_lce());
    CHECK(i3.cuts().size() == 5);

    // texts shorter than w cannot hold a match and get no cuts
    SequenceCollection short_texts(strings_of_length({2, 8}));
    auto i4 = build_long_index(short_texts.view(), 3, short_texts.make_lce());
    CHECK(i4.cuts().size() == 3);
    CHECK(i4.prefix_trie().num_leaves() == 3);
    CHECK(i4.suffix_trie().num_leaves() == 3);
    CHECK(i4.points().size() == 3);
}

TEST_CASE("long index examples") {
    SequenceCollection texts({test::symbols("ababa")});
    auto index = build_long_index(texts.view(), 2, texts.make_lce());
    CHECK(sorted(index.query(test::symbols("aba"))) == std::vector<Hit>{{1, 1}, {1, 3}});
    CHECK(sorted(index.query(test::symbols("ababa"))) == std::vector<Hit>{{1, 1}});
    CHECK(index.query(test::symbols("ac")).empty());
    CHECK(index.query(test::symbols("ababab")).empty());

    SequenceCollection none(std::vector<std::vector<Symbol>>{});
    auto empty = build_long_index(none.view(), 2, none.make_lce());
    CHECK(empty.query(test::symbols("ab")).empty());
}

TEST_CASE("long index against the scan") {
    std::mt19937_64 rng(51);
    for (std::size_t w : {1, 2, 3, 5, 8}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::uint32_t sigma = 1 + rng() % 3;
            std::size_t count = 1 + rng() % 5;
            std::vector<std::vector<Symbol>> raw;
            for (std::size_t t = 0; t < count; ++t) {
                raw.push_back(test::random_string(rng, 1 + rng() % 30, sigma));
            }
            SequenceCollection texts(raw);
            auto index = build_long_index(texts.view(), w, texts.make_lce());
            for (int q = 0; q < 40; ++q) {
                std::size_t h = w + rng() % (w + 4);
                std::vector<Symbol> pattern;
                const auto& t = raw[rng() % raw.size()];
                if (rng() % 3 != 0 && t.size() >= h) {
                    std::size_t start = rng() % (t.size() - h + 1);
                    pattern.assign(t.begin() + start, t.begin() + start + h);
                }
                else {
                    pattern = test::random_string(rng, h, sigma);
                }
                auto got = index.query(pattern);
                // each occurrence is reported by exactly one anchor
                REQUIRE(got.size() == sorted(got).size());
                auto s = sorted(got);
                CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
                REQUIRE(s == naive_hits(raw, pattern));
            }
        }
    }
}

TEST_CASE("long index space is linear in the number of cuts") {
    std::mt19937_64 rng(52);
    for (std::size_t w : {2, 4, 8}) {
        std::vector<std::vector<Symbol>> raw;
        for (int t = 0; t < 64; ++t) {
            raw.push_back(test::random_string(rng, 64, 2));
        }
        SequenceCollection texts(raw);
        auto index = build_long_index(texts.view(), w, texts.make_lce());
        const std::size_t cuts = 64 * (64 / w + 1);
        CHECK(index.cuts().size() == cuts);
        CHECK(index.prefix_trie().num_nodes() < 2 * cuts + 1);
        CHECK(index.suffix_trie().num_nodes() < 2 * cuts + 1);
        // a generous per-cut budget; the point set adds log2(cuts) bits per point
        CHECK(index.num_words() <= 40 * cuts);
    }
}
