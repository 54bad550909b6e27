#include "doctest.h"

#include <algorithm>
#include <random>

#include "rect_index/index1d_suffix.hpp"
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

}

TEST_CASE("suffix index examples") {
    SequenceCollection texts({test::symbols("ababa")});
    auto index = build_suffix_index(texts.view(), texts.make_lce());
    CHECK(sorted(index.query(test::symbols("aba"))) == std::vector<Hit>{{1, 1}, {1, 3}});
    CHECK(sorted(index.query(test::symbols("ababa"))) == std::vector<Hit>{{1, 1}});
    CHECK(index.query(test::symbols("ababab")).empty());
    CHECK(index.query(test::symbols("c")).empty());
    CHECK(index.query(std::vector<Symbol>{}).empty());
    CHECK(index.trie().num_leaves() == 5);

    SequenceCollection aa({test::symbols("aa")});
    CHECK(build_suffix_index(aa.view(), aa.make_lce()).trie().num_leaves() == 2);

    SequenceCollection two({test::symbols("ab"), test::symbols("ba")});
    auto idx2 = build_suffix_index(two.view(), two.make_lce());
    CHECK(idx2.trie().num_leaves() == 4);
    CHECK(sorted(idx2.query(test::symbols("a"))) == std::vector<Hit>{{1, 1}, {2, 2}});
    CHECK(sorted(idx2.query(test::symbols("ba"))) == std::vector<Hit>{{2, 1}});

    SequenceCollection none(std::vector<std::vector<Symbol>>{});
    auto idx0 = build_suffix_index(none.view(), none.make_lce());
    CHECK(idx0.trie().num_leaves() == 0);
    CHECK(idx0.query(test::symbols("a")).empty());
}

TEST_CASE("suffix index against the scan") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        std::uint32_t sigma = 1 + rng() % 4;
        bool uniform = rng() % 2 == 0;
        std::size_t count = 1 + rng() % 6, base_len = 1 + rng() % 20;
        std::vector<std::vector<Symbol>> raw;
        for (std::size_t t = 0; t < count; ++t) {
            raw.push_back(test::random_string(rng, uniform ? base_len : 1 + rng() % 20, sigma));
        }
        SequenceCollection texts(raw);
        auto index = build_suffix_index(texts.view(), texts.make_lce());
        std::size_t total = 0;
        for (const auto& t : raw) {
            total += t.size();
        }
        CHECK(index.trie().num_leaves() == total);

        for (int q = 0; q < 50; ++q) {
            std::vector<Symbol> pattern;
            if (rng() % 2 == 0) {
                const auto& t = raw[rng() % raw.size()];
                std::size_t start = rng() % t.size();
                std::size_t len = 1 + rng() % (t.size() - start);
                pattern.assign(t.begin() + start, t.begin() + start + len);
            }
            else {
                pattern = test::random_string(rng, 1 + rng() % 5, sigma + 1);
            }
            WorkCounters counters;
            auto got = index.query(pattern, &counters);
            auto want = naive_hits(raw, pattern);
            REQUIRE(sorted(got) == want);
            CHECK(counters.symbol_comparisons + counters.trie_steps <= 2 * pattern.size());
        }
    }
}
