#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

#include "rect_index/lce.hpp"
#include "rect_index/trie.hpp"
#include "test_util.hpp"
#include "trie_oracle.hpp"

using namespace rect_index;
using test::VectorSource;
using test::canonical;
using test::naive_canonical;

namespace {

bool has_prefix(const std::vector<Symbol>& s, const std::vector<Symbol>& p) {
    return p.size() <= s.size() && std::equal(p.begin(), p.end(), s.begin());
}

// LCE answered by a suffix-array oracle instead of brute force
struct OracleSource : VectorSource {
    LceOracle oracle;
    explicit OracleSource(std::vector<std::vector<Symbol>> s) : VectorSource{std::move(s)}, oracle(strings) {}
    std::size_t lce(std::size_t a, std::size_t b) const { return oracle.common_prefix(a, 0, b, 0); }
};

void check_ranges(const CompactedTrie& trie) {
    for (std::uint32_t v = 0; v < trie.num_nodes(); ++v) {
        auto kids = trie.children(v);
        if (kids.empty()) {
            continue;
        }
        std::uint32_t total = 0, expect_lo = trie.node(v).leaf_lo;
        for (auto c : kids) {
            const auto& cn = trie.node(c);
            REQUIRE(cn.leaf_lo == expect_lo);
            expect_lo = cn.leaf_hi + 1;
            total += cn.leaf_hi - cn.leaf_lo + 1;
        }
        CHECK(total == trie.node(v).leaf_hi - trie.node(v).leaf_lo + 1);
        if (v != trie.root()) {
            CHECK(kids.size() >= 2);
        }
    }
}

}

TEST_CASE("trie of ab, abc, b") {
    VectorSource src{{test::symbols("ab"), test::symbols("abc"), test::symbols("b")}};
    CompactedTrie trie = CompactedTrie::build(src);
    CHECK(trie.num_leaves() == 3);
    CHECK(trie.num_nodes() == 5);
    CHECK(std::vector<std::uint32_t>(trie.leaf_payloads().begin(), trie.leaf_payloads().end()) ==
          std::vector<std::uint32_t>{0, 1, 2});
    CHECK(canonical(trie, src) == naive_canonical(src.strings));

    auto ab = test::symbols("ab");
    auto locus = trie.prefix_search(src, 2, [&](std::size_t i) { return ab[i]; });
    REQUIRE(locus.has_value());
    CHECK(locus->edge_offset == 0);
    CHECK(trie.node(locus->node).depth == 2);
    CHECK_FALSE(trie.is_leaf(locus->node));
    CHECK(trie.leaf_range(*locus) == std::pair<std::uint32_t, std::uint32_t>{1, 2});
    auto under = trie.leaves_under(*locus);
    CHECK(std::vector<std::uint32_t>(under.begin(), under.end()) == std::vector<std::uint32_t>{0, 1});

    auto a = trie.prefix_search(src, 1, [&](std::size_t i) { return ab[i]; });
    REQUIRE(a.has_value());
    CHECK(a->node == locus->node);
    CHECK(a->edge_offset == 1);
    CHECK(a->depth == 1);

    auto empty = trie.prefix_search(src, 0, [&](std::size_t) { return Symbol(0); });
    REQUIRE(empty.has_value());
    CHECK(empty->node == trie.root());
    CHECK(trie.leaf_range(*empty) == std::pair<std::uint32_t, std::uint32_t>{1, 3});
    CHECK(trie.leaves_under(*empty).size() == 3);

    auto ba = test::symbols("ba");
    CHECK_FALSE(trie.prefix_search(src, 2, [&](std::size_t i) { return ba[i]; }).has_value());

    auto abc = test::symbols("abc");
    auto leaf = trie.prefix_search(src, 3, [&](std::size_t i) { return abc[i]; });
    REQUIRE(leaf.has_value());
    CHECK(trie.is_leaf(leaf->node));
    CHECK(trie.leaf_range(*leaf) == std::pair<std::uint32_t, std::uint32_t>{2, 2});
    CHECK(trie.leaves_under(*leaf).front() == 1);
    auto abcd = test::symbols("abcd");
    CHECK_FALSE(trie.prefix_search(src, 4, [&](std::size_t i) { return abcd[i]; }).has_value());
}

TEST_CASE("single string and nested prefixes") {
    VectorSource one{{test::symbols("xyz")}};
    CompactedTrie t1 = CompactedTrie::build(one);
    CHECK(t1.num_nodes() == 2);
    CHECK(t1.children(t1.root()).size() == 1);
    CHECK(t1.is_leaf(t1.children(t1.root())[0]));

    VectorSource nested{{test::symbols("a"), test::symbols("aa"), test::symbols("aaa")}};
    CompactedTrie t2 = CompactedTrie::build(nested);
    CHECK(canonical(t2, nested) == naive_canonical(nested.strings));
    CHECK(canonical(t2, nested) == "{[97]{$0;[97]{$1;[97]L2}}}");
    CHECK(t2.num_nodes() == 6);

    VectorSource none{{}};
    CompactedTrie t0 = CompactedTrie::build(none);
    CHECK(t0.num_nodes() == 1);
    CHECK(t0.num_leaves() == 0);
    CHECK(t0.leaves_under(t0.root_locus()).empty());

    // duplicates and the empty string each keep their own leaf
    VectorSource dup{{test::symbols("ab"), {}, test::symbols("ab"), {}}};
    CompactedTrie t3 = CompactedTrie::build(dup);
    CHECK(t3.num_leaves() == 4);
    CHECK(canonical(t3, dup) == naive_canonical(dup.strings));
    CHECK(canonical(t3, dup) == "{$1;$3;[97,98]{$0;$2;}}");
}

TEST_CASE("sorted insertion matches naive insertion") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        std::uint32_t sigma = 1 + rng() % 4;
        std::size_t budget = 1 + rng() % 512;
        std::vector<std::vector<Symbol>> strings;
        std::size_t used = 0;
        while (used < budget) {
            std::size_t len = rng() % std::min<std::size_t>(budget - used + 1, 1 + rng() % 24);
            // reuse existing strings as prefixes now and then
            if (!strings.empty() && rng() % 4 == 0) {
                auto base = strings[rng() % strings.size()];
                base.resize(std::min(base.size(), len));
                strings.push_back(base);
            }
            else {
                strings.push_back(test::random_string(rng, len, sigma));
            }
            used += std::max<std::size_t>(len, 1);
        }
        VectorSource src{strings};
        CompactedTrie trie = CompactedTrie::build(src);
        REQUIRE(canonical(trie, src) == naive_canonical(strings));
        CHECK(trie.num_leaves() == strings.size());
        CHECK(trie.num_nodes() - 1 < 2 * strings.size());
        CHECK(trie.leaf_range(trie.root_locus()) ==
              std::pair<std::uint32_t, std::uint32_t>{1, std::uint32_t(strings.size())});
        check_ranges(trie);

        OracleSource osrc(strings);
        CHECK(canonical(CompactedTrie::build(osrc), osrc) == canonical(trie, src));
    }
}

TEST_CASE("prefix search finds exactly the stored prefixes") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        std::uint32_t sigma = 1 + rng() % 3;
        std::vector<std::vector<Symbol>> strings;
        for (std::size_t n = 1 + rng() % 20; n > 0; --n) {
            strings.push_back(test::random_string(rng, rng() % 8, sigma));
        }
        VectorSource src{strings};
        CompactedTrie trie = CompactedTrie::build(src);

        auto expected_ids = [&](const std::vector<Symbol>& q) {
            std::set<std::uint32_t> ids;
            for (std::size_t i = 0; i < strings.size(); ++i) {
                if (has_prefix(strings[i], q)) {
                    ids.insert(std::uint32_t(i));
                }
            }
            return ids;
        };
        auto search = [&](const std::vector<Symbol>& q) {
            return trie.prefix_search(src, q.size(), [&](std::size_t i) { return q[i]; });
        };

        for (const auto& s : strings) {
            for (std::size_t len = 0; len <= s.size(); ++len) {
                std::vector<Symbol> q(s.begin(), s.begin() + len);
                auto locus = search(q);
                REQUIRE(locus.has_value());
                CHECK(locus->depth == len);
                auto under = trie.leaves_under(*locus);
                CHECK(std::set<std::uint32_t>(under.begin(), under.end()) == expected_ids(q));
            }
        }
        // every query of length <= 5 over sigma + 1 symbols
        for (int q_trial = 0; q_trial < 200; ++q_trial) {
            auto q = test::random_string(rng, rng() % 6, sigma + 1);
            auto expect = expected_ids(q);
            auto locus = search(q);
            REQUIRE(locus.has_value() == !expect.empty());
            if (locus) {
                auto under = trie.leaves_under(*locus);
                CHECK(std::set<std::uint32_t>(under.begin(), under.end()) == expect);
            }
        }
    }
}

TEST_CASE("wide nodes use the sorted child table") {
    std::vector<std::vector<Symbol>> strings;
    for (Symbol c = 0; c < 40; ++c) {
        strings.push_back({c * 3, 1});
    }
    VectorSource src{strings};
    CompactedTrie trie = CompactedTrie::build(src);
    CHECK(trie.children(trie.root()).size() == 40);
    WorkCounters counters;
    for (Symbol c = 0; c < 120; ++c) {
        std::vector<Symbol> q{c};
        bool found = trie.prefix_search(src, 1, [&](std::size_t i) { return q[i]; }, &counters).has_value();
        CHECK(found == (c % 3 == 0));
    }
    CHECK(counters.trie_steps == 120);
}
