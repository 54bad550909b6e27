#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "rect_index/grid.hpp"
#include "test_util.hpp"

using namespace rect_index;

TEST_CASE("parse_grid reads equal-length lines") {
    Grid2D g = parse_grid("ab\ncd\n");
    CHECK(g.height() == 2);
    CHECK(g.width() == 2);
    CHECK(g.at(1, 1) == 'a');
    CHECK(g.at(1, 2) == 'b');
    CHECK(g.at(2, 1) == 'c');
    CHECK(g.at(2, 2) == 'd');

    Grid2D one = parse_grid("a\n");
    CHECK(one.height() == 1);
    CHECK(one.width() == 1);
    CHECK(one.size() == 1);

    // CRLF and a missing trailing newline
    CHECK(parse_grid("ab\r\ncd") == g);

    std::istringstream in("xyz\nuvw\n");
    Grid2D s = parse_grid(in);
    CHECK(s.height() == 2);
    CHECK(s.width() == 3);
}

TEST_CASE("parse_grid rejects malformed input") {
    CHECK_THROWS_AS(parse_grid("ab\ncde\n"), FormatError);
    CHECK_THROWS_AS(parse_grid(""), FormatError);
    CHECK_THROWS_AS(parse_grid("ab\n\ncd\n"), FormatError);
    CHECK_THROWS_AS(read_grid_file("/nonexistent/grid.txt"), std::ios_base::failure);
    CHECK_THROWS_AS(Grid2D(0, 3, {}), std::invalid_argument);
    CHECK_THROWS_AS(Grid2D(2, 2, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("transpose") {
    Grid2D single = test::grid({"x"});
    CHECK(transpose(single) == single);

    CHECK(transpose(test::grid({"ab", "cd"})) == test::grid({"ac", "bd"}));
    CHECK(transpose(test::grid({"abc"})) == test::grid({"a", "b", "c"}));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t h = 1 + rng() % 9, w = 1 + rng() % 9;
        Grid2D g = test::random_grid(rng, h, w, 5);
        Grid2D t = transpose(g);
        REQUIRE(t.height() == w);
        REQUIRE(t.width() == h);
        for (std::size_t i = 1; i <= h; ++i) {
            for (std::size_t j = 1; j <= w; ++j) {
                CHECK(t.at(j, i) == g.at(i, j));
            }
        }
        CHECK(transpose(t) == g);
        std::vector<GridSymbol> a(g.cells().begin(), g.cells().end()), b(t.cells().begin(), t.cells().end());
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("char_at agrees with the input bytes") {
    std::mt19937_64 rng(5);
    for (std::size_t h = 1; h <= 16; ++h) {
        for (std::size_t w = 1; w <= 16; ++w) {
            std::string text;
            for (std::size_t i = 0; i < h; ++i) {
                for (std::size_t j = 0; j < w; ++j) {
                    text.push_back(char('!' + rng() % 90));
                }
                text.push_back('\n');
            }
            Grid2D g = parse_grid(text);
            for (std::size_t i = 1; i <= h; ++i) {
                for (std::size_t j = 1; j <= w; ++j) {
                    REQUIRE(char_at(g, i, j) == GridSymbol(static_cast<unsigned char>(text[(i - 1) * (w + 1) + (j - 1)])));
                }
            }
            CHECK(char_at(g, 1, 1) == GridSymbol(static_cast<unsigned char>(text[0])));
            // round trip
            CHECK(serialize_grid(g) == text);
        }
    }
}
