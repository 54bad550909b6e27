// rect-index: build a 2D index in memory and query, verify or benchmark it.
//
// exit codes: 0 ok, 1 usage, 2 I/O or format error, 3 verification mismatch

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rect_index/index2d.hpp"
#include "rect_index/reference.hpp"
#include "rect_index/workload.hpp"

using namespace rect_index;

namespace {

enum exit_code { ok = 0, usage = 1, io_error = 2, mismatch = 3 };

struct RandomSpec {
    std::vector<std::size_t> dims;

    bool given() const { return !dims.empty(); }
};

void print_occurrences(const std::vector<Occurrence>& occ) {
    for (const auto& o : occ) {
        std::cout << o.row << '\t' << o.col << '\n';
    }
}

nlohmann::ordered_json occurrences_json(const std::vector<Occurrence>& occ) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& o : occ) {
        arr.push_back({{"row", o.row}, {"col", o.col}});
    }
    return arr;
}

int cmd_query(const std::string& text_path, const std::vector<std::string>& pattern_paths, const std::string& format) {
    Grid2D text = read_grid_file(text_path);
    std::vector<Grid2D> patterns;
    for (const auto& p : pattern_paths) {
        patterns.push_back(read_grid_file(p));
    }
    Index2D index(text);
    const bool several = patterns.size() > 1;
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        auto occ = index.query(patterns[i]);
        if (format == "json") {
            if (several) {
                all.push_back({{"pattern", pattern_paths[i]}, {"occurrences", occurrences_json(occ)}});
            }
            else {
                all = occurrences_json(occ);
            }
            continue;
        }
        if (several) {
            std::cout << "# " << pattern_paths[i] << '\n';
        }
        print_occurrences(occ);
    }
    if (format == "json") {
        std::cout << all.dump() << '\n';
    }
    return ok;
}

Grid2D load_or_generate(const std::string& text_path, const RandomSpec& random, Workload& gen) {
    if (random.given()) {
        return gen.random_grid(random.dims[0], random.dims[1], std::uint32_t(random.dims[2]));
    }
    return read_grid_file(text_path);
}

int cmd_verify(const std::string& text_path, const RandomSpec& random, std::size_t num_patterns, std::uint64_t seed) {
    Workload gen(seed);
    Grid2D text = load_or_generate(text_path, random, gen);
    const std::uint32_t sigma = random.given() ? std::uint32_t(random.dims[2]) : 26;
    Index2D index(text);

    const Workload::Shape shapes[] = {Workload::Shape::tall, Workload::Shape::square, Workload::Shape::wide};
    const Workload::Kind kinds[] = {Workload::Kind::planted, Workload::Kind::planted, Workload::Kind::mutated,
                                    Workload::Kind::random};
    std::size_t passed = 0;
    for (std::size_t i = 0; i < num_patterns; ++i) {
        Grid2D pattern = gen.pattern(text, shapes[i % 3], kinds[i % 4], sigma);
        auto got = index.query(pattern);
        auto want = reference::naive_search_2d(text, pattern);
        if (got == want) {
            ++passed;
            continue;
        }
        std::cerr << "mismatch on pattern " << i + 1 << " (seed " << seed << "): index reports " << got.size()
                  << ", scan reports " << want.size() << "\ntext:\n"
                  << serialize_grid(text) << "pattern:\n"
                  << serialize_grid(pattern);
    }
    std::cout << passed << '/' << num_patterns << " ok\n";
    return passed == num_patterns ? ok : mismatch;
}

int cmd_bench(const std::string& text_path, const RandomSpec& random, std::vector<std::size_t> widths,
              std::size_t num_patterns, std::uint64_t seed) {
    Workload gen(seed);
    Grid2D text = load_or_generate(text_path, random, gen);
    const std::size_t n = text.size();
    if (widths.empty()) {
        std::size_t lg = std::bit_width(n) - 1;
        widths = {1, 2, lg, lg + 1, std::size_t(std::sqrt(double(n)))};
    }

    auto start = std::chrono::steady_clock::now();
    Index2D index(text);
    double build_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    SpaceStats s = index.space_stats();

    std::cout << "key\tvalue\n";
    std::cout << "height\t" << text.height() << "\nwidth\t" << text.width() << "\nn\t" << n << '\n';
    std::cout << "build_seconds\t" << build_s << '\n';
    std::cout << "small_width_threshold\t" << index.small_width_threshold() << '\n';
    std::cout << "text_words\t" << s.text_words << "\nkmr_words\t" << s.kmr_words << "\nfragment_trie_words\t"
              << s.fragment_trie_words << "\nsuffix_index_words\t" << s.suffix_index_words
              << "\nlong_index_trie_words\t" << s.long_index_trie_words << "\npoint_words\t" << s.point_words
              << "\ntotal_words\t" << s.total_words() << "\nwords_per_n_log_n\t"
              << double(s.total_words()) / (double(n) * std::max(1.0, std::log2(double(n))))
              << "\ntrie_nodes\t" << s.trie_nodes << "\ntrie_leaves\t" << s.trie_leaves << "\ncuts\t" << s.cuts
              << "\npoints\t" << s.points << "\nlce_build_peak_words\t" << s.lce_build_peak_words << '\n';
    // space model c * n * (floor(lg W) + floor(lg H) + 2)
    const double model = double(n) * double(std::bit_width(text.width()) + std::bit_width(text.height()));
    std::cout << "words_per_space_model\t" << double(s.total_words()) / model << '\n';
    std::cout << "range_structure\twavelet matrix, O((1+k) log N) per rectangle (epsilon = 1)\n";

    // planted w x w patterns, or as close to square as the text allows
    std::cout << "\nwidth\tpattern\tqueries\tmean_query_us\tmean_work\tmean_occurrences\n";
    for (std::size_t w : widths) {
        if (w == 0 || w > text.width()) {
            std::cout << w << "\t-\t0\t-\t-\t-\n";
            continue;
        }
        const std::size_t h = std::min(w, text.height());
        double total_us = 0, total_work = 0, total_occ = 0;
        for (std::size_t q = 0; q < num_patterns; ++q) {
            std::size_t r = gen.uniform(1, text.height() - h + 1), c = gen.uniform(1, text.width() - w + 1);
            std::vector<GridSymbol> cells;
            for (std::size_t i = 0; i < h; ++i) {
                auto row = text.row(r + i).subspan(c - 1, w);
                cells.insert(cells.end(), row.begin(), row.end());
            }
            Grid2D pattern(h, w, std::move(cells));
            WorkCounters counters;
            auto t0 = std::chrono::steady_clock::now();
            auto occ = index.query(pattern, &counters);
            total_us += std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - t0).count();
            total_work += double(counters.total());
            total_occ += double(occ.size());
        }
        const double k = double(std::max<std::size_t>(num_patterns, 1));
        std::cout << w << '\t' << h << 'x' << w << '\t' << num_patterns << '\t' << total_us / k << '\t'
                  << total_work / k << '\t' << total_occ / k << '\n';
    }
    return ok;
}

}

int main(int argc, char** argv) {
    CLI::App app{"Rectangular pattern index over 2D texts"};
    app.require_subcommand(1);

    std::string text_path, format = "tsv";
    std::vector<std::string> pattern_paths;
    auto* query = app.add_subcommand("query", "print occurrences of each pattern in the text");
    query->add_option("text", text_path, "text grid file")->required();
    query->add_option("patterns", pattern_paths, "pattern grid files")->required();
    query->add_option("--format", format, "output format")->check(CLI::IsMember({"tsv", "json"}));

    RandomSpec random;
    std::size_t num_patterns = 100;
    std::uint64_t seed = 0;
    auto* verify = app.add_subcommand("verify", "compare index answers with a brute-force scan");
    verify->add_option("text", text_path, "text grid file");
    verify->add_option("--random", random.dims, "random text: H W sigma")->expected(3);
    verify->add_option("--patterns", num_patterns, "number of sampled patterns");
    verify->add_option("--seed", seed, "generator seed");

    std::vector<std::size_t> widths;
    std::size_t bench_patterns = 20;
    auto* bench = app.add_subcommand("bench", "report build time, space counters and query cost");
    bench->add_option("text", text_path, "text grid file");
    bench->add_option("--random", random.dims, "random text: H W sigma")->expected(3);
    bench->add_option("--widths", widths, "pattern widths (default 1,2,lg n,lg n+1,sqrt n)")->delimiter(',');
    bench->add_option("--patterns", bench_patterns, "queries per width");
    bench->add_option("--seed", seed, "generator seed");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    for (auto* sub : {verify, bench}) {
        if (!sub->parsed()) {
            continue;
        }
        if (random.given() == !text_path.empty()) {
            std::cerr << "give either a text file or --random H W sigma\n";
            return usage;
        }
        if (random.given() && (random.dims[0] == 0 || random.dims[1] == 0 || random.dims[2] == 0 ||
                               random.dims[2] > 256 - 'a')) {
            std::cerr << "--random needs positive H, W and sigma <= " << 256 - 'a' << '\n';
            return usage;
        }
    }

    try {
        if (query->parsed()) {
            return cmd_query(text_path, pattern_paths, format);
        }
        if (verify->parsed()) {
            return cmd_verify(text_path, random, num_patterns, seed);
        }
        return cmd_bench(text_path, random, widths, bench_patterns, seed);
    }
    catch (const std::ios_base::failure& e) {
        std::cerr << "rect-index: " << e.what() << '\n';
    }
    catch (const FormatError& e) {
        std::cerr << "rect-index: " << e.what() << '\n';
    }
    catch (const std::invalid_argument& e) {
        std::cerr << "rect-index: " << e.what() << '\n';
    }
    return io_error;
}
