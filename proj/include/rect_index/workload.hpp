#ifndef rect_index_workload_hpp
#define rect_index_workload_hpp

#include <cstdint>
#include <random>

#include "rect_index/grid.hpp"

namespace rect_index {

/*
 * Seeded generators for texts and query patterns. Symbols are drawn as
 * 'a' + (mt19937_64() % sigma); only the raw engine output is used, so
 * results are identical across standard library implementations.
 */
class Workload {
public:
    enum class Shape { tall, square, wide, any };
    enum class Kind { planted, mutated, random };

    explicit Workload(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        return lo + rng_() % (hi - lo + 1);
    }

    Grid2D random_grid(std::size_t height, std::size_t width, std::uint32_t sigma);

    /*
     * Pattern for `text`: planted patterns are copied from a random position,
     * mutated ones additionally get one cell changed, random ones are drawn
     * i.i.d. with sides at most 3. The shape is honored when the text allows it.
     */
    Grid2D pattern(const Grid2D& text, Shape shape, Kind kind, std::uint32_t sigma);

    std::mt19937_64& engine() { return rng_; }

private:
    std::pair<std::size_t, std::size_t> dimensions(std::size_t max_h, std::size_t max_w, Shape shape);

    std::mt19937_64 rng_;
};

}

#endif /* rect_index_workload_hpp */
