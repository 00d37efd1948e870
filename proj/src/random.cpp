#include "hcn/random.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hcn {

std::size_t Rng::index(std::size_t n)
{
    if (n == 0) {
        throw std::invalid_argument("Rng::index needs a positive bound");
    }
    const std::uint64_t bound = n;
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()
                                - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) {
        x = engine_();
    }
    return static_cast<std::size_t>(x % bound);
}

double Rng::exponential(double mean)
{
    return -mean * std::log1p(-uniform01());
}

double Rng::normal()
{
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags)
{
    std::uint64_t state = mix64(base);
    for (std::uint64_t tag : tags) {
        state = mix64(state ^ mix64(tag + 0x632BE59BD9B4E019ULL));
    }
    return state;
}

}  // namespace hcn
