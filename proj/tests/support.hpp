#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace qsign::test {

/// Seed for randomized tests: --seed=N on the command line, else QSIGN_SEED, else a fixed default.
std::uint64_t seed();

/// Independent stream per test, derived from the global seed and a label.
inline std::mt19937_64 rng(std::string_view label)
{
    std::uint64_t h = seed() ^ 0x9e3779b97f4a7c15ULL;
    for (char c : label) {
        h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
    }
    return std::mt19937_64(h);
}

} // namespace qsign::test
