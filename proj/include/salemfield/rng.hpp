#ifndef SALEMFIELD_RNG_HPP
#define SALEMFIELD_RNG_HPP

// Counter-based generator (splitmix64 over seed + counter). Pure integer
// arithmetic, so seeded trials reproduce bit-for-bit on every platform.

#include <cstdint>

namespace salemfield {

struct CounterRng {
    std::uint64_t seed;
    std::uint64_t counter = 0;

    std::uint64_t next() {
        std::uint64_t z = seed + (++counter) * 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

} // namespace salemfield

#endif
