#pragma once

#include <cstdint>

namespace qgc {

// Seeded, stream-splittable generator.  Substream states are derived by
// splitmix64 from (seed, trial index) and advanced by xorshift64*.  Bounded
// draws take the high bits via multiply-shift: the low output bit of
// xorshift64* is a raw LFSR bit, which F_2 rank statistics can see.  The
// derivation and the draw are part of the stable output contract: identical
// (seed, trial) always yields identical values.
struct RngStream {
    std::uint64_t state = 0x853c49e6748fea9bULL;

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    static RngStream substream(std::uint64_t seed, std::uint64_t trial) {
        RngStream r;
        r.state = splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1)));
        if (r.state == 0) r.state = 0x853c49e6748fea9bULL;
        return r;
    }

    std::uint64_t next() {
        std::uint64_t x = state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state = x;
        return x * 0x2545f4914f6cdd1dULL;
    }

    std::uint32_t below(std::uint32_t n) {
        return static_cast<std::uint32_t>(static_cast<unsigned __int128>(next()) * n >> 64);
    }
};

}  // namespace qgc
