// Deterministic seeding utilities. All randomized operations in the
// workbench draw from these streams so every published number replays
// from its seed.
#pragma once

#include <cstdint>

#include "kasumi/types.hpp"

namespace kasumi {

// SplitMix64 finalizer; a bijection on 64-bit words.
inline uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Standard splitmix64 stream.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    HalfWord16 next_u16() { return HalfWord16(next()); }
    Word32 next_u32() { return Word32(next()); }

  private:
    uint64_t state_;
};

// Counter-mode key generator: key_at(seed, i) is deterministic in (seed, i)
// and distinct across i for a fixed seed, because the first key word block
// is a bijective mix of the counter.
inline MasterKey128 key_at(uint64_t seed, uint64_t index) {
    uint64_t base = mix64(seed ^ 0x6A09E667F3BCC909ULL);
    uint64_t x = base + (index + 1) * 0x9E3779B97F4A7C15ULL;
    uint64_t hi = mix64(x);
    uint64_t lo = mix64(x ^ 0xD1B54A32D192ED03ULL);
    MasterKey128 key;
    for (int w = 0; w < 4; ++w) {
        key.k[w] = HalfWord16(hi >> (16 * w));
        key.k[4 + w] = HalfWord16(lo >> (16 * w));
    }
    return key;
}

}  // namespace kasumi
