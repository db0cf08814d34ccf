// Component-level algebra: FI decomposition and key recovery, FO
// completion from a partial guess, FL sub-key classification.
#pragma once

#include <cstdint>
#include <utility>

#include "kasumi/types.hpp"

namespace kasumi {

// Key-independent halves of FI: fi(x, ki) == fi2(ki ^ fi1(x)).
HalfWord16 fi1(HalfWord16 x);
HalfWord16 fi1_inv(HalfWord16 m);
HalfWord16 fi2(HalfWord16 m);
HalfWord16 fi2_inv(HalfWord16 y);

// The unique ki with fi(x, ki) == y.
HalfWord16 recover_fi_key(HalfWord16 x, HalfWord16 y);

// Delta with fi(x, ki) == fi(x', ki ^ delta) for every ki.
HalfWord16 fi_equal_output_delta(HalfWord16 x, HalfWord16 x_prime);

// The unique (ki, ki') with fi(x, ki) == fi(x', ki') == y.
std::pair<HalfWord16, HalfWord16> fi_keypair_for_target(HalfWord16 x, HalfWord16 x_prime,
                                                        HalfWord16 y);

// Given FO input/output and a guess of (ki1, ko1, ki2, ki3), the unique
// (ko2, ko3) completing a key set with fo(x, keys) == y.
std::pair<HalfWord16, HalfWord16> fo_complete(Word32 x, Word32 y, HalfWord16 ki1, HalfWord16 ko1,
                                              HalfWord16 ki2, HalfWord16 ki3);

// The solution set of fl(x, kl) == y, described per key half as a
// forced-bits pattern. Empty (consistent == false) is a normal outcome.
// half_bits is 16 for the real cipher; narrowed widths share the code
// path for exhaustive cross-checks.
struct FLKeyClass {
    HalfWord16 kl1_forced_mask = 0, kl1_forced_value = 0;
    HalfWord16 kl2_forced_mask = 0, kl2_forced_value = 0;
    bool consistent = false;
    int free_bit_count = 0;
    int half_bits = 16;

    bool contains(FLKey kl) const;
    uint64_t size() const;  // 2^free_bit_count members, 0 when inconsistent
    // Enumerates members: index's low bits fill kl1's free positions
    // (ascending), the rest fill kl2's.
    FLKey member_at(uint64_t index) const;
};

FLKeyClass fl_key_class(Word32 x, Word32 y);

// Width-parameterized core used by fl_key_class and by narrowed-variant tests.
FLKeyClass classify_fl_halves(HalfWord16 xl, HalfWord16 xr, HalfWord16 yl, HalfWord16 yr,
                              int half_bits);

}  // namespace kasumi
