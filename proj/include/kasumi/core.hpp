// KASUMI primitive: S-boxes, FI/FL/FO with inverses, key schedule, and
// round-reduced encryption with per-round traces.
#pragma once

#include <array>
#include <cstdint>

#include "kasumi/types.hpp"

namespace kasumi {

// S7 (7-bit) and S9 (9-bit) permutation tables from the KASUMI
// specification (3GPP TS 35.202), with their inverses.
const std::array<uint8_t, 128>& sbox7();
const std::array<uint16_t, 512>& sbox9();
const std::array<uint8_t, 128>& sbox7_inv();
const std::array<uint16_t, 512>& sbox9_inv();

constexpr HalfWord16 rotl16(HalfWord16 x, int r) {
    r &= 15;
    return r == 0 ? x : HalfWord16((x << r) | (x >> (16 - r)));
}
constexpr HalfWord16 rotr16(HalfWord16 x, int r) { return rotl16(x, 16 - (r & 15)); }

// 16-bit keyed permutation over the S7/S9 ladder.
HalfWord16 fi(HalfWord16 x, HalfWord16 ki);
HalfWord16 fi_inv(HalfWord16 y, HalfWord16 ki);

// 32-bit AND/OR/rotate mixing function, keyed by KL = (KL1, KL2).
Word32 fl(Word32 x, FLKey kl);
Word32 fl_inv(Word32 y, FLKey kl);

// 32-bit three-round ladder over FI, keyed by KO/KI.
Word32 fo(Word32 x, const FOKeySet& keys);
Word32 fo_inv(Word32 y, const FOKeySet& keys);

// Expands the master key to the eight per-round sub-key rows.
KeySchedule key_schedule(const MasterKey128& master);

// Round-reduced encryption. `rounds` must be 1..8. With pre_swap the
// result is the final round output before the last half exchange, the
// form the class-generation algorithms work in.
Block64 encrypt(Block64 p, const MasterKey128& master, int rounds = 8, bool pre_swap = false);
Block64 decrypt(Block64 c, const MasterKey128& master, int rounds = 8, bool pre_swap = false);

RoundTrace encrypt_trace(Block64 p, const MasterKey128& master, int rounds = 8);

}  // namespace kasumi
