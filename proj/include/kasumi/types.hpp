// Core value types shared across the workbench.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace kasumi {

using Word7 = uint8_t;        // 7-bit values, reduced mod 2^7
using Word9 = uint16_t;       // 9-bit values, reduced mod 2^9
using HalfWord16 = uint16_t;
using Word32 = uint32_t;

// 64-bit cipher state as an ordered (left, right) pair of 32-bit words.
// Hex form is big-endian: left word printed first.
struct Block64 {
    Word32 left = 0;
    Word32 right = 0;

    uint64_t value() const { return (uint64_t(left) << 32) | right; }
    static Block64 from_value(uint64_t v) { return {Word32(v >> 32), Word32(v)}; }
    static Block64 from_hex(std::string_view s);
    std::string to_hex() const;

    friend bool operator==(const Block64&, const Block64&) = default;
};

// 128-bit master key as eight 16-bit words k1..k8 (k[0] = k1).
//
// Hex convention: the 32-digit key string is split into 16 bytes
// b0..b15; word ki is (b[17-2i] << 8) | b[16-2i], i.e. the words are
// read from the low-address end of the printed number upward.  This is
// the convention under which the shipped golden traces reproduce; the
// standard test-vector word order (k1 = b0b1) is available through
// from_words for cross-checks.
struct MasterKey128 {
    std::array<HalfWord16, 8> k{};  // k[0] = k1 ... k[7] = k8

    static MasterKey128 from_words(const std::array<HalfWord16, 8>& words) { return {words}; }
    static MasterKey128 from_hex(std::string_view s);
    std::string to_hex() const;

    friend auto operator<=>(const MasterKey128&, const MasterKey128&) = default;
};

// FL sub-key pair KL = (KL1, KL2).
struct FLKey {
    HalfWord16 kl1 = 0;
    HalfWord16 kl2 = 0;

    friend bool operator==(const FLKey&, const FLKey&) = default;
};

// FO sub-keys KO = (KO1, KO2, KO3), KI = (KI1, KI2, KI3).
struct FOKeySet {
    HalfWord16 ko1 = 0, ko2 = 0, ko3 = 0;
    HalfWord16 ki1 = 0, ki2 = 0, ki3 = 0;

    friend bool operator==(const FOKeySet&, const FOKeySet&) = default;
};

struct RoundSubKeys {
    FLKey kl;
    FOKeySet fo;
};

// Per-round sub-keys for all eight rounds plus the schedule constants.
struct KeySchedule {
    std::array<RoundSubKeys, 8> rounds{};
    static const std::array<HalfWord16, 8>& constants();  // c1..c8
};

// Round-by-round encryption snapshots.
//
// Entry c[i] is the output of round i+1 *before* the half swap: c[i].left
// carries the untouched half (equal to the previous round's new half) and
// c[i].right holds the half just produced.  `ciphertext` is the ordinary
// post-swap output, so at full width ciphertext = (c[7].right, c[7].left).
struct RoundTrace {
    int rounds = 0;
    std::array<Block64, 8> c{};
    Block64 ciphertext;

    // Renders entry i (0-based) as the canonical trace line,
    // e.g. "--->> c1: left=0, right=db16eed5".
    std::string line(int i) const;
};

}  // namespace kasumi
