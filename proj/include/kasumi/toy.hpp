// Desk-scale demonstration of the generic key-classification attack on a
// parameterized toy cipher whose key is longer than its block.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace kasumi {

// Balanced Feistel over n/2-bit halves with a seeded random S-box and a
// rotation-extraction key schedule.
struct ToyCipherParams {
    int block_bits = 12;   // n: even, 4..20
    int key_bits = 18;     // k: n < k <= 28
    int rounds = 6;        // >= 4
    uint64_t sbox_seed = 0;
};

struct KnownPair {
    uint32_t p = 0;
    uint32_t c = 0;
};

class ToyCipher {
  public:
    explicit ToyCipher(const ToyCipherParams& params);

    uint32_t encrypt(uint32_t p, uint32_t key) const;
    uint32_t decrypt(uint32_t c, uint32_t key) const;

    // The exact set {K : encrypt(p0, K) == c0}, ascending, by brute force.
    // This plays the role of the assumed-efficient class oracle.
    std::vector<uint32_t> class_enumerate(uint32_t p0, uint32_t c0) const;

    struct RecoverStats {
        uint64_t attack_encryptions = 0;  // phase-1 scan + phase-2 pair checks
        uint64_t oracle_encryptions = 0;  // spent inside the class oracle
        uint64_t scanned_keys = 0;        // phase-1 keys visited
        uint64_t class_size = 0;
    };

    // Two-phase recovery: scan ascending key order for any key matching
    // pairs[0], then return the lowest member of its class fitting every
    // provided pair. Requires at least 3 pairs.
    std::optional<uint32_t> algorithm1_recover(std::span<const KnownPair> pairs,
                                               RecoverStats* stats = nullptr) const;

    const ToyCipherParams& params() const { return params_; }
    uint32_t block_mask() const { return block_mask_; }
    uint32_t key_mask() const { return key_mask_; }

  private:
    uint32_t encrypt_unchecked(uint32_t p, uint32_t key) const;
    uint32_t round_key(uint32_t key, int round) const;
    void check_block(uint32_t p) const;
    void check_key(uint32_t key) const;

    ToyCipherParams params_;
    int half_bits_;
    uint32_t half_mask_;
    uint32_t block_mask_;
    uint32_t key_mask_;
    std::vector<uint32_t> sbox_;
    std::vector<int> rk_shift_;  // per-round rotation offset into the key
};

}  // namespace kasumi
