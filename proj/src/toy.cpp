#include "kasumi/toy.hpp"

#include <stdexcept>
#include <string>

#include "kasumi/prng.hpp"

namespace kasumi {

ToyCipher::ToyCipher(const ToyCipherParams& params) : params_(params) {
    const int n = params.block_bits, k = params.key_bits;
    if (n < 4 || n > 20 || n % 2 != 0)
        throw std::invalid_argument("toy cipher: block_bits must be even and in 4..20");
    if (k <= n || k > 28)
        throw std::invalid_argument("toy cipher: key_bits must satisfy block_bits < key_bits <= 28");
    if (params.rounds < 4) throw std::invalid_argument("toy cipher: rounds must be >= 4");

    half_bits_ = n / 2;
    half_mask_ = (uint32_t(1) << half_bits_) - 1;
    block_mask_ = (uint32_t(1) << n) - 1;
    key_mask_ = (uint32_t(1) << k) - 1;

    SplitMix64 rng(params.sbox_seed);
    sbox_.resize(size_t(1) << half_bits_);
    for (auto& v : sbox_) v = uint32_t(rng.next()) & half_mask_;

    // Marching half-width windows; injective on the key whenever
    // rounds * half_bits >= key_bits.
    rk_shift_.resize(size_t(params.rounds));
    for (int i = 0; i < params.rounds; ++i) rk_shift_[size_t(i)] = (i * half_bits_) % k;
}

uint32_t ToyCipher::round_key(uint32_t key, int round) const {
    const int k = params_.key_bits;
    const int r = rk_shift_[size_t(round)];
    uint32_t rot = r == 0 ? key : (((key >> r) | (key << (k - r))) & key_mask_);
    return rot & half_mask_;
}

void ToyCipher::check_block(uint32_t p) const {
    if (p & ~block_mask_)
        throw std::invalid_argument("toy cipher: block value exceeds " +
                                    std::to_string(params_.block_bits) + " bits");
}

void ToyCipher::check_key(uint32_t key) const {
    if (key & ~key_mask_)
        throw std::invalid_argument("toy cipher: key value exceeds " +
                                    std::to_string(params_.key_bits) + " bits");
}

uint32_t ToyCipher::encrypt_unchecked(uint32_t p, uint32_t key) const {
    uint32_t l = p >> half_bits_;
    uint32_t r = p & half_mask_;
    for (int i = 0; i < params_.rounds; ++i) {
        uint32_t nl = r;
        r = l ^ sbox_[r ^ round_key(key, i)];
        l = nl;
    }
    return (l << half_bits_) | r;
}

uint32_t ToyCipher::encrypt(uint32_t p, uint32_t key) const {
    check_block(p);
    check_key(key);
    return encrypt_unchecked(p, key);
}

uint32_t ToyCipher::decrypt(uint32_t c, uint32_t key) const {
    check_block(c);
    check_key(key);
    uint32_t l = c >> half_bits_;
    uint32_t r = c & half_mask_;
    for (int i = params_.rounds - 1; i >= 0; --i) {
        uint32_t nr = l;
        l = r ^ sbox_[l ^ round_key(key, i)];
        r = nr;
    }
    return (l << half_bits_) | r;
}

std::vector<uint32_t> ToyCipher::class_enumerate(uint32_t p0, uint32_t c0) const {
    check_block(p0);
    check_block(c0);
    std::vector<uint32_t> members;
    const uint64_t space = uint64_t(1) << params_.key_bits;
    for (uint64_t key = 0; key < space; ++key) {
        if (encrypt_unchecked(p0, uint32_t(key)) == c0) members.push_back(uint32_t(key));
    }
    return members;
}

std::optional<uint32_t> ToyCipher::algorithm1_recover(std::span<const KnownPair> pairs,
                                                      RecoverStats* stats) const {
    if (pairs.size() < 3)
        throw std::invalid_argument("algorithm1: at least 3 known pairs required");
    for (const KnownPair& pr : pairs) {
        check_block(pr.p);
        check_block(pr.c);
    }

    RecoverStats local;
    const uint32_t p0 = pairs[0].p, c0 = pairs[0].c;
    const uint64_t space = uint64_t(1) << params_.key_bits;

    // Phase 1: ascending scan (interval after interval of size 2^n) for
    // any key mapping p0 to c0.
    std::optional<uint32_t> representative;
    for (uint64_t key = 0; key < space; ++key) {
        local.scanned_keys += 1;
        local.attack_encryptions += 1;
        if (encrypt_unchecked(p0, uint32_t(key)) == c0) {
            representative = uint32_t(key);
            break;
        }
    }

    std::optional<uint32_t> found;
    if (representative) {
        // Phase 2: enumerate the representative's class and take the lowest
        // member consistent with every provided pair.
        std::vector<uint32_t> members = class_enumerate(p0, c0);
        local.oracle_encryptions += space;
        local.class_size = members.size();
        for (uint32_t member : members) {
            bool fits = true;
            for (size_t i = 1; i < pairs.size(); ++i) {
                local.attack_encryptions += 1;
                if (encrypt_unchecked(pairs[i].p, member) != pairs[i].c) {
                    fits = false;
                    break;
                }
            }
            if (fits) {
                found = member;
                break;
            }
        }
    }
    if (stats) *stats = local;
    return found;
}

}  // namespace kasumi
