#include "kasumi/analysis.hpp"

#include <bit>

#include "kasumi/core.hpp"

namespace kasumi {

HalfWord16 fi1(HalfWord16 x) {
    uint16_t nine = x >> 7;
    uint16_t seven = x & 0x7F;
    nine = sbox9()[nine] ^ seven;
    seven = sbox7()[seven] ^ (nine & 0x7F);
    return HalfWord16((seven << 9) | nine);
}

HalfWord16 fi1_inv(HalfWord16 m) {
    uint16_t seven1 = m >> 9;
    uint16_t nine1 = m & 0x1FF;
    uint16_t seven = sbox7_inv()[seven1 ^ (nine1 & 0x7F)];
    uint16_t nine = sbox9_inv()[nine1 ^ seven];
    return HalfWord16((nine << 7) | seven);
}

HalfWord16 fi2(HalfWord16 m) {
    uint16_t seven = m >> 9;
    uint16_t nine = m & 0x1FF;
    nine = sbox9()[nine] ^ seven;
    seven = sbox7()[seven] ^ (nine & 0x7F);
    return HalfWord16((seven << 9) | nine);
}

HalfWord16 fi2_inv(HalfWord16 y) {
    uint16_t seven2 = y >> 9;
    uint16_t nine2 = y & 0x1FF;
    uint16_t seven = sbox7_inv()[seven2 ^ (nine2 & 0x7F)];
    uint16_t nine = sbox9_inv()[nine2 ^ seven];
    return HalfWord16((seven << 9) | nine);
}

HalfWord16 recover_fi_key(HalfWord16 x, HalfWord16 y) { return fi1(x) ^ fi2_inv(y); }

HalfWord16 fi_equal_output_delta(HalfWord16 x, HalfWord16 x_prime) {
    return fi1(x) ^ fi1(x_prime);
}

std::pair<HalfWord16, HalfWord16> fi_keypair_for_target(HalfWord16 x, HalfWord16 x_prime,
                                                        HalfWord16 y) {
    return {recover_fi_key(x, y), recover_fi_key(x_prime, y)};
}

std::pair<HalfWord16, HalfWord16> fo_complete(Word32 x, Word32 y, HalfWord16 ki1, HalfWord16 ko1,
                                              HalfWord16 ki2, HalfWord16 ki3) {
    HalfWord16 xl = HalfWord16(x >> 16), xr = HalfWord16(x);
    HalfWord16 yl = HalfWord16(y >> 16), yr = HalfWord16(y);
    HalfWord16 t = xr ^ fi(xl ^ ko1, ki1);
    HalfWord16 ko2 = xr ^ fi_inv(yl ^ t, ki2);
    HalfWord16 ko3 = fi_inv(yl ^ yr, ki3) ^ t;
    return {ko2, ko3};
}

namespace {

constexpr HalfWord16 width_mask(int bits) { return HalfWord16((1u << bits) - 1); }

constexpr HalfWord16 rotr_w(HalfWord16 x, int bits) {
    // rotate right by one within `bits`
    return HalfWord16(((x >> 1) | (x << (bits - 1))) & width_mask(bits));
}

}  // namespace

FLKeyClass classify_fl_halves(HalfWord16 xl, HalfWord16 xr, HalfWord16 yl, HalfWord16 yr,
                              int half_bits) {
    const HalfWord16 m = width_mask(half_bits);
    FLKeyClass cls;
    cls.half_bits = half_bits;

    // a must equal xl & kl1; b must equal yr | kl2.
    HalfWord16 a = rotr_w((yr ^ xr) & m, half_bits);
    HalfWord16 b = rotr_w((yl ^ xl) & m, half_bits);

    cls.consistent = ((a & HalfWord16(~xl) & m) == 0) && ((yr & HalfWord16(~b) & m) == 0);
    cls.kl1_forced_mask = xl & m;
    cls.kl1_forced_value = a & xl & m;
    cls.kl2_forced_mask = HalfWord16(~yr) & m;
    cls.kl2_forced_value = b & HalfWord16(~yr) & m;
    cls.free_bit_count =
        (half_bits - std::popcount(uint32_t(xl & m))) + std::popcount(uint32_t(yr & m));
    return cls;
}

FLKeyClass fl_key_class(Word32 x, Word32 y) {
    return classify_fl_halves(HalfWord16(x >> 16), HalfWord16(x), HalfWord16(y >> 16),
                              HalfWord16(y), 16);
}

bool FLKeyClass::contains(FLKey kl) const {
    if (!consistent) return false;
    const HalfWord16 m = width_mask(half_bits);
    return ((kl.kl1 & kl1_forced_mask & m) == kl1_forced_value) &&
           ((kl.kl2 & kl2_forced_mask & m) == kl2_forced_value);
}

uint64_t FLKeyClass::size() const { return consistent ? (uint64_t(1) << free_bit_count) : 0; }

FLKey FLKeyClass::member_at(uint64_t index) const {
    const HalfWord16 m = width_mask(half_bits);
    FLKey kl{kl1_forced_value, kl2_forced_value};
    for (int bit = 0; bit < half_bits; ++bit) {
        if (!(kl1_forced_mask & (1u << bit))) {
            if (index & 1) kl.kl1 |= HalfWord16(1u << bit);
            index >>= 1;
        }
    }
    for (int bit = 0; bit < half_bits; ++bit) {
        if (!(kl2_forced_mask & (1u << bit))) {
            if (index & 1) kl.kl2 |= HalfWord16(1u << bit);
            index >>= 1;
        }
    }
    kl.kl1 &= m;
    kl.kl2 &= m;
    return kl;
}

}  // namespace kasumi
