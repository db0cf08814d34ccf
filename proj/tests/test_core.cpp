// Core cipher tests: S-box integrity, golden traces, inverses, schedule
// properties.
#include <set>

#include "doctest.h"
#include "kasumi/core.hpp"
#include "kasumi/hex.hpp"
#include "kasumi/prng.hpp"

using namespace kasumi;

namespace {

// Independent oracle: the S-boxes rebuilt from their combinational-logic
// form (gate equations), cross-checked against the shipped tables.
int bit_of(int x, int i) { return (x >> i) & 1; }

uint8_t s7_gate(int x) {
    int x0 = bit_of(x, 0), x1 = bit_of(x, 1), x2 = bit_of(x, 2), x3 = bit_of(x, 3),
        x4 = bit_of(x, 4), x5 = bit_of(x, 5), x6 = bit_of(x, 6);
    int y0 = (x1 & x3) ^ x4 ^ (x0 & x1 & x4) ^ x5 ^ (x2 & x5) ^ (x3 & x4 & x5) ^ x6 ^ (x0 & x6) ^
             (x1 & x6) ^ (x3 & x6) ^ (x2 & x4 & x6) ^ (x1 & x5 & x6) ^ (x4 & x5 & x6);
    int y1 = (x0 & x1) ^ (x0 & x4) ^ (x2 & x4) ^ x5 ^ (x1 & x2 & x5) ^ (x0 & x3 & x5) ^ x6 ^
             (x0 & x2 & x6) ^ (x3 & x6) ^ (x4 & x5 & x6) ^ 1;
    int y2 = x0 ^ (x0 & x3) ^ (x2 & x3) ^ (x1 & x2 & x4) ^ (x0 & x3 & x4) ^ (x1 & x5) ^
             (x0 & x2 & x5) ^ (x0 & x6) ^ (x0 & x1 & x6) ^ (x2 & x6) ^ (x4 & x6) ^ 1;
    int y3 = x1 ^ (x0 & x1 & x2) ^ (x1 & x4) ^ (x3 & x4) ^ (x0 & x5) ^ (x0 & x1 & x5) ^
             (x2 & x3 & x5) ^ (x1 & x4 & x5) ^ (x2 & x6) ^ (x1 & x3 & x6);
    int y4 = (x0 & x2) ^ x3 ^ (x1 & x3) ^ (x1 & x4) ^ (x0 & x1 & x4) ^ (x2 & x3 & x4) ^
             (x0 & x5) ^ (x1 & x3 & x5) ^ (x0 & x4 & x5) ^ (x1 & x6) ^ (x3 & x6) ^
             (x0 & x3 & x6) ^ (x5 & x6) ^ 1;
    int y5 = x2 ^ (x0 & x2) ^ (x0 & x3) ^ (x1 & x2 & x3) ^ (x0 & x2 & x4) ^ (x0 & x5) ^
             (x2 & x5) ^ (x4 & x5) ^ (x1 & x6) ^ (x1 & x2 & x6) ^ (x0 & x3 & x6) ^
             (x3 & x4 & x6) ^ (x2 & x5 & x6) ^ 1;
    int y6 = (x1 & x2) ^ (x0 & x1 & x3) ^ (x0 & x4) ^ (x1 & x5) ^ (x3 & x5) ^ x6 ^
             (x0 & x1 & x6) ^ (x2 & x3 & x6) ^ (x1 & x4 & x6) ^ (x0 & x5 & x6);
    return uint8_t(y0 | (y1 << 1) | (y2 << 2) | (y3 << 3) | (y4 << 4) | (y5 << 5) | (y6 << 6));
}

uint16_t s9_gate(int x) {
    int x0 = bit_of(x, 0), x1 = bit_of(x, 1), x2 = bit_of(x, 2), x3 = bit_of(x, 3),
        x4 = bit_of(x, 4), x5 = bit_of(x, 5), x6 = bit_of(x, 6), x7 = bit_of(x, 7),
        x8 = bit_of(x, 8);
    int y0 = (x0 & x2) ^ x3 ^ (x2 & x5) ^ (x5 & x6) ^ (x0 & x7) ^ (x1 & x7) ^ (x2 & x7) ^
             (x4 & x8) ^ (x5 & x8) ^ (x7 & x8) ^ 1;
    int y1 = x1 ^ (x0 & x1) ^ (x2 & x3) ^ (x0 & x4) ^ (x1 & x4) ^ (x0 & x5) ^ (x3 & x5) ^ x6 ^
             (x1 & x7) ^ (x2 & x7) ^ (x5 & x8) ^ 1;
    int y2 = x1 ^ (x0 & x3) ^ (x3 & x4) ^ (x0 & x5) ^ (x2 & x6) ^ (x3 & x6) ^ (x5 & x6) ^
             (x4 & x7) ^ (x5 & x7) ^ (x6 & x7) ^ x8 ^ (x0 & x8) ^ 1;
    int y3 = x0 ^ (x1 & x2) ^ (x0 & x3) ^ (x2 & x4) ^ x5 ^ (x0 & x6) ^ (x1 & x6) ^ (x4 & x7) ^
             (x0 & x8) ^ (x1 & x8) ^ (x7 & x8);
    int y4 = (x0 & x1) ^ (x1 & x3) ^ x4 ^ (x0 & x5) ^ (x3 & x6) ^ (x0 & x7) ^ (x6 & x7) ^
             (x1 & x8) ^ (x2 & x8) ^ (x3 & x8);
    int y5 = x2 ^ (x1 & x4) ^ (x4 & x5) ^ (x0 & x6) ^ (x1 & x6) ^ (x3 & x7) ^ (x4 & x7) ^
             (x6 & x7) ^ (x5 & x8) ^ (x6 & x8) ^ (x7 & x8) ^ 1;
    int y6 = x0 ^ (x2 & x3) ^ (x1 & x5) ^ (x2 & x5) ^ (x4 & x5) ^ (x3 & x6) ^ (x4 & x6) ^
             (x5 & x6) ^ x7 ^ (x1 & x8) ^ (x3 & x8) ^ (x5 & x8) ^ (x7 & x8);
    int y7 = (x0 & x1) ^ (x0 & x2) ^ (x1 & x2) ^ x3 ^ (x0 & x3) ^ (x2 & x3) ^ (x4 & x5) ^
             (x2 & x6) ^ (x3 & x6) ^ (x2 & x7) ^ (x5 & x7) ^ x8 ^ 1;
    int y8 = (x0 & x1) ^ x2 ^ (x1 & x2) ^ (x3 & x4) ^ (x1 & x5) ^ (x2 & x5) ^ (x1 & x6) ^
             (x4 & x6) ^ x7 ^ (x2 & x8) ^ (x3 & x8);
    return uint16_t(y0 | (y1 << 1) | (y2 << 2) | (y3 << 3) | (y4 << 4) | (y5 << 5) | (y6 << 6) |
                    (y7 << 7) | (y8 << 8));
}

const MasterKey128 kGoldenKey1 = MasterKey128::from_hex("F1D941159CA8B6238135DACB8A370940");
const MasterKey128 kGoldenKey2 = MasterKey128::from_hex("CAFF6AC383136437A70C4560AC98CE9F");
const Block64 kGoldenCiphertext = Block64::from_hex("2dbcda8d84cdad86");

constexpr uint32_t kTrace1[8][2] = {
    {0x00000000, 0xdb16eed5}, {0xdb16eed5, 0x48d17eb6}, {0x48d17eb6, 0x2ebddad4},
    {0x2ebddad4, 0x7b006cf8}, {0x7b006cf8, 0xd8805ffd}, {0xd8805ffd, 0x9f570e58},
    {0x9f570e58, 0x84cdad86}, {0x84cdad86, 0x2dbcda8d}};
constexpr uint32_t kTrace2[8][2] = {
    {0x00000000, 0xaa108129}, {0xaa108129, 0xec2e85a9}, {0xec2e85a9, 0x309e5e7b},
    {0x309e5e7b, 0x8f1313fb}, {0x8f1313fb, 0x2b23dcc6}, {0x2b23dcc6, 0x9b7de2ee},
    {0x9b7de2ee, 0x84cdad86}, {0x84cdad86, 0x2dbcda8d}};

}  // namespace

TEST_CASE("S-boxes are permutations matching their gate-logic form") {
    std::set<uint8_t> seen7;
    for (int i = 0; i < 128; ++i) {
        CHECK(sbox7()[size_t(i)] == s7_gate(i));
        seen7.insert(sbox7()[size_t(i)]);
        CHECK(sbox7_inv()[sbox7()[size_t(i)]] == i);
    }
    CHECK(seen7.size() == 128);

    std::set<uint16_t> seen9;
    for (int i = 0; i < 512; ++i) {
        CHECK(sbox9()[size_t(i)] == s9_gate(i));
        seen9.insert(sbox9()[size_t(i)]);
        CHECK(sbox9_inv()[sbox9()[size_t(i)]] == i);
    }
    CHECK(seen9.size() == 512);
}

TEST_CASE("golden traces reproduce for both reference keys") {
    const Block64 zero{};
    for (int which = 0; which < 2; ++which) {
        const MasterKey128& key = which == 0 ? kGoldenKey1 : kGoldenKey2;
        const auto& expect = which == 0 ? kTrace1 : kTrace2;
        RoundTrace tr = encrypt_trace(zero, key, 8);
        for (int r = 0; r < 8; ++r) {
            CHECK(tr.c[size_t(r)].left == expect[r][0]);
            CHECK(tr.c[size_t(r)].right == expect[r][1]);
        }
        CHECK(tr.ciphertext == kGoldenCiphertext);
        CHECK(encrypt(zero, key, 8) == kGoldenCiphertext);
        CHECK(decrypt(kGoldenCiphertext, key, 8) == zero);
    }
}

TEST_CASE("trace lines print in the canonical format") {
    RoundTrace tr = encrypt_trace(Block64{}, kGoldenKey1, 8);
    CHECK(tr.line(0) == "--->> c1: left=0, right=db16eed5");
    CHECK(tr.line(6) == "--->> c7: left=9f570e58, right=84cdad86");
}

TEST_CASE("standard-word-order test vector") {
    // Published single-block vector, key words in the standard order.
    MasterKey128 key = MasterKey128::from_words(
        {0x2BD6, 0x459F, 0x82C5, 0xB300, 0x952C, 0x4910, 0x4881, 0xFF48});
    Block64 p = Block64::from_hex("EA024714AD5C4D84");
    CHECK(encrypt(p, key, 8).to_hex() == "df1f9b251c0bf45f");
    CHECK(decrypt(Block64::from_hex("DF1F9B251C0BF45F"), key, 8) == p);
}

TEST_CASE("key hex round-trips and matches the trace convention") {
    CHECK(kGoldenKey1.to_hex() == "f1d941159ca8b6238135dacb8a370940");
    CHECK(MasterKey128::from_hex(kGoldenKey1.to_hex()) == kGoldenKey1);
    // k1 comes from the low-address end of the printed number.
    CHECK(kGoldenKey1.k[0] == 0x4009);
    CHECK(kGoldenKey1.k[7] == 0xD9F1);
}

TEST_CASE("hex parsing enforces width and digits") {
    CHECK_THROWS_AS(Block64::from_hex("0123"), std::invalid_argument);
    CHECK_THROWS_AS(MasterKey128::from_hex("F1D941159CA8B6238135DACB8A3709"), std::invalid_argument);
    CHECK_THROWS_AS(Block64::from_hex("00000000000000zz"), std::invalid_argument);
    CHECK(Block64::from_hex("00000000DEADBEEF").right == 0xDEADBEEF);
}

TEST_CASE("zero-key schedule row") {
    KeySchedule sched = key_schedule(MasterKey128{});
    CHECK(sched.rounds[0].kl.kl1 == 0x0000);
    CHECK(sched.rounds[0].fo.ko1 == 0x0000);
    // KI_{1,1} = k'5 = 0 ^ c5
    CHECK(sched.rounds[0].fo.ki1 == KeySchedule::constants()[4]);
    CHECK(sched.rounds[0].kl.kl2 == KeySchedule::constants()[2]);
}

TEST_CASE("key schedule is affine over xor in the master key") {
    SplitMix64 rng(11);
    KeySchedule zero = key_schedule(MasterKey128{});
    for (int trial = 0; trial < 100; ++trial) {
        MasterKey128 ka, kb, kc;
        for (int i = 0; i < 8; ++i) {
            ka.k[size_t(i)] = rng.next_u16();
            kb.k[size_t(i)] = rng.next_u16();
            kc.k[size_t(i)] = ka.k[size_t(i)] ^ kb.k[size_t(i)];
        }
        KeySchedule sa = key_schedule(ka), sb = key_schedule(kb), sc = key_schedule(kc);
        for (int r = 0; r < 8; ++r) {
            auto xor3 = [&](auto field) {
                return HalfWord16(field(sa.rounds[size_t(r)]) ^ field(sb.rounds[size_t(r)]) ^
                                  field(zero.rounds[size_t(r)]));
            };
            CHECK(sc.rounds[size_t(r)].kl.kl1 == xor3([](const RoundSubKeys& k) { return k.kl.kl1; }));
            CHECK(sc.rounds[size_t(r)].kl.kl2 == xor3([](const RoundSubKeys& k) { return k.kl.kl2; }));
            CHECK(sc.rounds[size_t(r)].fo.ko1 == xor3([](const RoundSubKeys& k) { return k.fo.ko1; }));
            CHECK(sc.rounds[size_t(r)].fo.ko2 == xor3([](const RoundSubKeys& k) { return k.fo.ko2; }));
            CHECK(sc.rounds[size_t(r)].fo.ko3 == xor3([](const RoundSubKeys& k) { return k.fo.ko3; }));
            CHECK(sc.rounds[size_t(r)].fo.ki1 == xor3([](const RoundSubKeys& k) { return k.fo.ki1; }));
            CHECK(sc.rounds[size_t(r)].fo.ki2 == xor3([](const RoundSubKeys& k) { return k.fo.ki2; }));
            CHECK(sc.rounds[size_t(r)].fo.ki3 == xor3([](const RoundSubKeys& k) { return k.fo.ki3; }));
        }
    }
}

TEST_CASE("fi, fl, fo invert for fixed keys") {
    SplitMix64 rng(12);
    for (int i = 0; i < 100000; ++i) {
        HalfWord16 x = rng.next_u16(), ki = rng.next_u16();
        CHECK(fi_inv(fi(x, ki), ki) == x);
    }
    for (int i = 0; i < 100000; ++i) {
        Word32 x = rng.next_u32();
        FLKey kl{rng.next_u16(), rng.next_u16()};
        CHECK(fl_inv(fl(x, kl), kl) == x);
    }
    for (int i = 0; i < 100000; ++i) {
        Word32 x = rng.next_u32();
        FOKeySet keys{rng.next_u16(), rng.next_u16(), rng.next_u16(),
                      rng.next_u16(), rng.next_u16(), rng.next_u16()};
        CHECK(fo_inv(fo(x, keys), keys) == x);
    }
}

TEST_CASE("fl with a zero key reduces to boolean identities") {
    SplitMix64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        Word32 x = rng.next_u32();
        Word32 y = fl(x, FLKey{0, 0});
        HalfWord16 xr = HalfWord16(x), xl = HalfWord16(x >> 16);
        CHECK(HalfWord16(y) == xr);  // AND with 0 leaves the right half alone
        CHECK(HalfWord16(y >> 16) == HalfWord16(xl ^ rotl16(xr, 1)));
    }
}

TEST_CASE("encrypt/decrypt round-trip across rounds and conventions") {
    SplitMix64 rng(14);
    for (int i = 0; i < 10000; ++i) {
        Block64 p = Block64::from_value(rng.next());
        MasterKey128 key;
        for (int w = 0; w < 8; ++w) key.k[size_t(w)] = rng.next_u16();
        int rounds = 1 + int(rng.next() % 8);
        bool pre_swap = (rng.next() & 1) != 0;
        CHECK(decrypt(encrypt(p, key, rounds, pre_swap), key, rounds, pre_swap) == p);
    }
}

TEST_CASE("trace rows equal pre-swap round outputs") {
    SplitMix64 rng(15);
    for (int i = 0; i < 200; ++i) {
        Block64 p = Block64::from_value(rng.next());
        MasterKey128 key;
        for (int w = 0; w < 8; ++w) key.k[size_t(w)] = rng.next_u16();
        RoundTrace tr = encrypt_trace(p, key, 8);
        for (int r = 1; r <= 8; ++r) {
            CHECK(tr.c[size_t(r - 1)] == encrypt(p, key, r, true));
        }
        CHECK(tr.ciphertext == encrypt(p, key, 8, false));
    }
}

TEST_CASE("round count is validated") {
    CHECK_THROWS_AS(encrypt(Block64{}, MasterKey128{}, 0), std::invalid_argument);
    CHECK_THROWS_AS(encrypt(Block64{}, MasterKey128{}, 9), std::invalid_argument);
    CHECK_THROWS_AS(decrypt(Block64{}, MasterKey128{}, -1), std::invalid_argument);
}
