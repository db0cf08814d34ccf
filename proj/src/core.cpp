// KASUMI core: S-boxes, component functions, key schedule, Feistel loop.

#include "kasumi/core.hpp"

#include <stdexcept>

namespace kasumi {

namespace {

constexpr std::array<uint8_t, 128> kS7 = {
     54,  50,  62,  56,  22,  34,  94,  96,  38,   6,  63,  93,   2,  18, 123,  33,
     55, 113,  39, 114,  21,  67,  65,  12,  47,  73,  46,  27,  25, 111, 124,  81,
     53,   9, 121,  79,  52,  60,  58,  48, 101, 127,  40, 120, 104,  70,  71,  43,
     20, 122,  72,  61,  23, 109,  13, 100,  77,   1,  16,   7,  82,  10, 105,  98,
    117, 116,  76,  11,  89, 106,   0, 125, 118,  99,  86,  69,  30,  57, 126,  87,
    112,  51,  17,   5,  95,  14,  90,  84,  91,   8,  35, 103,  32,  97,  28,  66,
    102,  31,  26,  45,  75,   4,  85,  92,  37,  74,  80,  49,  68,  29, 115,  44,
     64, 107, 108,  24, 110,  83,  36,  78,  42,  19,  15,  41,  88, 119,  59,   3
};

constexpr std::array<uint16_t, 512> kS9 = {
    167, 239, 161, 379, 391, 334,   9, 338,  38, 226,  48, 358, 452, 385,  90, 397,
    183, 253, 147, 331, 415, 340,  51, 362, 306, 500, 262,  82, 216, 159, 356, 177,
    175, 241, 489,  37, 206,  17,   0, 333,  44, 254, 378,  58, 143, 220,  81, 400,
     95,   3, 315, 245,  54, 235, 218, 405, 472, 264, 172, 494, 371, 290, 399,  76,
    165, 197, 395, 121, 257, 480, 423, 212, 240,  28, 462, 176, 406, 507, 288, 223,
    501, 407, 249, 265,  89, 186, 221, 428, 164,  74, 440, 196, 458, 421, 350, 163,
    232, 158, 134, 354,  13, 250, 491, 142, 191,  69, 193, 425, 152, 227, 366, 135,
    344, 300, 276, 242, 437, 320, 113, 278,  11, 243,  87, 317,  36,  93, 496,  27,
    487, 446, 482,  41,  68, 156, 457, 131, 326, 403, 339,  20,  39, 115, 442, 124,
    475, 384, 508,  53, 112, 170, 479, 151, 126, 169,  73, 268, 279, 321, 168, 364,
    363, 292,  46, 499, 393, 327, 324,  24, 456, 267, 157, 460, 488, 426, 309, 229,
    439, 506, 208, 271, 349, 401, 434, 236,  16, 209, 359,  52,  56, 120, 199, 277,
    465, 416, 252, 287, 246,   6,  83, 305, 420, 345, 153, 502,  65,  61, 244, 282,
    173, 222, 418,  67, 386, 368, 261, 101, 476, 291, 195, 430,  49,  79, 166, 330,
    280, 383, 373, 128, 382, 408, 155, 495, 367, 388, 274, 107, 459, 417,  62, 454,
    132, 225, 203, 316, 234,  14, 301,  91, 503, 286, 424, 211, 347, 307, 140, 374,
     35, 103, 125, 427,  19, 214, 453, 146, 498, 314, 444, 230, 256, 329, 198, 285,
     50, 116,  78, 410,  10, 205, 510, 171, 231,  45, 139, 467,  29,  86, 505,  32,
     72,  26, 342, 150, 313, 490, 431, 238, 411, 325, 149, 473,  40, 119, 174, 355,
    185, 233, 389,  71, 448, 273, 372,  55, 110, 178, 322,  12, 469, 392, 369, 190,
      1, 109, 375, 137, 181,  88,  75, 308, 260, 484,  98, 272, 370, 275, 412, 111,
    336, 318,   4, 504, 492, 259, 304,  77, 337, 435,  21, 357, 303, 332, 483,  18,
     47,  85,  25, 497, 474, 289, 100, 269, 296, 478, 270, 106,  31, 104, 433,  84,
    414, 486, 394,  96,  99, 154, 511, 148, 413, 361, 409, 255, 162, 215, 302, 201,
    266, 351, 343, 144, 441, 365, 108, 298, 251,  34, 182, 509, 138, 210, 335, 133,
    311, 352, 328, 141, 396, 346, 123, 319, 450, 281, 429, 228, 443, 481,  92, 404,
    485, 422, 248, 297,  23, 213, 130, 466,  22, 217, 283,  70, 294, 360, 419, 127,
    312, 377,   7, 468, 194,   2, 117, 295, 463, 258, 224, 447, 247, 187,  80, 398,
    284, 353, 105, 390, 299, 471, 470, 184,  57, 200, 348,  63, 204, 188,  33, 451,
     97,  30, 310, 219,  94, 160, 129, 493,  64, 179, 263, 102, 189, 207, 114, 402,
    438, 477, 387, 122, 192,  42, 381,   5, 145, 118, 180, 449, 293, 323, 136, 380,
     43,  66,  60, 455, 341, 445, 202, 432,   8, 237,  15, 376, 436, 464,  59, 461
};

template <typename T, size_t N>
std::array<T, N> invert(const std::array<T, N>& table) {
    std::array<T, N> inv{};
    for (size_t i = 0; i < N; ++i) inv[table[i]] = T(i);
    return inv;
}

const std::array<uint8_t, 128> kS7Inv = invert(kS7);
const std::array<uint16_t, 512> kS9Inv = invert(kS9);

constexpr std::array<HalfWord16, 8> kConstants = {
    0x0123, 0x4567, 0x89AB, 0xCDEF, 0xFEDC, 0xBA98, 0x7654, 0x3210,
};

// Round function: FL before FO in odd rounds, FO before FL in even ones.
Word32 round_f(Word32 x, const RoundSubKeys& rk, bool odd_round) {
    return odd_round ? fo(fl(x, rk.kl), rk.fo) : fl(fo(x, rk.fo), rk.kl);
}

void check_rounds(int rounds) {
    if (rounds < 1 || rounds > 8) throw std::invalid_argument("rounds must be in 1..8");
}

}  // namespace

const std::array<uint8_t, 128>& sbox7() { return kS7; }
const std::array<uint16_t, 512>& sbox9() { return kS9; }
const std::array<uint8_t, 128>& sbox7_inv() { return kS7Inv; }
const std::array<uint16_t, 512>& sbox9_inv() { return kS9Inv; }

const std::array<HalfWord16, 8>& KeySchedule::constants() { return kConstants; }

HalfWord16 fi(HalfWord16 x, HalfWord16 ki) {
    uint16_t nine = x >> 7;
    uint16_t seven = x & 0x7F;
    nine = kS9[nine] ^ seven;
    seven = kS7[seven] ^ (nine & 0x7F);
    seven ^= ki >> 9;
    nine ^= ki & 0x1FF;
    nine = kS9[nine] ^ seven;
    seven = kS7[seven] ^ (nine & 0x7F);
    return HalfWord16((seven << 9) | nine);
}

HalfWord16 fi_inv(HalfWord16 y, HalfWord16 ki) {
    uint16_t seven = y >> 9;
    uint16_t nine = y & 0x1FF;
    seven = kS7Inv[seven ^ (nine & 0x7F)];
    nine = kS9Inv[nine ^ seven];
    seven ^= ki >> 9;
    nine ^= ki & 0x1FF;
    seven = kS7Inv[seven ^ (nine & 0x7F)];
    nine = kS9Inv[nine ^ seven];
    return HalfWord16((nine << 7) | seven);
}

Word32 fl(Word32 x, FLKey kl) {
    HalfWord16 l = HalfWord16(x >> 16);
    HalfWord16 r = HalfWord16(x);
    r ^= rotl16(l & kl.kl1, 1);
    l ^= rotl16(r | kl.kl2, 1);
    return (Word32(l) << 16) | r;
}

Word32 fl_inv(Word32 y, FLKey kl) {
    HalfWord16 l = HalfWord16(y >> 16);
    HalfWord16 r = HalfWord16(y);
    l ^= rotl16(r | kl.kl2, 1);
    r ^= rotl16(l & kl.kl1, 1);
    return (Word32(l) << 16) | r;
}

Word32 fo(Word32 x, const FOKeySet& k) {
    HalfWord16 l = HalfWord16(x >> 16);
    HalfWord16 r = HalfWord16(x);
    l = fi(l ^ k.ko1, k.ki1) ^ r;
    r = fi(r ^ k.ko2, k.ki2) ^ l;
    l = fi(l ^ k.ko3, k.ki3) ^ r;
    return (Word32(r) << 16) | l;
}

Word32 fo_inv(Word32 y, const FOKeySet& k) {
    HalfWord16 r1 = HalfWord16(y >> 16);
    HalfWord16 l2 = HalfWord16(y);
    HalfWord16 l1 = HalfWord16(fi_inv(l2 ^ r1, k.ki3) ^ k.ko3);
    HalfWord16 xr = HalfWord16(fi_inv(r1 ^ l1, k.ki2) ^ k.ko2);
    HalfWord16 xl = HalfWord16(fi_inv(l1 ^ xr, k.ki1) ^ k.ko1);
    return (Word32(xl) << 16) | xr;
}

KeySchedule key_schedule(const MasterKey128& master) {
    const auto& k = master.k;
    std::array<HalfWord16, 8> kp;
    for (int i = 0; i < 8; ++i) kp[i] = k[i] ^ kConstants[i];

    KeySchedule sched;
    for (int i = 0; i < 8; ++i) {
        RoundSubKeys& rk = sched.rounds[i];
        rk.kl.kl1 = rotl16(k[i], 1);
        rk.kl.kl2 = kp[(i + 2) % 8];
        rk.fo.ko1 = rotl16(k[(i + 1) % 8], 5);
        rk.fo.ko2 = rotl16(k[(i + 5) % 8], 8);
        rk.fo.ko3 = rotl16(k[(i + 6) % 8], 13);
        rk.fo.ki1 = kp[(i + 4) % 8];
        rk.fo.ki2 = kp[(i + 3) % 8];
        rk.fo.ki3 = kp[(i + 7) % 8];
    }
    return sched;
}

Block64 encrypt(Block64 p, const MasterKey128& master, int rounds, bool pre_swap) {
    check_rounds(rounds);
    KeySchedule sched = key_schedule(master);
    Word32 a = p.left;
    Word32 b = p.right;
    for (int i = 0; i < rounds; ++i) {
        Word32 f = round_f(a, sched.rounds[i], (i % 2) == 0);
        Word32 na = b ^ f;
        b = a;
        a = na;
    }
    return pre_swap ? Block64{b, a} : Block64{a, b};
}

Block64 decrypt(Block64 c, const MasterKey128& master, int rounds, bool pre_swap) {
    check_rounds(rounds);
    KeySchedule sched = key_schedule(master);
    Word32 a = pre_swap ? c.right : c.left;
    Word32 b = pre_swap ? c.left : c.right;
    for (int i = rounds - 1; i >= 0; --i) {
        Word32 f = round_f(b, sched.rounds[i], (i % 2) == 0);
        Word32 nb = a ^ f;
        a = b;
        b = nb;
    }
    return Block64{a, b};
}

RoundTrace encrypt_trace(Block64 p, const MasterKey128& master, int rounds) {
    check_rounds(rounds);
    KeySchedule sched = key_schedule(master);
    RoundTrace trace;
    trace.rounds = rounds;
    Word32 a = p.left;
    Word32 b = p.right;
    for (int i = 0; i < rounds; ++i) {
        Word32 f = round_f(a, sched.rounds[i], (i % 2) == 0);
        Word32 na = b ^ f;
        b = a;
        a = na;
        trace.c[i] = Block64{b, a};
    }
    trace.ciphertext = Block64{a, b};
    return trace;
}

}  // namespace kasumi
