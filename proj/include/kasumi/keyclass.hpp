// Equivalence-class generation for 1-round and 2-round encryption in the
// pre-swap convention: complete a guessed sub-key portion into full
// 128-bit keys mapping p0 to c0.
//
// Guesses are expressed in master-key coordinates k1..k8; the schedule
// row maps (rotate, constant-xor) are applied and un-applied here so
// completed keys are directly usable.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "kasumi/types.hpp"

namespace kasumi {

// Fixed (p0, c0, round count) naming the class [K]_{p0,c0}.
// rounds must be 1 or 2; c0 is a pre-swap round output.
struct ClassSpec {
    Block64 p0;
    Block64 c0;
    int rounds = 1;
};

// The 96 guessed bits of the 1-round completion, as master-key words.
struct Round1Guess {
    HalfWord16 k1 = 0, k2 = 0, k3 = 0, k4 = 0, k5 = 0, k8 = 0;
};

struct Round2Head {
    HalfWord16 k1 = 0, k2 = 0, k3 = 0, k4 = 0;
};

// Derived context for one head: a = FL(P_L, round-1 KL), b = C_L ^ P_R,
// c = C_L, d = FL^-1(C_R ^ P_L, round-2 KL).
struct Round2Context {
    Word32 a = 0, b = 0, c = 0, d = 0;
};

struct Round2Tail {
    HalfWord16 k5 = 0, k6 = 0, k7 = 0, k8 = 0;

    friend auto operator<=>(const Round2Tail&, const Round2Tail&) = default;
};

enum class SolveStrategy {
    exhaustive_k6,  // sweep the K6 pivot, derive the rest, filter by the residual
};

// Operation counters for the tail solve. One pivot iteration performs a
// bounded handful of fi-family evaluations.
struct SolveStats {
    uint64_t pivot_iterations = 0;
    uint64_t fi_evaluations = 0;

    void add(const SolveStats& o) {
        pivot_iterations += o.pivot_iterations;
        fi_evaluations += o.fi_evaluations;
    }
};

// Completes a 1-round guess into the unique full key with
// encrypt(p0, key, 1, pre_swap=true) == c0. Requires spec.rounds == 1 and
// p0.left == c0.left (otherwise the class is empty and this throws).
MasterKey128 round1_complete(const ClassSpec& spec, const Round1Guess& guess);

// `count` completed keys from seeded pseudorandom guesses, sorted.
std::vector<MasterKey128> round1_sample(const ClassSpec& spec, size_t count, uint64_t seed);

Round2Context round2_context(const ClassSpec& spec, const Round2Head& head);

// All tails (k5..k8) such that head+tail satisfies the 2-round relation.
// An empty result is a normal outcome.
std::vector<Round2Tail> round2_solve_tail(const ClassSpec& spec, const Round2Head& head,
                                          SolveStats* stats = nullptr,
                                          SolveStrategy strategy = SolveStrategy::exhaustive_k6);

// Runs the tail solve over `head_count` seeded pseudorandom heads and
// returns every full key found, sorted and deduplicated.
std::vector<MasterKey128> round2_search(const ClassSpec& spec, size_t head_count, uint64_t seed,
                                        SolveStats* stats = nullptr);

namespace detail {

// The two-round tail solve over a pluggable word algebra, so narrowed
// variants can run the identical derivation against exhaustive oracles.
//
// An algebra A provides:
//   static constexpr int word_bits;
//   static const std::array<uint16_t, 8>& constants();
//   static uint16_t fi(uint16_t x, uint16_t k);
//   static uint16_t fi_inv(uint16_t y, uint16_t k);
//   static uint16_t recover_fi_key(uint16_t x, uint16_t y);
//   static uint32_t fl(uint32_t x, uint16_t kl1, uint16_t kl2);
//   static uint32_t fl_inv(uint32_t y, uint16_t kl1, uint16_t kl2);
// Double-words pack as (hi << word_bits) | lo.
template <class A>
struct TailSolver {
    static constexpr int kBits = A::word_bits;
    static constexpr uint16_t kMask = uint16_t((uint32_t(1) << kBits) - 1);

    static uint16_t rotl(uint16_t x, int r) {
        r %= kBits;
        x &= kMask;
        if (r == 0) return x;
        return uint16_t(((x << r) | (x >> (kBits - r))) & kMask);
    }
    static uint16_t rotr(uint16_t x, int r) { return rotl(x, kBits - (r % kBits)); }
    static uint16_t hi(uint32_t d) { return uint16_t((d >> kBits) & kMask); }
    static uint16_t lo(uint32_t d) { return uint16_t(d & kMask); }

    struct Context {
        uint32_t a, b, c, d;
    };

    static Context context(uint32_t pl, uint32_t pr, uint32_t cl, uint32_t cr, uint16_t k1,
                           uint16_t k2, uint16_t k3, uint16_t k4) {
        const auto& cst = A::constants();
        Context ctx;
        ctx.a = A::fl(pl, rotl(k1, 1), uint16_t((k3 ^ cst[2]) & kMask));
        ctx.b = cl ^ pr;
        ctx.c = cl;
        ctx.d = A::fl_inv(cr ^ pl, rotl(k2, 1), uint16_t((k4 ^ cst[3]) & kMask));
        return ctx;
    }

    // K6 pivot sweep. For each K6: force K5 from the first chain, then K7
    // and K8 from the second, and keep the tail iff the remaining 16-bit
    // member of the first chain agrees.
    static std::vector<std::array<uint16_t, 4>> solve(const Context& ctx, uint16_t k2, uint16_t k3,
                                                      uint16_t k1p, uint16_t k4p,
                                                      SolveStats* stats) {
        const auto& cst = A::constants();
        const uint16_t aL = hi(ctx.a), aR = lo(ctx.a);
        const uint16_t bL = hi(ctx.b), bR = lo(ctx.b);
        const uint16_t cL = hi(ctx.c), cR = lo(ctx.c);
        const uint16_t dL = hi(ctx.d), dR = lo(ctx.d);
        const uint16_t ko11 = rotl(k2, 5);
        const uint16_t ko21 = rotl(k3, 5);
        const uint16_t k8_term = A::fi_inv(uint16_t(dL ^ dR), k1p);  // K6-independent

        SolveStats local;
        local.fi_evaluations = 1;
        std::vector<std::array<uint16_t, 4>> tails;
        const uint32_t space = uint32_t(1) << kBits;
        for (uint32_t K6 = 0; K6 < space; ++K6) {
            uint16_t v = uint16_t(bL ^ A::fi(uint16_t(aR ^ rotl(uint16_t(K6), 8)), k4p));
            uint16_t k5p = A::recover_fi_key(uint16_t(aL ^ ko11), uint16_t(v ^ aR));
            uint16_t k6p = uint16_t((K6 ^ cst[5]) & kMask);
            uint16_t w = uint16_t(cR ^ A::fi(uint16_t(cL ^ ko21), k6p));
            uint16_t k7 = rotr(uint16_t(A::fi_inv(uint16_t(dL ^ w), k5p) ^ cR), 8);
            uint16_t k8 = rotr(uint16_t(w ^ k8_term), 13);
            uint16_t k8p = uint16_t((k8 ^ cst[7]) & kMask);
            local.pivot_iterations += 1;
            local.fi_evaluations += 5;
            if (uint16_t(rotl(k7, 13) ^ A::fi_inv(uint16_t(bL ^ bR), k8p)) == v) {
                tails.push_back({uint16_t((k5p ^ cst[4]) & kMask), uint16_t(K6), k7, k8});
            }
        }
        if (stats) stats->add(local);
        return tails;
    }

    static std::vector<std::array<uint16_t, 4>> solve_tail(uint32_t pl, uint32_t pr, uint32_t cl,
                                                           uint32_t cr, uint16_t k1, uint16_t k2,
                                                           uint16_t k3, uint16_t k4,
                                                           SolveStats* stats) {
        const auto& cst = A::constants();
        Context ctx = context(pl, pr, cl, cr, k1, k2, k3, k4);
        return solve(ctx, k2, k3, uint16_t((k1 ^ cst[0]) & kMask), uint16_t((k4 ^ cst[3]) & kMask),
                     stats);
    }
};

}  // namespace detail

}  // namespace kasumi
