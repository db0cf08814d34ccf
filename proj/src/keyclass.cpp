#include "kasumi/keyclass.hpp"

#include <algorithm>
#include <stdexcept>

#include "kasumi/analysis.hpp"
#include "kasumi/core.hpp"
#include "kasumi/prng.hpp"

namespace kasumi {

namespace {

struct KasumiAlgebra {
    static constexpr int word_bits = 16;
    static const std::array<uint16_t, 8>& constants() { return KeySchedule::constants(); }
    static uint16_t fi(uint16_t x, uint16_t k) { return kasumi::fi(x, k); }
    static uint16_t fi_inv(uint16_t y, uint16_t k) { return kasumi::fi_inv(y, k); }
    static uint16_t recover_fi_key(uint16_t x, uint16_t y) { return kasumi::recover_fi_key(x, y); }
    static uint32_t fl(uint32_t x, uint16_t kl1, uint16_t kl2) {
        return kasumi::fl(x, FLKey{kl1, kl2});
    }
    static uint32_t fl_inv(uint32_t y, uint16_t kl1, uint16_t kl2) {
        return kasumi::fl_inv(y, FLKey{kl1, kl2});
    }
};

void require_rounds(const ClassSpec& spec, int want) {
    if (spec.rounds != want)
        throw std::invalid_argument("class spec: expected rounds=" + std::to_string(want) +
                                    ", got " + std::to_string(spec.rounds));
}

}  // namespace

MasterKey128 round1_complete(const ClassSpec& spec, const Round1Guess& g) {
    require_rounds(spec, 1);
    if (spec.c0.left != spec.p0.left)
        throw std::invalid_argument(
            "empty class: a 1-round pre-swap output must keep the left half");

    const auto& cst = KeySchedule::constants();
    // Round-1 schedule row over the guess.
    FLKey kl{rotl16(g.k1, 1), HalfWord16(g.k3 ^ cst[2])};
    HalfWord16 ko1 = rotl16(g.k2, 5);
    HalfWord16 ki1 = g.k5 ^ cst[4];
    HalfWord16 ki2 = g.k4 ^ cst[3];
    HalfWord16 ki3 = g.k8 ^ cst[7];

    Word32 x = fl(spec.p0.left, kl);
    Word32 y = spec.p0.right ^ spec.c0.right;
    auto [ko2, ko3] = fo_complete(x, y, ki1, ko1, ki2, ki3);

    MasterKey128 key;
    key.k = {g.k1, g.k2, g.k3, g.k4, g.k5, rotr16(ko2, 8), rotr16(ko3, 13), g.k8};
    return key;
}

std::vector<MasterKey128> round1_sample(const ClassSpec& spec, size_t count, uint64_t seed) {
    require_rounds(spec, 1);
    SplitMix64 rng(seed);
    std::vector<MasterKey128> keys;
    keys.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        Round1Guess g{rng.next_u16(), rng.next_u16(), rng.next_u16(),
                      rng.next_u16(), rng.next_u16(), rng.next_u16()};
        keys.push_back(round1_complete(spec, g));
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

Round2Context round2_context(const ClassSpec& spec, const Round2Head& head) {
    require_rounds(spec, 2);
    using Solver = detail::TailSolver<KasumiAlgebra>;
    auto ctx = Solver::context(spec.p0.left, spec.p0.right, spec.c0.left, spec.c0.right, head.k1,
                               head.k2, head.k3, head.k4);
    return Round2Context{ctx.a, ctx.b, ctx.c, ctx.d};
}

std::vector<Round2Tail> round2_solve_tail(const ClassSpec& spec, const Round2Head& head,
                                          SolveStats* stats, SolveStrategy strategy) {
    require_rounds(spec, 2);
    if (strategy != SolveStrategy::exhaustive_k6)
        throw std::invalid_argument("unknown solve strategy");

    using Solver = detail::TailSolver<KasumiAlgebra>;
    auto raw = Solver::solve_tail(spec.p0.left, spec.p0.right, spec.c0.left, spec.c0.right,
                                  head.k1, head.k2, head.k3, head.k4, stats);
    std::vector<Round2Tail> tails;
    tails.reserve(raw.size());
    for (const auto& t : raw) tails.push_back(Round2Tail{t[0], t[1], t[2], t[3]});
    std::sort(tails.begin(), tails.end());
    tails.erase(std::unique(tails.begin(), tails.end()), tails.end());
    return tails;
}

std::vector<MasterKey128> round2_search(const ClassSpec& spec, size_t head_count, uint64_t seed,
                                        SolveStats* stats) {
    require_rounds(spec, 2);
    SplitMix64 rng(seed);
    std::vector<MasterKey128> keys;
    for (size_t i = 0; i < head_count; ++i) {
        Round2Head head{rng.next_u16(), rng.next_u16(), rng.next_u16(), rng.next_u16()};
        for (const Round2Tail& t : round2_solve_tail(spec, head, stats)) {
            MasterKey128 key;
            key.k = {head.k1, head.k2, head.k3, head.k4, t.k5, t.k6, t.k7, t.k8};
            keys.push_back(key);
        }
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

}  // namespace kasumi
