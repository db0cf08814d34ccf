// Birthday-collision laboratory: encrypt one plaintext under many seeded
// keys, group equal round-r outputs, and estimate conditional collision
// probabilities between rounds.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kasumi/types.hpp"

namespace kasumi {

struct ScanConfig {
    Block64 p0;
    uint64_t num_keys = 0;  // >= 2
    int rounds = 8;         // 1..8
    int compare_bits = 64;  // low-order bits of the round output compared
    uint64_t seed = 0;
    std::vector<MasterKey128> injected;  // occupy the first key slots
};

struct CollisionGroup {
    uint64_t output = 0;  // masked round output shared by the group
    std::vector<MasterKey128> keys;
};

struct CollisionReport {
    std::vector<CollisionGroup> groups;  // size >= 2 only, ascending output
    uint64_t pair_count = 0;             // sum of C(m,2) over groups
    uint64_t keys_scanned = 0;
    double expected_pairs = 0.0;  // C(N,2) / 2^compare_bits
};

// Raised when a scan would exceed the in-memory budget; retry with fewer
// keys or the bucketed on-disk mode.
class CapacityError : public std::runtime_error {
  public:
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// In-memory scan. Deterministic in (config, seed); worker count only
// changes the parallelism, never the report.
CollisionReport birthday_scan(const ScanConfig& config, int workers = 1);

// Opt-in on-disk variant for scans past the memory budget: records are
// partitioned into bucket files by output value, then grouped per bucket.
struct BucketedScanOptions {
    std::string tmp_dir = ".";
    int bucket_bits = 6;  // 2^bucket_bits temporary files
};
CollisionReport birthday_scan_bucketed(const ScanConfig& config, const BucketedScanOptions& opts,
                                       int workers = 1);

struct ConditionalStats {
    bool defined = false;  // false when no round-j collisions occurred
    uint64_t base_pairs = 0;   // pairs equal at round j
    uint64_t joint_pairs = 0;  // of those, pairs also equal at round i
    double estimate = 0.0;     // joint / base
    double ci_low = 0.0;       // 95% Wilson interval
    double ci_high = 0.0;
    uint64_t keys_scanned = 0;
};

// Estimates p(C_i = C'_i | C_j = C'_j) over seeded random keys, comparing
// round outputs on their low compare_bits. Requires round_i > round_j.
ConditionalStats conditional_stats(Block64 p0, uint64_t num_keys, int round_i, int round_j,
                                   int compare_bits, uint64_t seed, int workers = 1);

struct PairComparison {
    bool equal = false;
    RoundTrace trace1;
    RoundTrace trace2;
};

// Re-encrypts both keys and compares the round-`rounds` outputs.
PairComparison verify_equal_ciphertext_pair(Block64 p0, const MasterKey128& key1,
                                            const MasterKey128& key2, int rounds);

}  // namespace kasumi
