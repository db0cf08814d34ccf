#include "kasumi/collision.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <thread>

#include "kasumi/core.hpp"
#include "kasumi/prng.hpp"

namespace kasumi {

namespace {

constexpr uint64_t kMaxInMemoryKeys = uint64_t(1) << 26;

uint64_t compare_mask(int bits) {
    return bits >= 64 ? ~uint64_t(0) : (uint64_t(1) << bits) - 1;
}

void validate(const ScanConfig& cfg) {
    if (cfg.num_keys < 2) throw std::invalid_argument("scan: num_keys must be >= 2");
    if (cfg.rounds < 1 || cfg.rounds > 8) throw std::invalid_argument("scan: rounds must be 1..8");
    if (cfg.compare_bits < 1 || cfg.compare_bits > 64)
        throw std::invalid_argument("scan: compare_bits must be 1..64");
    if (cfg.injected.size() > cfg.num_keys)
        throw std::invalid_argument("scan: more injected keys than num_keys");
}

MasterKey128 key_for_slot(const ScanConfig& cfg, uint64_t idx) {
    if (idx < cfg.injected.size()) return cfg.injected[idx];
    return key_at(cfg.seed, idx);
}

// Fills out[i] = masked round output for key slot begin+i.
void encrypt_range(const ScanConfig& cfg, uint64_t begin, uint64_t end, uint64_t mask,
                   uint64_t* out) {
    for (uint64_t i = begin; i < end; ++i) {
        MasterKey128 key = key_for_slot(cfg, i);
        out[i - begin] = encrypt(cfg.p0, key, cfg.rounds).value() & mask;
    }
}

void run_partitioned(uint64_t total, int workers, const auto& fn) {
    if (workers <= 1) {
        fn(uint64_t(0), total);
        return;
    }
    std::vector<std::thread> pool;
    uint64_t chunk = (total + uint64_t(workers) - 1) / uint64_t(workers);
    for (int w = 0; w < workers; ++w) {
        uint64_t begin = uint64_t(w) * chunk;
        uint64_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

double expected_pair_count(uint64_t n, int bits) {
    double pairs = 0.5 * double(n) * double(n - 1);
    return pairs * std::pow(2.0, -bits);
}

// Groups (value, slot) records sorted by value; emits groups of size >= 2.
CollisionReport group_records(const ScanConfig& cfg, std::vector<std::pair<uint64_t, uint64_t>>& recs) {
    std::sort(recs.begin(), recs.end());
    CollisionReport report;
    report.keys_scanned = cfg.num_keys;
    report.expected_pairs = expected_pair_count(cfg.num_keys, cfg.compare_bits);
    for (size_t i = 0; i < recs.size();) {
        size_t j = i;
        while (j < recs.size() && recs[j].first == recs[i].first) ++j;
        size_t m = j - i;
        if (m >= 2) {
            CollisionGroup grp;
            grp.output = recs[i].first;
            grp.keys.reserve(m);
            for (size_t t = i; t < j; ++t) grp.keys.push_back(key_for_slot(cfg, recs[t].second));
            report.groups.push_back(std::move(grp));
            report.pair_count += uint64_t(m) * (m - 1) / 2;
        }
        i = j;
    }
    return report;
}

}  // namespace

CollisionReport birthday_scan(const ScanConfig& cfg, int workers) {
    validate(cfg);
    if (cfg.num_keys > kMaxInMemoryKeys)
        throw CapacityError("scan of " + std::to_string(cfg.num_keys) +
                            " keys exceeds the in-memory budget (2^26); lower num_keys or use "
                            "the bucketed on-disk mode");

    const uint64_t mask = compare_mask(cfg.compare_bits);
    std::vector<uint64_t> outputs(cfg.num_keys);
    run_partitioned(cfg.num_keys, workers, [&](uint64_t begin, uint64_t end) {
        encrypt_range(cfg, begin, end, mask, outputs.data() + begin);
    });

    std::vector<std::pair<uint64_t, uint64_t>> recs(cfg.num_keys);
    for (uint64_t i = 0; i < cfg.num_keys; ++i) recs[i] = {outputs[i], i};
    return group_records(cfg, recs);
}

CollisionReport birthday_scan_bucketed(const ScanConfig& cfg, const BucketedScanOptions& opts,
                                       int workers) {
    validate(cfg);
    if (opts.bucket_bits < 1 || opts.bucket_bits > 12)
        throw std::invalid_argument("bucketed scan: bucket_bits must be 1..12");

    namespace fs = std::filesystem;
    const uint64_t mask = compare_mask(cfg.compare_bits);
    const size_t nbuckets = size_t(1) << opts.bucket_bits;
    const uint64_t bucket_mask = nbuckets - 1;

    struct TempFile {
        fs::path path;
        std::FILE* f = nullptr;
        ~TempFile() {
            if (f) std::fclose(f);
            std::error_code ec;
            fs::remove(path, ec);
        }
    };
    std::vector<TempFile> buckets(nbuckets);
    for (size_t b = 0; b < nbuckets; ++b) {
        buckets[b].path = fs::path(opts.tmp_dir) /
                          ("kasumi_scan_" + std::to_string(cfg.seed) + "_" + std::to_string(b) + ".tmp");
        buckets[b].f = std::fopen(buckets[b].path.string().c_str(), "wb+");
        if (!buckets[b].f)
            throw std::runtime_error("bucketed scan: cannot create temp file in " + opts.tmp_dir);
    }

    // Pass 1: encrypt in chunks (parallel within a chunk), append records
    // to bucket files in slot order.
    const uint64_t chunk_size = uint64_t(1) << 16;
    std::vector<uint64_t> chunk(chunk_size);
    for (uint64_t base = 0; base < cfg.num_keys; base += chunk_size) {
        uint64_t end = std::min(cfg.num_keys, base + chunk_size);
        run_partitioned(end - base, workers, [&](uint64_t b, uint64_t e) {
            encrypt_range(cfg, base + b, base + e, mask, chunk.data() + b);
        });
        for (uint64_t i = base; i < end; ++i) {
            uint64_t value = chunk[i - base];
            uint64_t rec[2] = {value, i};
            std::fwrite(rec, sizeof(rec), 1, buckets[value & bucket_mask].f);
        }
    }

    // Pass 2: group bucket by bucket.
    CollisionReport report;
    report.keys_scanned = cfg.num_keys;
    report.expected_pairs = expected_pair_count(cfg.num_keys, cfg.compare_bits);
    std::vector<std::pair<uint64_t, uint64_t>> recs;
    for (size_t b = 0; b < nbuckets; ++b) {
        std::fflush(buckets[b].f);
        std::rewind(buckets[b].f);
        recs.clear();
        uint64_t rec[2];
        while (std::fread(rec, sizeof(rec), 1, buckets[b].f) == 1) recs.emplace_back(rec[0], rec[1]);
        CollisionReport part = group_records(cfg, recs);
        for (auto& g : part.groups) report.groups.push_back(std::move(g));
        report.pair_count += part.pair_count;
    }
    std::sort(report.groups.begin(), report.groups.end(),
              [](const CollisionGroup& a, const CollisionGroup& b) { return a.output < b.output; });
    return report;
}

ConditionalStats conditional_stats(Block64 p0, uint64_t num_keys, int round_i, int round_j,
                                   int compare_bits, uint64_t seed, int workers) {
    if (round_j < 1 || round_i > 8 || round_i <= round_j)
        throw std::invalid_argument("conditional stats: rounds must satisfy 1 <= j < i <= 8");
    if (num_keys < 2) throw std::invalid_argument("conditional stats: num_keys must be >= 2");
    if (num_keys > kMaxInMemoryKeys)
        throw CapacityError("conditional stats: num_keys exceeds the in-memory budget (2^26)");
    if (compare_bits < 1 || compare_bits > 64)
        throw std::invalid_argument("conditional stats: compare_bits must be 1..64");

    const uint64_t mask = compare_mask(compare_bits);
    // Per key: masked outputs at round j and round i.
    std::vector<std::pair<uint64_t, uint64_t>> vals(num_keys);
    run_partitioned(num_keys, workers, [&](uint64_t begin, uint64_t end) {
        for (uint64_t idx = begin; idx < end; ++idx) {
            MasterKey128 key = key_at(seed, idx);
            RoundTrace tr = encrypt_trace(p0, key, round_i);
            auto round_value = [&tr](int r) {
                const Block64& c = tr.c[size_t(r - 1)];
                return (uint64_t(c.right) << 32) | c.left;  // post-swap value
            };
            vals[idx] = {round_value(round_j) & mask, round_value(round_i) & mask};
        }
    });

    std::sort(vals.begin(), vals.end());
    ConditionalStats st;
    st.keys_scanned = num_keys;
    for (size_t i = 0; i < vals.size();) {
        size_t j = i;
        while (j < vals.size() && vals[j].first == vals[i].first) ++j;
        size_t m = j - i;
        if (m >= 2) {
            st.base_pairs += uint64_t(m) * (m - 1) / 2;
            // joint pairs: equal second component within the run
            for (size_t a = i; a < j;) {
                size_t b = a;
                while (b < j && vals[b].second == vals[a].second) ++b;
                size_t mm = b - a;
                if (mm >= 2) st.joint_pairs += uint64_t(mm) * (mm - 1) / 2;
                a = b;
            }
        }
        i = j;
    }
    if (st.base_pairs > 0) {
        st.defined = true;
        double n = double(st.base_pairs);
        double p = double(st.joint_pairs) / n;
        st.estimate = p;
        // 95% Wilson interval
        const double z = 1.959963984540054;
        double z2 = z * z;
        double denom = 1.0 + z2 / n;
        double center = (p + z2 / (2 * n)) / denom;
        double half = (z / denom) * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
        st.ci_low = std::max(0.0, center - half);
        st.ci_high = std::min(1.0, center + half);
    }
    return st;
}

PairComparison verify_equal_ciphertext_pair(Block64 p0, const MasterKey128& key1,
                                            const MasterKey128& key2, int rounds) {
    PairComparison cmp;
    cmp.trace1 = encrypt_trace(p0, key1, rounds);
    cmp.trace2 = encrypt_trace(p0, key2, rounds);
    cmp.equal = cmp.trace1.ciphertext == cmp.trace2.ciphertext;
    return cmp;
}

}  // namespace kasumi
