// Command-line front end: every workbench operation with hex I/O,
// explicit seeds, and text or line-record (JSON) output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 capacity error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kasumi/analysis.hpp"
#include "kasumi/collision.hpp"
#include "kasumi/core.hpp"
#include "kasumi/hex.hpp"
#include "kasumi/keyclass.hpp"
#include "kasumi/prng.hpp"
#include "kasumi/toy.hpp"

using json = nlohmann::json;
using namespace kasumi;

namespace {

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool g_records = false;

void emit(const json& j) { std::cout << j.dump() << "\n"; }

HalfWord16 parse_h16(const std::string& s, const char* what) {
    return HalfWord16(parse_hex(s, 4, what));
}
Word32 parse_w32(const std::string& s, const char* what) { return Word32(parse_hex(s, 8, what)); }

// ---------------------------------------------------------------- vectors

struct VectorRecord {
    Block64 p;
    MasterKey128 key;
    int rounds = 8;
    Block64 expected;
    std::vector<Block64> trace;  // optional, pre-swap (left, right) pairs
};

// One record per line: <plain> <key> <rounds> <expected> [left:right,...]
// '#' starts a comment.
std::vector<VectorRecord> parse_vector_file(std::istream& in) {
    std::vector<VectorRecord> records;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string p, key, rounds, expected, trace;
        if (!(ls >> p)) continue;
        if (!(ls >> key >> rounds >> expected))
            throw std::invalid_argument("vector file line " + std::to_string(lineno) +
                                        ": expected <plain> <key> <rounds> <expected> [trace]");
        VectorRecord rec;
        rec.p = Block64::from_hex(p);
        rec.key = MasterKey128::from_hex(key);
        rec.rounds = std::stoi(rounds);
        rec.expected = Block64::from_hex(expected);
        if (ls >> trace) {
            std::istringstream ts(trace);
            std::string item;
            while (std::getline(ts, item, ',')) {
                auto colon = item.find(':');
                if (colon == std::string::npos)
                    throw std::invalid_argument("vector file line " + std::to_string(lineno) +
                                                ": trace entries are left:right");
                rec.trace.push_back(Block64{
                    Word32(std::stoul(item.substr(0, colon), nullptr, 16)),
                    Word32(std::stoul(item.substr(colon + 1), nullptr, 16))});
            }
        }
        records.push_back(std::move(rec));
    }
    return records;
}

// The canonical golden vectors: two keys sending the zero block to the
// same 8-round ciphertext, with full per-round traces.
const char* kAppendix1Vectors = R"(# plain key rounds expected trace(left:right per round)
0000000000000000 f1d941159ca8b6238135dacb8a370940 8 2dbcda8d84cdad86 0:db16eed5,db16eed5:48d17eb6,48d17eb6:2ebddad4,2ebddad4:7b006cf8,7b006cf8:d8805ffd,d8805ffd:9f570e58,9f570e58:84cdad86,84cdad86:2dbcda8d
0000000000000000 caff6ac383136437a70c4560ac98ce9f 8 2dbcda8d84cdad86 0:aa108129,aa108129:ec2e85a9,ec2e85a9:309e5e7b,309e5e7b:8f1313fb,8f1313fb:2b23dcc6,2b23dcc6:9b7de2ee,9b7de2ee:84cdad86,84cdad86:2dbcda8d
)";

int cmd_vectors(const std::string& file) {
    std::vector<VectorRecord> records;
    if (file == "appendix1") {
        std::istringstream in(kAppendix1Vectors);
        records = parse_vector_file(in);
    } else {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("vectors: cannot open file " + file);
        records = parse_vector_file(in);
    }
    if (records.empty()) throw std::invalid_argument("vectors: no records found");

    bool all_ok = true;
    for (size_t i = 0; i < records.size(); ++i) {
        const VectorRecord& rec = records[i];
        RoundTrace tr = encrypt_trace(rec.p, rec.key, rec.rounds);
        bool ok = tr.ciphertext == rec.expected;
        int bad_round = 0;
        for (size_t r = 0; r < rec.trace.size() && r < size_t(rec.rounds); ++r) {
            if (!(tr.c[r] == rec.trace[r])) {
                ok = false;
                bad_round = int(r) + 1;
                break;
            }
        }
        if (g_records) {
            emit(json{{"type", "vector"},
                      {"index", i},
                      {"key", rec.key.to_hex()},
                      {"rounds", rec.rounds},
                      {"ciphertext", tr.ciphertext.to_hex()},
                      {"expected", rec.expected.to_hex()},
                      {"match", ok}});
        } else {
            std::cout << "vector " << i << " key=" << rec.key.to_hex() << ": "
                      << (ok ? "ok" : (bad_round ? "trace mismatch at round " + std::to_string(bad_round)
                                                 : "ciphertext mismatch"))
                      << "\n";
        }
        all_ok = all_ok && ok;
    }
    if (!all_ok) throw VerificationFailure("vector file contains mismatches");
    if (!g_records) std::cout << "all " << records.size() << " vectors matched\n";
    return 0;
}

// ---------------------------------------------------------------- simple ops

int cmd_encrypt(const std::string& p, const std::string& key, int rounds, bool pre_swap,
                bool is_decrypt) {
    Block64 block = Block64::from_hex(p);
    MasterKey128 master = MasterKey128::from_hex(key);
    Block64 out = is_decrypt ? decrypt(block, master, rounds, pre_swap)
                             : encrypt(block, master, rounds, pre_swap);
    if (g_records) {
        emit(json{{"type", is_decrypt ? "decrypt" : "encrypt"},
                  {"input", block.to_hex()},
                  {"key", master.to_hex()},
                  {"rounds", rounds},
                  {"pre_swap", pre_swap},
                  {"output", out.to_hex()}});
    } else {
        std::cout << out.to_hex() << "\n";
    }
    return 0;
}

int cmd_trace(const std::string& p, const std::string& key, int rounds) {
    Block64 block = Block64::from_hex(p);
    MasterKey128 master = MasterKey128::from_hex(key);
    RoundTrace tr = encrypt_trace(block, master, rounds);
    if (g_records) {
        for (int i = 0; i < rounds; ++i)
            emit(json{{"type", "round"},
                      {"round", i + 1},
                      {"left", to_hex(tr.c[size_t(i)].left, 8)},
                      {"right", to_hex(tr.c[size_t(i)].right, 8)}});
        emit(json{{"type", "ciphertext"}, {"value", tr.ciphertext.to_hex()}});
    } else {
        for (int i = 0; i < rounds; ++i) std::cout << tr.line(i) << "\n";
        std::cout << "ciphertext=" << tr.ciphertext.to_hex() << "\n";
    }
    return 0;
}

int cmd_fi_recover(const std::string& xs, const std::string& ys) {
    HalfWord16 x = parse_h16(xs, "x"), y = parse_h16(ys, "y");
    HalfWord16 ki = recover_fi_key(x, y);
    if (fi(x, ki) != y) throw VerificationFailure("recovered key fails fi(x, ki) == y");
    if (g_records) {
        emit(json{{"type", "fi_recover"},
                  {"x", to_hex(x, 4)},
                  {"y", to_hex(y, 4)},
                  {"ki", to_hex(ki, 4)}});
    } else {
        std::cout << "ki=" << to_hex(ki, 4) << "\n";
    }
    return 0;
}

int cmd_fi_delta(const std::string& xs, const std::string& xs2) {
    HalfWord16 x = parse_h16(xs, "x"), x2 = parse_h16(xs2, "x2");
    HalfWord16 delta = fi_equal_output_delta(x, x2);
    if (g_records) {
        emit(json{{"type", "fi_delta"},
                  {"x", to_hex(x, 4)},
                  {"x2", to_hex(x2, 4)},
                  {"delta", to_hex(delta, 4)}});
    } else {
        std::cout << "delta=" << to_hex(delta, 4)
                  << "  (fi(x, ki) == fi(x2, ki ^ delta) for every ki)\n";
    }
    return 0;
}

int cmd_fo_complete(const std::string& xs, const std::string& ys, const std::string& ki1s,
                    const std::string& ko1s, const std::string& ki2s, const std::string& ki3s) {
    Word32 x = parse_w32(xs, "x"), y = parse_w32(ys, "y");
    HalfWord16 ki1 = parse_h16(ki1s, "ki1"), ko1 = parse_h16(ko1s, "ko1");
    HalfWord16 ki2 = parse_h16(ki2s, "ki2"), ki3 = parse_h16(ki3s, "ki3");
    auto [ko2, ko3] = fo_complete(x, y, ki1, ko1, ki2, ki3);
    FOKeySet keys{ko1, ko2, ko3, ki1, ki2, ki3};
    if (fo(x, keys) != y) throw VerificationFailure("completed key set fails fo(x, keys) == y");
    if (g_records) {
        emit(json{{"type", "fo_complete"},
                  {"x", to_hex(x, 8)},
                  {"y", to_hex(y, 8)},
                  {"ko2", to_hex(ko2, 4)},
                  {"ko3", to_hex(ko3, 4)}});
    } else {
        std::cout << "ko2=" << to_hex(ko2, 4) << " ko3=" << to_hex(ko3, 4) << "\n";
    }
    return 0;
}

int cmd_fl_class(const std::string& xs, const std::string& ys) {
    Word32 x = parse_w32(xs, "x"), y = parse_w32(ys, "y");
    FLKeyClass cls = fl_key_class(x, y);
    if (g_records) {
        emit(json{{"type", "fl_class"},
                  {"x", to_hex(x, 8)},
                  {"y", to_hex(y, 8)},
                  {"consistent", cls.consistent},
                  {"kl1_mask", to_hex(cls.kl1_forced_mask, 4)},
                  {"kl1_value", to_hex(cls.kl1_forced_value, 4)},
                  {"kl2_mask", to_hex(cls.kl2_forced_mask, 4)},
                  {"kl2_value", to_hex(cls.kl2_forced_value, 4)},
                  {"free_bits", cls.free_bit_count},
                  {"size", cls.size()}});
    } else {
        if (!cls.consistent) {
            std::cout << "inconsistent: no key maps x to y\n";
        } else {
            std::cout << "kl1: value " << to_hex(cls.kl1_forced_value, 4) << " on mask "
                      << to_hex(cls.kl1_forced_mask, 4) << "\n"
                      << "kl2: value " << to_hex(cls.kl2_forced_value, 4) << " on mask "
                      << to_hex(cls.kl2_forced_mask, 4) << "\n"
                      << "free bits: " << cls.free_bit_count << " (class size " << cls.size()
                      << ")\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------- classes

int cmd_class1(const std::string& p0s, const std::string& c0s, uint64_t count, uint64_t seed) {
    ClassSpec spec{Block64::from_hex(p0s), Block64::from_hex(c0s), 1};
    auto keys = round1_sample(spec, size_t(count), seed);
    size_t verified = 0;
    for (const MasterKey128& key : keys) {
        if (encrypt(spec.p0, key, 1, true) == spec.c0) ++verified;
        if (g_records) emit(json{{"type", "member"}, {"key", key.to_hex()}});
        else std::cout << key.to_hex() << "\n";
    }
    json summary{{"type", "summary"}, {"requested", count},   {"returned", keys.size()},
                 {"verified", verified}, {"seed", seed},       {"rounds", 1},
                 {"p0", spec.p0.to_hex()}, {"c0", spec.c0.to_hex()}};
    if (g_records) emit(summary);
    else std::cerr << "class1: " << verified << "/" << keys.size() << " members verified\n";
    if (verified != keys.size()) throw VerificationFailure("class1: unverified members");
    return 0;
}

int cmd_class2(const std::string& p0s, const std::string& c0s, uint64_t heads, uint64_t seed) {
    ClassSpec spec{Block64::from_hex(p0s), Block64::from_hex(c0s), 2};
    SolveStats stats;
    auto keys = round2_search(spec, size_t(heads), seed, &stats);
    size_t verified = 0;
    for (const MasterKey128& key : keys) {
        if (encrypt(spec.p0, key, 2, true) == spec.c0) ++verified;
        if (g_records) emit(json{{"type", "member"}, {"key", key.to_hex()}});
        else std::cout << key.to_hex() << "\n";
    }
    double rate = heads ? double(keys.size()) / double(heads) : 0.0;
    json summary{{"type", "summary"},
                 {"heads", heads},
                 {"returned", keys.size()},
                 {"verified", verified},
                 {"survivors_per_head", rate},
                 {"pivot_iterations", stats.pivot_iterations},
                 {"fi_evaluations", stats.fi_evaluations},
                 {"seed", seed},
                 {"rounds", 2},
                 {"p0", spec.p0.to_hex()},
                 {"c0", spec.c0.to_hex()}};
    if (g_records) emit(summary);
    else
        std::cerr << "class2: " << keys.size() << " members from " << heads << " heads ("
                  << rate << " per head), " << verified << " verified\n";
    if (verified != keys.size()) throw VerificationFailure("class2: unverified members");
    return 0;
}

// ---------------------------------------------------------------- toy attack

int cmd_toy_attack(int n, int k, int rounds, uint64_t sbox_seed, uint64_t seed, int npairs) {
    ToyCipher cipher(ToyCipherParams{n, k, rounds, sbox_seed});
    SplitMix64 rng(seed);
    uint32_t hidden = uint32_t(rng.next()) & cipher.key_mask();
    std::vector<KnownPair> pairs;
    for (int i = 0; i < npairs; ++i) {
        uint32_t p = uint32_t(rng.next()) & cipher.block_mask();
        pairs.push_back({p, cipher.encrypt(p, hidden)});
    }
    ToyCipher::RecoverStats stats;
    auto found = cipher.algorithm1_recover(pairs, &stats);
    bool fits = false;
    if (found) {
        fits = true;
        for (const KnownPair& pr : pairs) fits = fits && cipher.encrypt(pr.p, *found) == pr.c;
    }
    if (g_records) {
        emit(json{{"type", "toy_attack"},
                  {"n", n},
                  {"k", k},
                  {"rounds", rounds},
                  {"sbox_seed", sbox_seed},
                  {"seed", seed},
                  {"pairs", npairs},
                  {"hidden_key", hidden},
                  {"recovered", found ? json(*found) : json(nullptr)},
                  {"fits_all_pairs", fits},
                  {"attack_encryptions", stats.attack_encryptions},
                  {"scanned_keys", stats.scanned_keys},
                  {"class_size", stats.class_size}});
    } else {
        std::cout << "hidden key:    " << hidden << "\n";
        if (found)
            std::cout << "recovered key: " << *found << (fits ? " (fits all pairs)" : "") << "\n";
        else
            std::cout << "recovered key: none\n";
        std::cout << "attack encryptions: " << stats.attack_encryptions
                  << " (scanned " << stats.scanned_keys << " keys, class size "
                  << stats.class_size << ")\n";
    }
    if (!found || !fits) throw VerificationFailure("toy attack did not produce a fitting key");
    return 0;
}

// ---------------------------------------------------------------- collisions

int cmd_collide(const std::string& p0s, uint64_t num_keys, int rounds, int compare_bits,
                uint64_t seed, int workers, const std::vector<std::string>& inject, bool bucketed,
                const std::string& tmp_dir, int bucket_bits) {
    ScanConfig cfg;
    cfg.p0 = Block64::from_hex(p0s);
    cfg.num_keys = num_keys;
    cfg.rounds = rounds;
    cfg.compare_bits = compare_bits;
    cfg.seed = seed;
    for (const std::string& s : inject) cfg.injected.push_back(MasterKey128::from_hex(s));

    std::cerr << "collide: scanning " << num_keys << " keys (rounds=" << rounds
              << ", compare_bits=" << compare_bits << ", seed=" << seed << ")\n";
    CollisionReport report =
        bucketed ? birthday_scan_bucketed(cfg, BucketedScanOptions{tmp_dir, bucket_bits}, workers)
                 : birthday_scan(cfg, workers);

    int out_digits = (compare_bits + 3) / 4;
    for (const CollisionGroup& grp : report.groups) {
        if (g_records) {
            json keys = json::array();
            for (const MasterKey128& key : grp.keys) keys.push_back(key.to_hex());
            emit(json{{"type", "group"}, {"output", to_hex(grp.output, out_digits)}, {"keys", keys}});
        } else {
            std::cout << "output " << to_hex(grp.output, out_digits) << ":";
            for (const MasterKey128& key : grp.keys) std::cout << " " << key.to_hex();
            std::cout << "\n";
        }
    }
    json summary{{"type", "summary"},
                 {"keys_scanned", report.keys_scanned},
                 {"groups", report.groups.size()},
                 {"pairs_found", report.pair_count},
                 {"expected_pairs", report.expected_pairs},
                 {"seed", seed},
                 {"rounds", rounds},
                 {"compare_bits", compare_bits},
                 {"p0", cfg.p0.to_hex()}};
    if (g_records) emit(summary);
    else
        std::cout << "pairs found: " << report.pair_count << " (expected "
                  << report.expected_pairs << ") across " << report.groups.size()
                  << " groups of " << report.keys_scanned << " keys\n";
    return 0;
}

int cmd_cond_stats(const std::string& p0s, uint64_t num_keys, int round_i, int round_j,
                   int compare_bits, uint64_t seed, int workers) {
    Block64 p0 = Block64::from_hex(p0s);
    std::cerr << "cond-stats: scanning " << num_keys << " keys (i=" << round_i << ", j=" << round_j
              << ", compare_bits=" << compare_bits << ")\n";
    ConditionalStats st = conditional_stats(p0, num_keys, round_i, round_j, compare_bits, seed, workers);
    if (g_records) {
        emit(json{{"type", "cond_stats"},
                  {"i", round_i},
                  {"j", round_j},
                  {"compare_bits", compare_bits},
                  {"keys_scanned", st.keys_scanned},
                  {"base_pairs", st.base_pairs},
                  {"joint_pairs", st.joint_pairs},
                  {"defined", st.defined},
                  {"estimate", st.defined ? json(st.estimate) : json(nullptr)},
                  {"ci_low", st.ci_low},
                  {"ci_high", st.ci_high},
                  {"seed", seed}});
    } else if (!st.defined) {
        std::cout << "undefined: no round-" << round_j << " collisions among " << st.keys_scanned
                  << " keys (0 base pairs)\n";
    } else {
        std::cout << "p(C" << round_i << " = C'" << round_i << " | C" << round_j << " = C'"
                  << round_j << ") ~= " << st.estimate << "  [" << st.ci_low << ", " << st.ci_high
                  << "] 95% CI, " << st.joint_pairs << "/" << st.base_pairs << " pairs\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"KASUMI cryptanalysis workbench"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format: text or records (JSON lines)")
        ->check(CLI::IsMember({"text", "records"}));

    // encrypt / decrypt
    std::string p = "0000000000000000", c, key, x, y, x2, p0, c0;
    std::string ki1, ko1, ki2, ki3;
    int rounds = 8;
    bool pre_swap = false;

    auto* enc = app.add_subcommand("encrypt", "Encrypt a 64-bit block");
    enc->add_option("--p", p, "Plaintext (16 hex digits)")->required();
    enc->add_option("--key", key, "Master key (32 hex digits)")->required();
    enc->add_option("--rounds", rounds, "Rounds 1..8")->default_val(8);
    enc->add_flag("--pre-swap", pre_swap, "Return the last round output before the half swap");

    auto* dec = app.add_subcommand("decrypt", "Decrypt a 64-bit block");
    dec->add_option("--c", c, "Ciphertext (16 hex digits)")->required();
    dec->add_option("--key", key, "Master key (32 hex digits)")->required();
    dec->add_option("--rounds", rounds, "Rounds 1..8")->default_val(8);
    dec->add_flag("--pre-swap", pre_swap, "Input is a pre-swap round output");

    auto* trc = app.add_subcommand("trace", "Print per-round outputs");
    trc->add_option("--p", p, "Plaintext (16 hex digits)")->required();
    trc->add_option("--key", key, "Master key (32 hex digits)")->required();
    trc->add_option("--rounds", rounds, "Rounds 1..8")->default_val(8);

    auto* fir = app.add_subcommand("fi-recover", "Recover the unique FI key for (x, y)");
    fir->add_option("--x", x, "FI input (4 hex digits)")->required();
    fir->add_option("--y", y, "FI output (4 hex digits)")->required();

    auto* fid = app.add_subcommand("fi-delta", "Key delta giving equal FI outputs for (x, x2)");
    fid->add_option("--x", x, "First input (4 hex digits)")->required();
    fid->add_option("--x2", x2, "Second input (4 hex digits)")->required();

    auto* foc = app.add_subcommand("fo-complete", "Complete (ko2, ko3) for an FO input/output");
    foc->add_option("--x", x, "FO input (8 hex digits)")->required();
    foc->add_option("--y", y, "FO output (8 hex digits)")->required();
    foc->add_option("--ki1", ki1, "Guess (4 hex digits)")->required();
    foc->add_option("--ko1", ko1, "Guess (4 hex digits)")->required();
    foc->add_option("--ki2", ki2, "Guess (4 hex digits)")->required();
    foc->add_option("--ki3", ki3, "Guess (4 hex digits)")->required();

    auto* flc = app.add_subcommand("fl-class", "Classify FL sub-keys mapping x to y");
    flc->add_option("--x", x, "FL input (8 hex digits)")->required();
    flc->add_option("--y", y, "FL output (8 hex digits)")->required();

    uint64_t count = 10, heads = 10, seed = 0, num_keys = 0;
    auto* cl1 = app.add_subcommand("class1", "Sample the 1-round key class of (p0, c0)");
    cl1->add_option("--p0", p0, "Plaintext (16 hex digits)")->required();
    cl1->add_option("--c0", c0, "Pre-swap 1-round output (16 hex digits)")->required();
    cl1->add_option("--count", count, "Number of sampled completions")->required();
    cl1->add_option("--seed", seed, "Guess-stream seed")->required();

    auto* cl2 = app.add_subcommand("class2", "Search the 2-round key class of (p0, c0)");
    cl2->add_option("--p0", p0, "Plaintext (16 hex digits)")->required();
    cl2->add_option("--c0", c0, "Pre-swap 2-round output (16 hex digits)")->required();
    cl2->add_option("--heads", heads, "Number of sampled heads")->required();
    cl2->add_option("--seed", seed, "Head-stream seed")->required();

    int toy_n = 12, toy_k = 18, toy_rounds = 6, npairs = 3;
    uint64_t sbox_seed = 0;
    auto* toy = app.add_subcommand("toy-attack", "Run the generic recovery on the toy cipher");
    toy->add_option("--n", toy_n, "Block bits (even, 4..20)")->default_val(12);
    toy->add_option("--k", toy_k, "Key bits (n < k <= 28)")->default_val(18);
    toy->add_option("--rounds", toy_rounds, "Feistel rounds (>= 4)")->default_val(6);
    toy->add_option("--sbox-seed", sbox_seed, "S-box seed")->required();
    toy->add_option("--seed", seed, "Trial seed (hidden key and pairs)")->required();
    toy->add_option("--pairs", npairs, "Known pairs (>= 3)")->default_val(3);

    int compare_bits = 64, workers = 1, round_i = 8, round_j = 7, bucket_bits = 6;
    bool bucketed = false;
    std::string tmp_dir = ".";
    std::vector<std::string> inject;
    auto* col = app.add_subcommand("collide", "Birthday scan over seeded random keys");
    col->add_option("--p0", p0, "Plaintext (16 hex digits)")->default_val("0000000000000000");
    col->add_option("--num-keys", num_keys, "Keys to scan (>= 2)")->required();
    col->add_option("--rounds", rounds, "Rounds 1..8")->default_val(8);
    col->add_option("--compare-bits", compare_bits, "Output bits compared (1..64)")->default_val(64);
    col->add_option("--seed", seed, "Key-stream seed")->required();
    col->add_option("--workers", workers, "Worker threads")->default_val(1);
    col->add_option("--inject", inject, "Inject a key (32 hex digits) into the first slots");
    col->add_flag("--bucketed", bucketed, "Use the on-disk bucketed mode");
    col->add_option("--tmp-dir", tmp_dir, "Bucket file directory")->default_val(".");
    col->add_option("--bucket-bits", bucket_bits, "log2 bucket count")->default_val(6);

    auto* cst = app.add_subcommand("cond-stats", "Conditional collision probability estimate");
    cst->add_option("--p0", p0, "Plaintext (16 hex digits)")->default_val("0000000000000000");
    cst->add_option("--num-keys", num_keys, "Keys to scan (>= 2)")->required();
    cst->add_option("--i", round_i, "Later round i")->required();
    cst->add_option("--j", round_j, "Earlier round j")->required();
    cst->add_option("--compare-bits", compare_bits, "Output bits compared (1..64)")->default_val(64);
    cst->add_option("--seed", seed, "Key-stream seed")->required();
    cst->add_option("--workers", workers, "Worker threads")->default_val(1);

    std::string vec_file = "appendix1";
    auto* vec = app.add_subcommand("vectors", "Run a golden test-vector file");
    vec->add_option("--file", vec_file, "Vector file path, or 'appendix1' for the built-in set")
        ->default_val("appendix1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    g_records = (format == "records");

    try {
        if (enc->parsed()) return cmd_encrypt(p, key, rounds, pre_swap, false);
        if (dec->parsed()) return cmd_encrypt(c, key, rounds, pre_swap, true);
        if (trc->parsed()) return cmd_trace(p, key, rounds);
        if (fir->parsed()) return cmd_fi_recover(x, y);
        if (fid->parsed()) return cmd_fi_delta(x, x2);
        if (foc->parsed()) return cmd_fo_complete(x, y, ki1, ko1, ki2, ki3);
        if (flc->parsed()) return cmd_fl_class(x, y);
        if (cl1->parsed()) return cmd_class1(p0, c0, count, seed);
        if (cl2->parsed()) return cmd_class2(p0, c0, heads, seed);
        if (toy->parsed())
            return cmd_toy_attack(toy_n, toy_k, toy_rounds, sbox_seed, seed, npairs);
        if (col->parsed())
            return cmd_collide(p0, num_keys, rounds, compare_bits, seed, workers, inject, bucketed,
                               tmp_dir, bucket_bits);
        if (cst->parsed())
            return cmd_cond_stats(p0, num_keys, round_i, round_j, compare_bits, seed, workers);
        if (vec->parsed()) return cmd_vectors(vec_file);
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
