// End-to-end CLI tests: exit codes, golden outputs, and record-stream
// round-trips, run against the built binary.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "kasumi/collision.hpp"
#include "kasumi/core.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(KASUMI_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<json> parse_records(const std::string& out) {
    std::vector<json> records;
    size_t pos = 0;
    while (pos < out.size()) {
        size_t nl = out.find('\n', pos);
        if (nl == std::string::npos) nl = out.size();
        std::string line = out.substr(pos, nl - pos);
        if (!line.empty()) records.push_back(json::parse(line));
        pos = nl + 1;
    }
    return records;
}

}  // namespace

TEST_CASE("cli encrypt prints the golden ciphertext") {
    RunResult r = run_cli(
        "encrypt --p 0000000000000000 --key F1D941159CA8B6238135DACB8A370940 --rounds 8");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2dbcda8d84cdad86\n");
}

TEST_CASE("cli rejects a short key with a usage exit") {
    RunResult r = run_cli(
        "encrypt --p 0000000000000000 --key F1D941159CA8B6238135DACB8A3709 --rounds 8");
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli rejects unknown flags and missing subcommands") {
    CHECK(run_cli("encrypt --nope 1").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("cond-stats --num-keys 64 --i 4 --j 4 --seed 1").exit_code == 2);
}

TEST_CASE("cli built-in vectors pass") {
    RunResult r = run_cli("vectors");
    CHECK(r.exit_code == 0);
    RunResult file = run_cli(std::string("vectors --file ") + KASUMI_DATA_DIR + "/appendix1.vec");
    CHECK(file.exit_code == 0);
}

TEST_CASE("cli vectors fail with exit 1 on a corrupted file") {
    std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                       "/kasumi_bad_vec.txt";
    std::ofstream f(path);
    f << "0000000000000000 f1d941159ca8b6238135dacb8a370940 8 2dbcda8d84cdad87\n";
    f.close();
    RunResult r = run_cli("vectors --file " + path);
    CHECK(r.exit_code == 1);
    std::remove(path.c_str());
}

TEST_CASE("cli trace emits the canonical lines") {
    RunResult r = run_cli("trace --p 0000000000000000 --key F1D941159CA8B6238135DACB8A370940");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("--->> c1: left=0, right=db16eed5") != std::string::npos);
    CHECK(r.out.find("--->> c8: left=84cdad86, right=2dbcda8d") != std::string::npos);
    CHECK(r.out.find("ciphertext=2dbcda8d84cdad86") != std::string::npos);
}

TEST_CASE("cli records round-trip numerically") {
    RunResult enc = run_cli(
        "--format records encrypt --p 0011223344556677 --key 000102030405060708090a0b0c0d0e0f");
    CHECK(enc.exit_code == 0);
    auto records = parse_records(enc.out);
    REQUIRE(records.size() == 1);
    CHECK(records[0]["type"] == "encrypt");
    CHECK(records[0]["rounds"] == 8);

    using namespace kasumi;
    Block64 expect = encrypt(Block64::from_hex("0011223344556677"),
                             MasterKey128::from_hex("000102030405060708090a0b0c0d0e0f"), 8);
    CHECK(records[0]["output"] == expect.to_hex());

    RunResult dec = run_cli("--format records decrypt --c " + expect.to_hex() +
                            " --key 000102030405060708090a0b0c0d0e0f");
    auto dec_records = parse_records(dec.out);
    REQUIRE(dec_records.size() == 1);
    CHECK(dec_records[0]["output"] == "0011223344556677");
}

TEST_CASE("cli collide records match the library report") {
    RunResult r = run_cli(
        "--format records collide --num-keys 4096 --rounds 8 --compare-bits 14 --seed 20 "
        "--workers 2");
    CHECK(r.exit_code == 0);
    auto records = parse_records(r.out);
    REQUIRE(!records.empty());
    const json& summary = records.back();
    REQUIRE(summary["type"] == "summary");

    using namespace kasumi;
    ScanConfig cfg;
    cfg.num_keys = 4096;
    cfg.rounds = 8;
    cfg.compare_bits = 14;
    cfg.seed = 20;
    CollisionReport expect = birthday_scan(cfg);
    CHECK(summary["keys_scanned"] == expect.keys_scanned);
    CHECK(summary["pairs_found"] == expect.pair_count);
    CHECK(summary["groups"] == expect.groups.size());
    CHECK(summary["expected_pairs"].get<double>() == expect.expected_pairs);

    size_t group_records = 0;
    for (const json& rec : records) {
        if (rec["type"] != "group") continue;
        const auto& grp = expect.groups.at(group_records);
        CHECK(rec["keys"].size() == grp.keys.size());
        ++group_records;
    }
    CHECK(group_records == expect.groups.size());
}

TEST_CASE("cli collide injects keys and reports their group") {
    RunResult r = run_cli(
        "--format records collide --num-keys 2 --rounds 8 --compare-bits 64 --seed 0 "
        "--inject F1D941159CA8B6238135DACB8A370940 --inject CAFF6AC383136437A70C4560AC98CE9F");
    CHECK(r.exit_code == 0);
    auto records = parse_records(r.out);
    REQUIRE(records.size() == 2);
    CHECK(records[0]["type"] == "group");
    CHECK(records[0]["output"] == "2dbcda8d84cdad86");
    CHECK(records[1]["pairs_found"] == 1);
}

TEST_CASE("cli collide capacity overflow exits 3") {
    RunResult r = run_cli("collide --num-keys 67108865 --seed 1");
    CHECK(r.exit_code == 3);
}

TEST_CASE("cli fi-recover and fo-complete verify their own answers") {
    using namespace kasumi;
    HalfWord16 ki = 0x5a3c;
    HalfWord16 y = fi(0x1234, ki);
    RunResult r = run_cli("--format records fi-recover --x 1234 --y " + to_hex(y, 4));
    CHECK(r.exit_code == 0);
    auto records = parse_records(r.out);
    REQUIRE(records.size() == 1);
    CHECK(records[0]["ki"] == to_hex(ki, 4));

    RunResult f = run_cli(
        "--format records fo-complete --x 01234567 --y 89abcdef --ki1 1111 --ko1 2222 "
        "--ki2 3333 --ki3 4444");
    CHECK(f.exit_code == 0);
    auto fo_records = parse_records(f.out);
    REQUIRE(fo_records.size() == 1);
    auto [ko2, ko3] = fo_complete(0x01234567, 0x89abcdef, 0x1111, 0x2222, 0x3333, 0x4444);
    CHECK(fo_records[0]["ko2"] == to_hex(ko2, 4));
    CHECK(fo_records[0]["ko3"] == to_hex(ko3, 4));
}

TEST_CASE("cli class commands sample verified members") {
    using namespace kasumi;
    MasterKey128 key = MasterKey128::from_hex("00112233445566778899aabbccddeeff");
    Block64 p0 = Block64::from_hex("0123456789abcdef");

    Block64 c1 = encrypt(p0, key, 1, true);
    RunResult r1 = run_cli("--format records class1 --p0 " + p0.to_hex() + " --c0 " + c1.to_hex() +
                           " --count 5 --seed 9");
    CHECK(r1.exit_code == 0);
    auto recs1 = parse_records(r1.out);
    REQUIRE(recs1.size() == 6);  // 5 members + summary
    CHECK(recs1.back()["verified"] == 5);
    for (size_t i = 0; i + 1 < recs1.size(); ++i) {
        MasterKey128 member = MasterKey128::from_hex(recs1[i]["key"].get<std::string>());
        CHECK(encrypt(p0, member, 1, true) == c1);
    }

    Block64 c2 = encrypt(p0, key, 2, true);
    RunResult r2 = run_cli("--format records class2 --p0 " + p0.to_hex() + " --c0 " + c2.to_hex() +
                           " --heads 2 --seed 9");
    CHECK(r2.exit_code == 0);
    auto recs2 = parse_records(r2.out);
    REQUIRE(!recs2.empty());
    CHECK(recs2.back()["type"] == "summary");
    CHECK(recs2.back()["pivot_iterations"] == 2 * 65536);
}

TEST_CASE("cli toy attack runs a seeded trial") {
    RunResult r = run_cli(
        "--format records toy-attack --n 12 --k 18 --rounds 6 --sbox-seed 5 --seed 11");
    CHECK(r.exit_code == 0);
    auto records = parse_records(r.out);
    REQUIRE(records.size() == 1);
    CHECK(records[0]["fits_all_pairs"] == true);
    CHECK(records[0]["recovered"].is_number());
}

TEST_CASE("cli cond-stats runs and reports") {
    RunResult r = run_cli(
        "--format records cond-stats --num-keys 16384 --i 6 --j 4 --compare-bits 10 --seed 31");
    CHECK(r.exit_code == 0);
    auto records = parse_records(r.out);
    REQUIRE(records.size() == 1);
    CHECK(records[0]["type"] == "cond_stats");
    CHECK(records[0]["base_pairs"].get<uint64_t>() > 0);
}
