#include "kasumi/types.hpp"

#include <cstdio>

#include "kasumi/hex.hpp"

namespace kasumi {

Block64 Block64::from_hex(std::string_view s) {
    uint64_t v = parse_hex(s, 16, "block");
    return from_value(v);
}

std::string Block64::to_hex() const { return kasumi::to_hex(value(), 16); }

MasterKey128 MasterKey128::from_hex(std::string_view s) {
    uint8_t b[16];
    for (int i = 0; i < 16; ++i) {
        // Validate the whole string width once, then peel bytes.
        if (i == 0) parse_hex(s, 32, "key");
        b[i] = uint8_t(parse_hex(s.substr(size_t(2 * i), 2), 2, "key"));
    }
    MasterKey128 key;
    for (int i = 0; i < 8; ++i) key.k[i] = HalfWord16((b[15 - 2 * i] << 8) | b[14 - 2 * i]);
    return key;
}

std::string MasterKey128::to_hex() const {
    uint8_t b[16];
    for (int i = 0; i < 8; ++i) {
        b[15 - 2 * i] = uint8_t(k[i] >> 8);
        b[14 - 2 * i] = uint8_t(k[i]);
    }
    std::string out;
    out.reserve(32);
    for (uint8_t byte : b) out += kasumi::to_hex(byte, 2);
    return out;
}

std::string RoundTrace::line(int i) const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "--->> c%d: left=%x, right=%x", i + 1, c[size_t(i)].left,
                  c[size_t(i)].right);
    return buf;
}

}  // namespace kasumi
