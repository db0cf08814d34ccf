#include "kasumi/hex.hpp"

#include <stdexcept>

namespace kasumi {

namespace {

int nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

uint64_t parse_hex(std::string_view s, int digits, const char* what) {
    if (int(s.size()) != digits) {
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(digits) +
                                    " hex digits (" + std::to_string(4 * digits) + " bits), got " +
                                    std::to_string(s.size()) + " digits");
    }
    uint64_t v = 0;
    for (char c : s) {
        int n = nibble(c);
        if (n < 0) throw std::invalid_argument(std::string(what) + ": invalid hex digit '" + c + "'");
        v = (v << 4) | uint64_t(n);
    }
    return v;
}

std::string to_hex(uint64_t v, int digits) {
    static const char* kDigits = "0123456789abcdef";
    std::string out(size_t(digits), '0');
    for (int i = digits - 1; i >= 0; --i) {
        out[size_t(i)] = kDigits[v & 0xF];
        v >>= 4;
    }
    return out;
}

}  // namespace kasumi
