#include "zkins/u256.hpp"

#include "zkins/bytes.hpp"

namespace zkins {

static const char* kHexDigits = "0123456789abcdef";

std::string U256::to_hex() const {
    auto b = to_bytes_be();
    return zkins::to_hex(b.data(), b.size());
}

U256 U256::from_hex(const std::string& s) {
    Bytes b = zkins::from_hex(s);
    if (b.size() > 32) throw std::invalid_argument("hex value wider than 256 bits");
    std::array<uint8_t, 32> padded{};
    std::memcpy(padded.data() + (32 - b.size()), b.data(), b.size());
    return from_bytes_be(padded.data());
}

std::string to_hex(const uint8_t* p, size_t n) {
    std::string s = "0x";
    s.reserve(2 + 2 * n);
    for (size_t i = 0; i < n; ++i) {
        s.push_back(kHexDigits[p[i] >> 4]);
        s.push_back(kHexDigits[p[i] & 0xf]);
    }
    return s;
}

std::string to_hex(const Bytes& b) { return to_hex(b.data(), b.size()); }
std::string to_hex(const Bytes32& b) { return to_hex(b.data(), b.size()); }

static int nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

Bytes from_hex(const std::string& s) {
    size_t off = (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) ? 2 : 0;
    if ((s.size() - off) % 2 != 0) throw std::invalid_argument("odd-length hex string");
    Bytes out;
    out.reserve((s.size() - off) / 2);
    for (size_t i = off; i < s.size(); i += 2) {
        int hi = nibble(s[i]), lo = nibble(s[i + 1]);
        if (hi < 0 || lo < 0) throw std::invalid_argument("invalid hex digit");
        out.push_back(uint8_t(hi << 4 | lo));
    }
    return out;
}

}  // namespace zkins
