#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>

namespace zkins {

/// Unsigned 256-bit integer, four little-endian 64-bit limbs.
struct U256 {
    std::array<uint64_t, 4> limb{0, 0, 0, 0};

    constexpr U256() = default;
    constexpr U256(uint64_t l0, uint64_t l1, uint64_t l2, uint64_t l3)
        : limb{l0, l1, l2, l3} {}

    static constexpr U256 from_u64(uint64_t v) { return U256{v, 0, 0, 0}; }

    constexpr bool is_zero() const {
        return (limb[0] | limb[1] | limb[2] | limb[3]) == 0;
    }

    constexpr bool operator==(const U256&) const = default;

    // -1, 0, +1 comparison
    constexpr int cmp(const U256& o) const {
        for (int i = 3; i >= 0; --i) {
            if (limb[i] < o.limb[i]) return -1;
            if (limb[i] > o.limb[i]) return 1;
        }
        return 0;
    }
    constexpr bool operator<(const U256& o) const { return cmp(o) < 0; }
    constexpr bool operator>=(const U256& o) const { return cmp(o) >= 0; }

    constexpr bool bit(unsigned i) const {
        return (limb[i >> 6] >> (i & 63)) & 1;
    }

    constexpr unsigned bit_length() const {
        for (int i = 3; i >= 0; --i) {
            if (limb[i]) {
                unsigned top = 63;
                while (!((limb[i] >> top) & 1)) --top;
                return unsigned(i) * 64 + top + 1;
            }
        }
        return 0;
    }

    constexpr bool is_even() const { return (limb[0] & 1) == 0; }

    // returns carry out
    static constexpr bool add(U256& r, const U256& a, const U256& b) {
        unsigned __int128 c = 0;
        for (int i = 0; i < 4; ++i) {
            c += a.limb[i];
            c += b.limb[i];
            r.limb[i] = uint64_t(c);
            c >>= 64;
        }
        return c != 0;
    }

    // returns borrow out
    static constexpr bool sub(U256& r, const U256& a, const U256& b) {
        unsigned __int128 borrow = 0;
        for (int i = 0; i < 4; ++i) {
            unsigned __int128 d = (unsigned __int128)a.limb[i] - b.limb[i] - borrow;
            r.limb[i] = uint64_t(d);
            borrow = (d >> 64) & 1;
        }
        return borrow != 0;
    }

    constexpr void shr1() {
        limb[0] = (limb[0] >> 1) | (limb[1] << 63);
        limb[1] = (limb[1] >> 1) | (limb[2] << 63);
        limb[2] = (limb[2] >> 1) | (limb[3] << 63);
        limb[3] >>= 1;
    }

    std::array<uint8_t, 32> to_bytes_be() const {
        std::array<uint8_t, 32> out{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 8; ++j)
                out[31 - 8 * i - j] = uint8_t(limb[i] >> (8 * j));
        return out;
    }

    static U256 from_bytes_be(const uint8_t* p) {
        U256 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 8; ++j)
                r.limb[i] |= uint64_t(p[31 - 8 * i - j]) << (8 * j);
        return r;
    }

    std::string to_hex() const;          // lowercase, 0x-prefixed, 64 nibbles
    static U256 from_hex(const std::string& s);
};

}  // namespace zkins
