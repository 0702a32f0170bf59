#pragma once

#include <vector>

#include "zkins/u256.hpp"

namespace zkins {

namespace detail {

// CIOS Montgomery multiplication, word size 64, four limbs.
// Returns a*b*2^-256 mod m, result < m.
template <typename P>
constexpr U256 mont_mul(const U256& a, const U256& b) {
    uint64_t t[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
        unsigned __int128 c = 0;
        for (int j = 0; j < 4; ++j) {
            c += t[j];
            c += (unsigned __int128)a.limb[i] * b.limb[j];
            t[j] = uint64_t(c);
            c >>= 64;
        }
        uint64_t t4 = uint64_t((unsigned __int128)t[4] + c);
        uint64_t t5 = uint64_t(((unsigned __int128)t[4] + c) >> 64);

        uint64_t mval = t[0] * P::kInv64;
        c = (unsigned __int128)t[0] + (unsigned __int128)mval * P::kModulus.limb[0];
        c >>= 64;
        for (int j = 1; j < 4; ++j) {
            c += t[j];
            c += (unsigned __int128)mval * P::kModulus.limb[j];
            t[j - 1] = uint64_t(c);
            c >>= 64;
        }
        c += t4;
        t[3] = uint64_t(c);
        t[4] = t5 + uint64_t(c >> 64);
    }
    U256 r{t[0], t[1], t[2], t[3]};
    if (t[4] || r >= P::kModulus) {
        U256::sub(r, r, P::kModulus);
    }
    return r;
}

}  // namespace detail

/// Prime-field element in Montgomery form. P supplies the modulus and
/// the Montgomery constants (see field_params.hpp).
template <typename P>
class Fp {
  public:
    using Params = P;

    constexpr Fp() = default;

    static constexpr Fp zero() { return Fp{}; }
    static constexpr Fp one() { Fp r; r.mont_ = P::kR1; return r; }

    static Fp from_u64(uint64_t v) { return from_u256(U256::from_u64(v)); }

    // value reduced mod m is NOT performed: caller must pass v < m
    static Fp from_u256(const U256& v) {
        Fp r;
        r.mont_ = detail::mont_mul<P>(v, P::kR2);
        return r;
    }

    // signed convenience for small constants
    static Fp from_i64(int64_t v) {
        if (v >= 0) return from_u64(uint64_t(v));
        return from_u64(uint64_t(-v)).neg();
    }

    // canonical residue
    U256 to_u256() const {
        return detail::mont_mul<P>(mont_, U256::from_u64(1));
    }

    std::array<uint8_t, 32> to_bytes_be() const { return to_u256().to_bytes_be(); }

    // rejects non-canonical encodings (value >= modulus)
    static Fp from_bytes_be(const uint8_t* p) {
        U256 v = U256::from_bytes_be(p);
        if (v >= P::kModulus) throw std::invalid_argument("field element out of range");
        return from_u256(v);
    }

    bool is_zero() const { return mont_.is_zero(); }
    constexpr bool operator==(const Fp&) const = default;

    Fp operator+(const Fp& o) const {
        Fp r;
        bool carry = U256::add(r.mont_, mont_, o.mont_);
        if (carry || r.mont_ >= P::kModulus) U256::sub(r.mont_, r.mont_, P::kModulus);
        return r;
    }

    Fp operator-(const Fp& o) const {
        Fp r;
        if (U256::sub(r.mont_, mont_, o.mont_)) U256::add(r.mont_, r.mont_, P::kModulus);
        return r;
    }

    Fp neg() const { return zero() - *this; }
    Fp operator-() const { return neg(); }

    Fp operator*(const Fp& o) const {
        Fp r;
        r.mont_ = detail::mont_mul<P>(mont_, o.mont_);
        return r;
    }

    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

    Fp square() const { return *this * *this; }

    Fp dbl() const { return *this + *this; }

    Fp pow(const U256& e) const {
        Fp acc = one();
        unsigned n = e.bit_length();
        for (int i = int(n) - 1; i >= 0; --i) {
            acc = acc.square();
            if (e.bit(unsigned(i))) acc = acc * *this;
        }
        return acc;
    }

    /// Multiplicative inverse via binary extended GCD.
    /// Throws std::domain_error on zero.
    Fp inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        // operate on the canonical residue; fix the Montgomery factor at the end
        U256 u = to_u256();
        U256 v = P::kModulus;
        U256 b = U256::from_u64(1);
        U256 c{};
        const U256 one_val = U256::from_u64(1);
        const U256& m = P::kModulus;
        auto halve = [&m](U256& x) {
            if (x.is_even()) {
                x.shr1();
            } else {
                bool carry = U256::add(x, x, m);
                x.shr1();
                if (carry) x.limb[3] |= 0x8000000000000000ull;
            }
        };
        while (u != one_val && v != one_val) {
            while (u.is_even()) {
                u.shr1();
                halve(b);
            }
            while (v.is_even()) {
                v.shr1();
                halve(c);
            }
            if (u >= v) {
                U256::sub(u, u, v);
                if (U256::sub(b, b, c)) U256::add(b, b, m);
            } else {
                U256::sub(v, v, u);
                if (U256::sub(c, c, b)) U256::add(c, c, m);
            }
        }
        return from_u256(u == one_val ? b : c);
    }

    std::string to_hex() const { return to_u256().to_hex(); }

    // raw Montgomery limbs (serialization of SRS caches, hashing into maps)
    const U256& mont() const { return mont_; }
    static Fp from_mont_raw(const U256& m) { Fp r; r.mont_ = m; return r; }

  private:
    U256 mont_{};
};

}  // namespace zkins
