#include "zkins/rng.hpp"

#include <random>

#include "zkins/keccak.hpp"

namespace zkins {

namespace {

// largest multiple of m below 2^256, as a rejection threshold
template <typename P>
bool below_rejection_limit(const U256& v) {
    // accept iff v < floor(2^256 / m) * m, i.e. v - (v mod m) + m <= 2^256.
    // Equivalent test without wide division: reject iff v >= 2^256 - (2^256 mod m).
    // 2^256 mod m is the Montgomery R1 constant.
    U256 limit;  // 2^256 - R1, computed as (~0 - R1) + 1 with wrap
    U256 all_ones{~0ull, ~0ull, ~0ull, ~0ull};
    U256::sub(limit, all_ones, P::kR1);
    bool carry = U256::add(limit, limit, U256::from_u64(1));
    if (carry) return true;  // R1 == 0 cannot happen for odd m
    return v < limit;
}

template <typename P>
Fp<P> sample_field(RandomSource& rng) {
    for (;;) {
        Bytes32 block = rng.next_block();
        U256 v = U256::from_bytes_be(block.data());
        if (!below_rejection_limit<P>(v)) continue;
        // reduce: v mod m via Montgomery round trip
        while (v >= P::kModulus) U256::sub(v, v, P::kModulus);
        return Fp<P>::from_u256(v);
    }
}

}  // namespace

Fr RandomSource::next_fr() { return sample_field<Bn254FrParams>(*this); }

Fr RandomSource::next_fr_not_binary() {
    for (;;) {
        Fr v = next_fr();
        if (!v.is_zero() && !(v == Fr::one())) return v;
    }
}

SecpScalar RandomSource::next_secp_scalar_nonzero() {
    for (;;) {
        SecpScalar v = sample_field<Secp256k1NParams>(*this);
        if (!v.is_zero()) return v;
    }
}

uint64_t RandomSource::next_u64() {
    Bytes32 b = next_block();
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = v << 8 | b[i];
    return v;
}

CounterRng::CounterRng(uint64_t seed) {
    seed_.resize(8);
    for (int i = 0; i < 8; ++i) seed_[i] = uint8_t(seed >> (8 * (7 - i)));
}

CounterRng::CounterRng(const Bytes& seed_bytes) : seed_(seed_bytes) {}

Bytes32 CounterRng::next_block() {
    Bytes buf = seed_;
    for (int i = 0; i < 8; ++i) buf.push_back(uint8_t(counter_ >> (8 * (7 - i))));
    ++counter_;
    return keccak256(buf);
}

Bytes32 SystemRng::next_block() {
    static thread_local std::random_device rd;
    Bytes32 out;
    for (size_t i = 0; i < 32; i += 4) {
        uint32_t v = rd();
        out[i] = uint8_t(v >> 24);
        out[i + 1] = uint8_t(v >> 16);
        out[i + 2] = uint8_t(v >> 8);
        out[i + 3] = uint8_t(v);
    }
    return out;
}

}  // namespace zkins
