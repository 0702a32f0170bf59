#include "zkins/curve.hpp"

#include <algorithm>
#include <cstring>

namespace zkins {

const Fq& G1Curve::b() {
    static const Fq b = Fq::from_u64(3);
    return b;
}

const G1Affine& G1Curve::generator_affine() {
    static const G1Affine g{Fq::from_u64(1), Fq::from_u64(2), false};
    return g;
}

const Fq2& G2Curve::b() {
    static const Fq2 b = Fq2{Fq::from_u64(3), Fq::zero()} * Fq2::xi().inverse();
    return b;
}

const G2Affine& G2Curve::generator_affine() {
    static const G2Affine g = [] {
        G2Affine p;
        p.x.c0 = Fq::from_u256(U256::from_hex(
            "0x1800deef121f1e76426a00665e5c4479674322d4f75edadd46debd5cd992f6ed"));
        p.x.c1 = Fq::from_u256(U256::from_hex(
            "0x198e9393920d483a7260bfb731fb5d25f1aa493335a9e71297e485b7aef312c2"));
        p.y.c0 = Fq::from_u256(U256::from_hex(
            "0x12c85ea5db8c6deb4aab71808dcb408fe3d1e7690c43d37b4ce6cc0166fa7daa"));
        p.y.c1 = Fq::from_u256(U256::from_hex(
            "0x090689d0585ff075ec9e99ad690c3395bc4b313370b38ef355acdadcd122975b"));
        p.infinity = false;
        return p;
    }();
    return g;
}

const SecpFp& SecpCurve::b() {
    static const SecpFp b = SecpFp::from_u64(7);
    return b;
}

const SecpAffine& SecpCurve::generator_affine() {
    static const SecpAffine g = [] {
        SecpAffine p;
        p.x = SecpFp::from_u256(U256::from_hex(
            "0x79be667ef9dcbbac55a06295ce870b07029bfcdb2dce28d959f2815b16f81798"));
        p.y = SecpFp::from_u256(U256::from_hex(
            "0x483ada7726a3c4655da4fbfc0e1108a8fd17b448a68554199c47d08ffb10d4b8"));
        p.infinity = false;
        return p;
    }();
    return g;
}

G1 g1_generator() { return G1::from_affine(G1Curve::generator_affine()); }
G2 g2_generator() { return G2::from_affine(G2Curve::generator_affine()); }

G1 g1_mul(const G1Affine& p, const Fr& k) {
    return G1::from_affine(p).scalar_mul(k.to_u256());
}

G2 g2_mul(const G2Affine& p, const Fr& k) {
    return G2::from_affine(p).scalar_mul(k.to_u256());
}

namespace {

unsigned msm_window_bits(size_t n) {
    if (n < 8) return 2;
    if (n < 32) return 4;
    if (n < 256) return 6;
    if (n < 2048) return 8;
    if (n < 32768) return 10;
    return 12;
}

}  // namespace

G1 g1_msm(std::span<const G1Affine> bases, std::span<const Fr> scalars) {
    if (bases.size() != scalars.size())
        throw std::invalid_argument("msm: bases/scalars length mismatch");
    size_t n = bases.size();
    if (n == 0) return G1::identity();
    if (n == 1) return g1_mul(bases[0], scalars[0]);

    const unsigned c = msm_window_bits(n);
    const unsigned windows = (254 + c - 1) / c;
    std::vector<U256> ks(n);
    for (size_t i = 0; i < n; ++i) ks[i] = scalars[i].to_u256();

    G1 total = G1::identity();
    std::vector<G1> buckets(size_t(1) << c);
    for (int w = int(windows) - 1; w >= 0; --w) {
        for (unsigned s = 0; s < c; ++s) total = total.dbl();
        std::fill(buckets.begin(), buckets.end(), G1::identity());
        bool any = false;
        for (size_t i = 0; i < n; ++i) {
            unsigned bucket = 0;
            for (unsigned b = 0; b < c; ++b) {
                unsigned bit = unsigned(w) * c + b;
                if (bit < 256 && ks[i].bit(bit)) bucket |= 1u << b;
            }
            if (bucket) {
                buckets[bucket] = buckets[bucket].add_mixed(bases[i]);
                any = true;
            }
        }
        if (!any) continue;
        // sum_b b * bucket[b] via running suffix sums
        G1 running = G1::identity();
        G1 acc = G1::identity();
        for (size_t b = buckets.size() - 1; b >= 1; --b) {
            running = running.add(buckets[b]);
            acc = acc.add(running);
        }
        total = total.add(acc);
    }
    return total;
}

bool g1_in_subgroup(const G1Affine& p) { return p.is_on_curve(); }

bool g2_in_subgroup(const G2Affine& p) {
    if (!p.is_on_curve()) return false;
    if (p.is_identity()) return true;
    return G2::from_affine(p).scalar_mul(Bn254FrParams::kModulus).is_identity();
}

namespace {

void put_fq(Bytes& out, const Fq& v) {
    auto b = v.to_bytes_be();
    out.insert(out.end(), b.begin(), b.end());
}

Fq get_fq(const uint8_t* p) { return Fq::from_bytes_be(p); }

bool all_zero(const uint8_t* p, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (p[i]) return false;
    return true;
}

}  // namespace

Bytes g1_to_bytes(const G1Affine& p) {
    Bytes out;
    out.reserve(64);
    if (p.infinity) {
        out.assign(64, 0);
        return out;
    }
    put_fq(out, p.x);
    put_fq(out, p.y);
    return out;
}

G1Affine g1_from_bytes(const uint8_t* data, size_t len) {
    if (len != 64) throw std::invalid_argument("G1 encoding must be 64 bytes");
    if (all_zero(data, 64)) return G1Affine::identity();
    G1Affine p{get_fq(data), get_fq(data + 32), false};
    if (!g1_in_subgroup(p)) throw std::invalid_argument("G1 point not on curve");
    return p;
}

Bytes g2_to_bytes(const G2Affine& p) {
    Bytes out;
    out.reserve(128);
    if (p.infinity) {
        out.assign(128, 0);
        return out;
    }
    put_fq(out, p.x.c0);
    put_fq(out, p.x.c1);
    put_fq(out, p.y.c0);
    put_fq(out, p.y.c1);
    return out;
}

G2Affine g2_from_bytes(const uint8_t* data, size_t len) {
    if (len != 128) throw std::invalid_argument("G2 encoding must be 128 bytes");
    if (all_zero(data, 128)) return G2Affine::identity();
    G2Affine p;
    p.x = {get_fq(data), get_fq(data + 32)};
    p.y = {get_fq(data + 64), get_fq(data + 96)};
    p.infinity = false;
    if (!p.is_on_curve()) throw std::invalid_argument("G2 point not on curve");
    if (!g2_in_subgroup(p)) throw std::invalid_argument("G2 point outside prime-order subgroup");
    return p;
}

const CurveParams& bn254_params() {
    static const CurveParams params{
        "bn254",
        Bn254FrParams::kModulus,
        Bn254FqParams::kModulus,
        G1Curve::generator_affine(),
        G2Curve::generator_affine(),
    };
    return params;
}

}  // namespace zkins
