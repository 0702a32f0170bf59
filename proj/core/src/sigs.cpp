#include "zkins/sigs.hpp"

#include "zkins/keccak.hpp"

namespace zkins {

LocationTag location_tag_from_string(const std::string& canonical) {
    return {keccak256(canonical)};
}

std::string canonical_location(const std::string& lat, const std::string& lon,
                               const std::string& epoch, const std::string& date) {
    return "lat:" + lat + ",lon:" + lon + ",epoch:" + epoch + ",date:" + date;
}

PublicKey public_key_of(const SecpScalar& sk) {
    if (sk.is_zero()) throw std::invalid_argument("zero secret key");
    return {SecpPoint::from_affine(SecpCurve::generator_affine())
                .scalar_mul(sk.to_u256())
                .to_affine()};
}

KeyPair keygen(RandomSource& rng) {
    SecpScalar sk = rng.next_secp_scalar_nonzero();
    return {sk, public_key_of(sk)};
}

namespace {

SecpScalar scalar_from_digest(const Bytes32& digest) {
    U256 v = U256::from_bytes_be(digest.data());
    while (v >= Secp256k1NParams::kModulus) U256::sub(v, v, Secp256k1NParams::kModulus);
    return SecpScalar::from_u256(v);
}

bool high_s(const U256& s) {
    // s > n/2
    U256 half = Secp256k1NParams::kModulus;
    half.shr1();
    return half < s;
}

}  // namespace

Signature ecdsa_sign(const SecpScalar& sk, const Bytes32& msg_digest) {
    if (sk.is_zero()) throw std::invalid_argument("zero secret key");
    SecpScalar z = scalar_from_digest(msg_digest);

    Bytes nonce_input;
    auto skb = sk.to_bytes_be();
    nonce_input.insert(nonce_input.end(), skb.begin(), skb.end());
    nonce_input.insert(nonce_input.end(), msg_digest.begin(), msg_digest.end());

    for (uint8_t counter = 0;; ++counter) {
        Bytes attempt = nonce_input;
        attempt.push_back(counter);
        SecpScalar k = scalar_from_digest(keccak256(attempt));
        if (k.is_zero()) continue;

        SecpAffine kg = SecpPoint::from_affine(SecpCurve::generator_affine())
                            .scalar_mul(k.to_u256())
                            .to_affine();
        U256 rx = kg.x.to_u256();
        while (rx >= Secp256k1NParams::kModulus)
            U256::sub(rx, rx, Secp256k1NParams::kModulus);
        if (rx.is_zero()) continue;
        SecpScalar r = SecpScalar::from_u256(rx);

        SecpScalar s = k.inverse() * (z + r * sk);
        if (s.is_zero()) continue;
        U256 s_val = s.to_u256();
        if (high_s(s_val)) {
            U256::sub(s_val, Secp256k1NParams::kModulus, s_val);
        }
        return {rx, s_val};
    }
}

bool ecdsa_verify(const PublicKey& pk, const Bytes32& msg_digest, const Signature& sig) {
    if (pk.point.is_identity() || !pk.point.is_on_curve()) return false;
    if (sig.r.is_zero() || sig.s.is_zero()) return false;
    if (sig.r >= Secp256k1NParams::kModulus || sig.s >= Secp256k1NParams::kModulus) return false;

    SecpScalar z = scalar_from_digest(msg_digest);
    SecpScalar r = SecpScalar::from_u256(sig.r);
    SecpScalar s = SecpScalar::from_u256(sig.s);
    SecpScalar w = s.inverse();
    SecpScalar u1 = z * w;
    SecpScalar u2 = r * w;

    SecpPoint pt = SecpPoint::from_affine(SecpCurve::generator_affine())
                       .scalar_mul(u1.to_u256())
                       .add(SecpPoint::from_affine(pk.point).scalar_mul(u2.to_u256()));
    if (pt.is_identity()) return false;
    U256 x = pt.to_affine().x.to_u256();
    while (x >= Secp256k1NParams::kModulus) U256::sub(x, x, Secp256k1NParams::kModulus);
    return x == sig.r;
}

namespace {

Bytes32 bundle_digest(const LocationTag& h, const Commitment& d) {
    Bytes msg;
    msg.reserve(32 + 65);
    msg.insert(msg.end(), h.digest.begin(), h.digest.end());
    append(msg, g1_to_bytes(d.point));
    msg.push_back(d.restricted ? 1 : 0);
    return keccak256(msg);
}

}  // namespace

Signature sign_data_bundle(const SecpScalar& sk, const LocationTag& h, const Commitment& d) {
    return ecdsa_sign(sk, bundle_digest(h, d));
}

bool verify_data_bundle(const PublicKey& pk, const LocationTag& h, const Commitment& d,
                        const Signature& sig) {
    return ecdsa_verify(pk, bundle_digest(h, d), sig);
}

Bytes pk_to_bytes(const PublicKey& pk) {
    Bytes out;
    auto xb = pk.point.x.to_u256().to_bytes_be();
    auto yb = pk.point.y.to_u256().to_bytes_be();
    out.insert(out.end(), xb.begin(), xb.end());
    out.insert(out.end(), yb.begin(), yb.end());
    return out;
}

PublicKey pk_from_bytes(const uint8_t* data, size_t len) {
    if (len != 64) throw std::invalid_argument("public key encoding must be 64 bytes");
    SecpAffine p{SecpFp::from_bytes_be(data), SecpFp::from_bytes_be(data + 32), false};
    if (!p.is_on_curve()) throw std::invalid_argument("public key not on curve");
    return {p};
}

Bytes sig_to_bytes(const Signature& sig) {
    Bytes out;
    auto rb = sig.r.to_bytes_be();
    auto sb = sig.s.to_bytes_be();
    out.insert(out.end(), rb.begin(), rb.end());
    out.insert(out.end(), sb.begin(), sb.end());
    return out;
}

Signature sig_from_bytes(const uint8_t* data, size_t len) {
    if (len != 64) throw std::invalid_argument("signature encoding must be 64 bytes");
    return {U256::from_bytes_be(data), U256::from_bytes_be(data + 32)};
}

}  // namespace zkins
