#pragma once

#include "zkins/algebra.hpp"
#include "zkins/pcs.hpp"
#include "zkins/rng.hpp"

namespace zkins {

/// 32-byte digest of a canonical location description. The tag alone
/// reveals nothing about the location (hash preimage resistance).
struct LocationTag {
    Bytes32 digest{};
    bool operator==(const LocationTag&) const = default;
};

/// Hash of the exact string the policy and the data sources agreed on.
LocationTag location_tag_from_string(const std::string& canonical);

/// Canonical single-epoch encoding:
///   "lat:<decimal>,lon:<decimal>,epoch:<pre|post>,date:<ISO-8601>"
std::string canonical_location(const std::string& lat, const std::string& lon,
                               const std::string& epoch, const std::string& date);

struct PublicKey {
    SecpAffine point;
    bool operator==(const PublicKey&) const = default;
};

struct KeyPair {
    SecpScalar sk;
    PublicKey pk;
};

/// ECDSA signature over secp256k1, low-s normalized.
struct Signature {
    U256 r{}, s{};
    bool operator==(const Signature&) const = default;
};

KeyPair keygen(RandomSource& rng);
PublicKey public_key_of(const SecpScalar& sk);

/// Deterministic ECDSA: the nonce is derived from keccak256(sk || digest),
/// so identical inputs always produce identical signatures.
Signature ecdsa_sign(const SecpScalar& sk, const Bytes32& msg_digest);
bool ecdsa_verify(const PublicKey& pk, const Bytes32& msg_digest, const Signature& sig);

/// Signature over the bundle message H || serialized commitment.
Signature sign_data_bundle(const SecpScalar& sk, const LocationTag& h, const Commitment& d);
bool verify_data_bundle(const PublicKey& pk, const LocationTag& h, const Commitment& d,
                        const Signature& sig);

// hex serialization (pk: 64 bytes uncompressed coords, sig: 64 bytes r||s)
Bytes pk_to_bytes(const PublicKey& pk);
PublicKey pk_from_bytes(const uint8_t* data, size_t len);
Bytes sig_to_bytes(const Signature& sig);
Signature sig_from_bytes(const uint8_t* data, size_t len);

}  // namespace zkins
