#pragma once

#include "zkins/field.hpp"

// Montgomery parameters for the prime fields used by the toolkit.
// kR1 = 2^256 mod m, kR2 = 2^512 mod m, kInv64 = -m^-1 mod 2^64.
// Regenerate with tests/data/gen_vectors.py if anything here changes.

namespace zkins {

/// alt_bn128 base field (coordinates)
struct Bn254FqParams {
    static constexpr U256 kModulus{0x3c208c16d87cfd47ull, 0x97816a916871ca8dull, 0xb85045b68181585dull, 0x30644e72e131a029ull};
    static constexpr U256 kR1{0xd35d438dc58f0d9dull, 0x0a78eb28f5c70b3dull, 0x666ea36f7879462cull, 0x0e0a77c19a07df2full};
    static constexpr U256 kR2{0xf32cfc5b538afa89ull, 0xb5e71911d44501fbull, 0x47ab1eff0a417ff6ull, 0x06d89f71cab8351full};
    static constexpr uint64_t kInv64 = 0x87d20782e4866389ull;
};

/// alt_bn128 scalar field (group order)
struct Bn254FrParams {
    static constexpr U256 kModulus{0x43e1f593f0000001ull, 0x2833e84879b97091ull, 0xb85045b68181585dull, 0x30644e72e131a029ull};
    static constexpr U256 kR1{0xac96341c4ffffffbull, 0x36fc76959f60cd29ull, 0x666ea36f7879462eull, 0x0e0a77c19a07df2full};
    static constexpr U256 kR2{0x1bb8e645ae216da7ull, 0x53fe3ab1e35c59e3ull, 0x8c49833d53bb8085ull, 0x0216d0b17f4e44a5ull};
    static constexpr uint64_t kInv64 = 0xc2e1f593efffffffull;
};

/// secp256k1 base field
struct Secp256k1FpParams {
    static constexpr U256 kModulus{0xfffffffefffffc2full, 0xffffffffffffffffull, 0xffffffffffffffffull, 0xffffffffffffffffull};
    static constexpr U256 kR1{0x00000001000003d1ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull};
    static constexpr U256 kR2{0x000007a2000e90a1ull, 0x0000000000000001ull, 0x0000000000000000ull, 0x0000000000000000ull};
    static constexpr uint64_t kInv64 = 0xd838091dd2253531ull;
};

/// secp256k1 group order
struct Secp256k1NParams {
    static constexpr U256 kModulus{0xbfd25e8cd0364141ull, 0xbaaedce6af48a03bull, 0xfffffffffffffffeull, 0xffffffffffffffffull};
    static constexpr U256 kR1{0x402da1732fc9bebfull, 0x4551231950b75fc4ull, 0x0000000000000001ull, 0x0000000000000000ull};
    static constexpr U256 kR2{0x896cf21467d7d140ull, 0x741496c20e7cf878ull, 0xe697f5e45bcd07c6ull, 0x9d671cd581c69bc5ull};
    static constexpr uint64_t kInv64 = 0x4b0dff665588b13full;
};

using Fq = Fp<Bn254FqParams>;
using Fr = Fp<Bn254FrParams>;

/// Scalars of the proof system live in the bn254 group-order field.
using Scalar = Fr;

using SecpFp = Fp<Secp256k1FpParams>;
using SecpScalar = Fp<Secp256k1NParams>;

}  // namespace zkins
