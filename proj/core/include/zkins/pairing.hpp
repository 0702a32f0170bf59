#pragma once

#include <utility>

#include "zkins/curve.hpp"

namespace zkins {

/// Optimal ate pairing on alt_bn128. Identity inputs contribute the unit
/// element, matching the precompile convention.
Gt pairing(const G1Affine& p, const G2Affine& q);

Fq12 miller_loop(const G1Affine& p, const G2Affine& q);
Gt final_exponentiation(const Fq12& f);

/// Product of pairings sharing one final exponentiation.
Gt multi_pairing(std::span<const std::pair<G1Affine, G2Affine>> pairs);

/// True iff the pairing product over all pairs equals one. This is the
/// EIP-197 style check every verification equation reduces to.
bool pairing_product_is_one(std::span<const std::pair<G1Affine, G2Affine>> pairs);

Bytes gt_to_bytes(const Gt& t);

}  // namespace zkins
