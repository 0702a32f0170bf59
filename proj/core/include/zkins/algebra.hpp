#pragma once

#include "zkins/bytes.hpp"
#include "zkins/curve.hpp"
#include "zkins/keccak.hpp"
#include "zkins/pairing.hpp"

namespace zkins {

/// Domain-separated hash onto the scalar field: keccak-256 over the
/// length-prefixed tag followed by the data, rejection-sampled to remove
/// modular bias (re-hash with an appended counter byte while the digest
/// falls into the biased tail above the largest multiple of r).
Fr hash_to_scalar(const std::string& domain_tag, const Bytes& data);

Bytes32 fr_to_bytes(const Fr& v);
Fr fr_from_bytes(const uint8_t* p);  // throws if >= r

}  // namespace zkins
