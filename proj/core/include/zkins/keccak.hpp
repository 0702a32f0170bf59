#pragma once

#include "zkins/bytes.hpp"

namespace zkins {

/// Keccak-256 with the original (pre-NIST) padding, as used by Ethereum.
Bytes32 keccak256(const uint8_t* data, size_t len);
Bytes32 keccak256(const Bytes& data);
Bytes32 keccak256(const std::string& data);

}  // namespace zkins
