#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace zkins {

using Bytes = std::vector<uint8_t>;
using Bytes32 = std::array<uint8_t, 32>;

std::string to_hex(const uint8_t* p, size_t n);
std::string to_hex(const Bytes& b);
std::string to_hex(const Bytes32& b);

/// Accepts an optional 0x prefix; throws std::invalid_argument on bad input.
Bytes from_hex(const std::string& s);

inline void append(Bytes& out, const Bytes& b) { out.insert(out.end(), b.begin(), b.end()); }
inline void append(Bytes& out, const Bytes32& b) { out.insert(out.end(), b.begin(), b.end()); }
inline Bytes to_bytes(const std::string& s) { return Bytes(s.begin(), s.end()); }

}  // namespace zkins
