#include "zkins/algebra.hpp"

namespace zkins {

Fr hash_to_scalar(const std::string& domain_tag, const Bytes& data) {
    Bytes buf;
    buf.reserve(8 + domain_tag.size() + data.size() + 1);
    uint64_t taglen = domain_tag.size();
    for (int i = 7; i >= 0; --i) buf.push_back(uint8_t(taglen >> (8 * i)));
    buf.insert(buf.end(), domain_tag.begin(), domain_tag.end());
    buf.insert(buf.end(), data.begin(), data.end());

    // rejection threshold: 2^256 - (2^256 mod r)
    U256 limit;
    U256 all_ones{~0ull, ~0ull, ~0ull, ~0ull};
    U256::sub(limit, all_ones, Bn254FrParams::kR1);
    U256::add(limit, limit, U256::from_u64(1));

    buf.push_back(0);
    for (unsigned counter = 0;; ++counter) {
        buf.back() = uint8_t(counter);
        Bytes32 digest = counter == 0 ? keccak256(buf.data(), buf.size() - 1)
                                      : keccak256(buf.data(), buf.size());
        U256 v = U256::from_bytes_be(digest.data());
        if (v < limit) {
            while (v >= Bn254FrParams::kModulus) U256::sub(v, v, Bn254FrParams::kModulus);
            return Fr::from_u256(v);
        }
        if (counter == 255) throw std::runtime_error("hash_to_scalar rejection overflow");
    }
}

Bytes32 fr_to_bytes(const Fr& v) { return v.to_bytes_be(); }

Fr fr_from_bytes(const uint8_t* p) { return Fr::from_bytes_be(p); }

}  // namespace zkins
