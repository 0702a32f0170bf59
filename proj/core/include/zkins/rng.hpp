#pragma once

#include <memory>

#include "zkins/bytes.hpp"
#include "zkins/field_params.hpp"

namespace zkins {

/// Entropy source abstraction. Every piece of protocol randomness flows
/// through one of these so that seeded runs are fully reproducible.
class RandomSource {
  public:
    virtual ~RandomSource() = default;
    virtual Bytes32 next_block() = 0;

    /// Uniform field scalar by rejection sampling on 32-byte blocks.
    Fr next_fr();
    /// Uniform nonzero scalar outside {0, 1} (trapdoor sampling).
    Fr next_fr_not_binary();
    SecpScalar next_secp_scalar_nonzero();
    uint64_t next_u64();
};

/// keccak256(seed || counter) in counter mode; deterministic.
class CounterRng : public RandomSource {
  public:
    explicit CounterRng(uint64_t seed);
    explicit CounterRng(const Bytes& seed_bytes);
    Bytes32 next_block() override;

  private:
    Bytes seed_;
    uint64_t counter_ = 0;
};

/// OS entropy; used when no --seed is given.
class SystemRng : public RandomSource {
  public:
    Bytes32 next_block() override;
};

}  // namespace zkins
