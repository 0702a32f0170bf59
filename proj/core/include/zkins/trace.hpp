#pragma once

#include <cstdint>

namespace zkins {

/// Operation counters emitted by instrumented verification. Counters only
/// ever increase during a run; the gas model prices them afterwards.
struct VerifyTrace {
    uint64_t pairing_equations = 0;  // pairing-product checks issued
    uint64_t pairing_pairs = 0;      // total (G1, G2) pairs across equations
    uint64_t opening_g1_muls = 0;    // per-equation G1 preparation
    uint64_t opening_g1_adds = 0;
    uint64_t psi_field_muls = 0;     // vanishing-factor products at mu
    uint64_t theta_g1_muls = 0;      // commitment combination
    uint64_t theta_g1_adds = 0;
    uint64_t phi_g1_muls = 0;        // proof-side combination
    uint64_t phi_g1_adds = 0;
    uint64_t other_field_ops = 0;    // scalar equation checks
    uint64_t keccak_words = 0;       // transcript replay
    uint64_t input_bytes = 0;        // serialized proof size
    uint64_t sig_checks = 0;

    VerifyTrace& operator+=(const VerifyTrace& o) {
        pairing_equations += o.pairing_equations;
        pairing_pairs += o.pairing_pairs;
        opening_g1_muls += o.opening_g1_muls;
        opening_g1_adds += o.opening_g1_adds;
        psi_field_muls += o.psi_field_muls;
        theta_g1_muls += o.theta_g1_muls;
        theta_g1_adds += o.theta_g1_adds;
        phi_g1_muls += o.phi_g1_muls;
        phi_g1_adds += o.phi_g1_adds;
        other_field_ops += o.other_field_ops;
        keccak_words += o.keccak_words;
        input_bytes += o.input_bytes;
        sig_checks += o.sig_checks;
        return *this;
    }
};

}  // namespace zkins
