#pragma once

#include <optional>
#include <utility>

#include "zkins/algebra.hpp"
#include "zkins/errors.hpp"
#include "zkins/poly.hpp"
#include "zkins/rng.hpp"
#include "zkins/trace.hpp"

namespace zkins {

/// The G2-side elements (plus the G1 generator) a verifier needs. Serialized
/// as 14 uint256 words: g (2), h / h_alpha / h_alpha_x (4 each).
struct SrsVerifierKey {
    G1Affine g;
    G2Affine h, h_alpha, h_alpha_x;
    bool operator==(const SrsVerifierKey&) const = default;
};

/// Structured reference string with alpha-shifted powers for the restricted
/// schemes. Powers cover exponents [-d, d]; the alpha array has no entry at
/// exponent zero.
struct Srs {
    int64_t d = 0;
    std::string curve_id = "bn254";
    std::vector<G1Affine> g_powers;        // index i + d, i in [-d, d]
    std::vector<G1Affine> g_alpha_powers;  // index i + d, slot d unused
    G2Affine h, h_alpha, h_alpha_x;
    G2Affine h_x;  // plain-KZG verification key

    const G1Affine& g_power(int64_t i) const;
    const G1Affine& g_alpha_power(int64_t i) const;  // i != 0

    SrsVerifierKey verifier_key() const { return {g_power(0), h, h_alpha, h_alpha_x}; }

    /// Structural and sampled pairing consistency checks; throws on failure.
    void validate(bool full = false) const;

    Bytes32 digest() const;
};

/// Samples the trapdoor (alpha, x) from Fr \ {0, 1}, builds all powers and
/// discards the trapdoor.
Srs setup(int64_t d, RandomSource& rng);

struct Commitment {
    G1Affine point;
    bool restricted = true;  // scheme tag: rkzg vs plain kzg
    bool operator==(const Commitment&) const = default;
};

struct OpeningProof {
    G1Affine witness;
    bool operator==(const OpeningProof&) const = default;
};

struct BatchProof {
    G1Affine pi1;  // g^{p(x)}
    G1Affine pi2;  // g^{w_mu(x)}
    bool operator==(const BatchProof&) const = default;
};

/// One polynomial's entry in a batched opening: its commitment, the points
/// it is opened at, and the opener-supplied interpolation of the claimed
/// values (degree < |points|).
struct BatchOpeningClaim {
    Commitment commitment;
    std::vector<Fr> points;
    LaurentPoly gamma;
};

using PairingTerms = std::vector<std::pair<G1Affine, G2Affine>>;

// plain KZG -----------------------------------------------------------------

Commitment kzg_commit(const Srs& srs, const LaurentPoly& f);
std::pair<Fr, OpeningProof> kzg_open(const Srs& srs, const LaurentPoly& f, const Fr& z);
bool kzg_verify(const Srs& srs, const Commitment& F, const Fr& z, const Fr& v,
                const OpeningProof& pi, VerifyTrace* trace = nullptr);

// restricted KZG ------------------------------------------------------------

Commitment rkzg_commit(const Srs& srs, const LaurentPoly& f);
std::pair<Fr, OpeningProof> rkzg_open(const Srs& srs, const LaurentPoly& f, const Fr& z);
bool rkzg_verify(const SrsVerifierKey& vk, const Commitment& F, const Fr& z, const Fr& v,
                 const OpeningProof& pi, VerifyTrace* trace = nullptr);
bool rkzg_verify(const Srs& srs, const Commitment& F, const Fr& z, const Fr& v,
                 const OpeningProof& pi, VerifyTrace* trace = nullptr);

/// The pairing-product terms of one rKZG verification equation (product
/// must equal one). Used to fold several equations into a single check.
PairingTerms rkzg_equation(const SrsVerifierKey& vk, const Commitment& F, const Fr& z,
                           const Fr& v, const OpeningProof& pi, VerifyTrace* trace = nullptr);

// restricted KZG with batch verification ------------------------------------

/// Canonically ordered union of the evaluation point sets.
std::vector<Fr> batch_point_union(const std::vector<std::vector<Fr>>& point_sets);

/// Interpolations gamma_i of the claimed evaluations, one per polynomial.
std::vector<LaurentPoly> rkzgb_make_gammas(const std::vector<LaurentPoly>& polys,
                                           const std::vector<std::vector<Fr>>& point_sets);

BatchProof rkzgb_batch_open(const Srs& srs, const std::vector<LaurentPoly>& polys,
                            const std::vector<std::vector<Fr>>& point_sets, const Fr& beta,
                            const Fr& mu);

/// Two-phase opening for transcript ordering: pi1 is a function of beta
/// alone, mu is derived after pi1, then pi2 completes the proof.
struct RkzgbSession {
    std::vector<LaurentPoly> polys;
    std::vector<std::vector<Fr>> point_sets;
    std::vector<LaurentPoly> gammas;
    std::vector<Fr> s_union;
    LaurentPoly p;
    Fr beta;
    G1Affine pi1;
};

RkzgbSession rkzgb_open_begin(const Srs& srs, std::vector<LaurentPoly> polys,
                              std::vector<std::vector<Fr>> point_sets, const Fr& beta);
G1Affine rkzgb_open_finish(const Srs& srs, const RkzgbSession& session, const Fr& mu);

bool rkzgb_batch_verify(const SrsVerifierKey& vk, const std::vector<BatchOpeningClaim>& claims,
                        const Fr& beta, const Fr& mu, const BatchProof& proof,
                        VerifyTrace* trace = nullptr);
bool rkzgb_batch_verify(const Srs& srs, const std::vector<BatchOpeningClaim>& claims,
                        const Fr& beta, const Fr& mu, const BatchProof& proof,
                        VerifyTrace* trace = nullptr);

/// Terms of the single batched pairing equation, or nullopt when the claims
/// are structurally malformed (gamma degree, mu collision).
std::optional<PairingTerms> rkzgb_batch_equation(const SrsVerifierKey& vk,
                                                 const std::vector<BatchOpeningClaim>& claims,
                                                 const Fr& beta, const Fr& mu,
                                                 const BatchProof& proof,
                                                 VerifyTrace* trace = nullptr);

}  // namespace zkins
