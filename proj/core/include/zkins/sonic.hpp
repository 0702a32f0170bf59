#pragma once

#include <memory>

#include "zkins/pcs.hpp"
#include "zkins/scs.hpp"
#include "zkins/sigs.hpp"

namespace zkins {

/// Fiat-Shamir transcript: an append-only absorb log. A challenge is the
/// domain-tagged hash of everything absorbed so far, so replaying the log
/// reproduces every challenge. Values 0 and 1 are rejected and re-hashed
/// with a counter (they would degenerate the evaluation-point sets).
class Transcript {
  public:
    void absorb(const std::string& label, const Bytes& bytes);
    void absorb_point(const std::string& label, const G1Affine& p);
    void absorb_commitment(const std::string& label, const Commitment& c);
    void absorb_scalar(const std::string& label, const Fr& v);

    Fr challenge(const std::string& domain_tag) const;
    /// Challenge outside the forbidden set (re-hash with counter on collision).
    Fr challenge_avoiding(const std::string& domain_tag, const std::vector<Fr>& forbidden) const;

    size_t absorbed_bytes() const { return log_.size(); }
    const std::vector<std::pair<std::string, size_t>>& entries() const { return entries_; }

  private:
    Bytes log_;
    std::vector<std::pair<std::string, size_t>> entries_;  // label, byte offset
};

enum class SonicVariant { basic, dat, ev };
std::string to_string(SonicVariant v);
SonicVariant sonic_variant_from_string(const std::string& s);

/// Prover-side signed data sequence from one provider, committed under the
/// provider's own reference string.
struct DataSourceBundle {
    std::string source_id;
    std::vector<Fr> values;
    std::shared_ptr<const Srs> srs;
    Commitment commitment;
    LocationTag location;
    Signature sigma;
    PublicKey pk;
};

/// d_j[X] = sum_t values[t-1] X^t (zero constant term by construction).
LaurentPoly data_poly(const std::vector<Fr>& values);

/// Commits, tags and signs a data sequence the way a provider would.
DataSourceBundle make_bundle(const std::string& source_id, std::vector<Fr> values,
                             std::shared_ptr<const Srs> srs, const SecpScalar& sk,
                             const LocationTag& location);

/// True iff the bundle's signature binds (location, commitment) under its key
/// and the commitment matches the carried values.
bool bundle_is_consistent(const DataSourceBundle& b);

/// Slot layout of a data-extended witness: the core circuit occupies the
/// first n_core multiplication slots, source j's sequence the next m_j.
struct WitnessLayout {
    uint32_t n_total = 0;
    std::vector<uint32_t> m;

    uint32_t n_core() const;
    int64_t offset(size_t j) const;  // n_core + sum_{j' < j} m_j'
    bool operator==(const WitnessLayout&) const = default;
};

/// What a verifier knows about one data source.
struct SourcePublicInfo {
    std::string source_id;
    PublicKey pk;
    SrsVerifierKey vk;
};

/// Public inputs of a verification: the main verifier key, the trusted
/// commitments to s[1,Y] and k_hat[Y], the layout, the registered sources
/// and the policy's location tag.
struct SonicVerifyContext {
    SrsVerifierKey srs_vk;
    Commitment s_y;
    Commitment k;
    WitnessLayout layout;                  // dat/ev
    std::vector<SourcePublicInfo> sources; // dat/ev
    LocationTag location;                  // dat/ev
};

/// Transcript-ordered proof bundle. Field subsets per variant:
/// basic carries r/t/s_x plus seven openings with individual proofs; dat
/// adds r_tilde, the data commitments, openings, proofs and signatures; ev
/// replaces the main-family opening proofs by one batch proof plus the
/// gamma interpolation lists.
struct SonicProof {
    SonicVariant variant = SonicVariant::basic;

    std::vector<std::string> source_ids;
    std::vector<Commitment> d;
    Commitment s_y, k;  // echoed in ev (hash order); must match the context
    Commitment r, t, s_x, r_tilde;

    Fr o_r1, o_r2, o_t, o_rt;
    std::vector<Fr> o_d;
    Fr o_k, o_s, o_s1, o_s2;

    OpeningProof p_r1, p_r2, p_t, p_rt, p_k, p_s, p_s1, p_s2;
    std::vector<OpeningProof> p_d;

    BatchProof batch;                  // ev
    std::vector<LaurentPoly> gammas;   // ev: d_1..d_J, r_tilde, r, t, k, s_x, s_y

    std::vector<Signature> sigmas;

    /// Canonical byte serialization (also the proof-size measure).
    Bytes to_bytes() const;
};

struct ProveStats {
    uint64_t polynomial_bytes = 0;  // coefficients held during proving
};

// the three protocol variants ------------------------------------------------

SonicProof prove_basic(const Srs& srs, const ConstraintSystem& cs, const Witness& wit,
                       ProveStats* stats = nullptr);
bool verify_basic(const SonicVerifyContext& ctx, const SonicProof& proof,
                  VerifyTrace* trace = nullptr);

SonicProof prove_with_data(const Srs& srs, const ConstraintSystem& cs, const Witness& core,
                           const std::vector<DataSourceBundle>& bundles,
                           ProveStats* stats = nullptr);
bool verify_with_data(const SonicVerifyContext& ctx, const SonicProof& proof,
                      VerifyTrace* trace = nullptr);

SonicProof prove_batched(const Srs& srs, const ConstraintSystem& cs, const Witness& core,
                         const std::vector<DataSourceBundle>& bundles,
                         ProveStats* stats = nullptr);
bool verify_batched(const SonicVerifyContext& ctx, const SonicProof& proof,
                    VerifyTrace* trace = nullptr);

/// Dispatch on proof.variant.
bool sonic_verify(const SonicVerifyContext& ctx, const SonicProof& proof,
                  VerifyTrace* trace = nullptr);

/// Rebuilds the full witness (core plus data values in their slots) and the
/// layout from bundles; validates signatures, commitments and slot counts.
std::pair<Witness, WitnessLayout> assemble_data_witness(const ConstraintSystem& cs,
                                                        const Witness& core,
                                                        const std::vector<DataSourceBundle>& bundles);

/// Trusted setup side: commitments to the public polynomials.
std::pair<Commitment, Commitment> commit_public_polys(const Srs& srs, const SKPolys& sk);

}  // namespace zkins
