#pragma once

#include <filesystem>

#include "zkins/insurance.hpp"

namespace zkins {

/// File formats of the toolkit. Every JSON artifact carries a "version"
/// field; writers refuse to overwrite existing files unless forced.

void write_file_guarded(const std::filesystem::path& path, const Bytes& data, bool force);
void write_text_guarded(const std::filesystem::path& path, const std::string& text, bool force);
Bytes read_file(const std::filesystem::path& path);

// SRS container: 8-byte magic, curve id, degree, point arrays --------------

void save_srs(const Srs& srs, const std::filesystem::path& path, bool force);
Srs load_srs(const std::filesystem::path& path);

/// JSON sidecar with the verifier subset (14 uint256 words).
std::string verifier_subset_json(const Srs& srs);
SrsVerifierKey load_verifier_subset(const std::filesystem::path& path);

// signing keys --------------------------------------------------------------

void save_keypair(const KeyPair& kp, const std::filesystem::path& path, bool force);
KeyPair load_keypair(const std::filesystem::path& path);

// data-source bundles --------------------------------------------------------

/// {source_id, H, commitment, signature, pk, srs_digest, values[]} plus an
/// srs_file hint; the digest is checked against the reference string on load.
std::string bundle_json(const DataSourceBundle& bundle, const std::string& srs_file_hint);
DataSourceBundle load_bundle(const std::filesystem::path& path);

// policies -------------------------------------------------------------------

struct PolicyFile {
    PolicyDraft draft;
    FixedPointParams params;
    uint32_t n_pixels = 0;
    VerifierKind kind = VerifierKind::enhanced;
    SrsVerifierKey main_vk;
};

std::string policy_json(const PolicyFile& policy);
PolicyFile load_policy(const std::filesystem::path& path);

// proofs ----------------------------------------------------------------------

std::string proof_json(const SonicProof& proof);
SonicProof load_proof(const std::filesystem::path& path);

// reports ----------------------------------------------------------------------

std::string gas_report_json(const GasReport& report);

// scenarios ---------------------------------------------------------------------

struct Scenario {
    std::vector<std::pair<std::string, int64_t>> accounts;
    std::vector<ScenarioAction> actions;
};

Scenario load_scenario(const std::filesystem::path& path);

}  // namespace zkins
