#pragma once

#include <functional>
#include <map>

#include "zkins/bushfire.hpp"
#include "zkins/trace.hpp"

namespace zkins {

/// Operation prices shaped like the Ethereum precompile costs. Absolute
/// figures are configuration; the verifier comparison relies on ratios.
struct GasCostModel {
    int64_t pairing_base = 45000;
    int64_t pairing_per_pair = 34000;
    int64_t g1_mul = 6000;
    int64_t g1_add = 150;
    int64_t field_op = 8;
    int64_t keccak_per_word = 6;
    int64_t calldata_per_byte = 16;
    int64_t ecrecover = 3000;
    int64_t others_fixed = 22000;
    int64_t sstore_per_word = 20000;
    int64_t deploy_code_base = 2000000;
    int64_t individual_deploy = 156000;
};

struct GasReport {
    std::vector<std::pair<std::string, int64_t>> rows;
    int64_t total = 0;
};

GasReport estimate_gas(const VerifyTrace& trace, const GasCostModel& model);

enum class VerifierKind { sonic, enhanced, enhanced_plus };
std::string to_string(VerifierKind k);
VerifierKind verifier_kind_from_string(const std::string& s);

// ------------------------------------------------------------------- ledger

struct Transfer {
    std::string from, to;
    int64_t amount = 0;
    std::string memo;
    uint64_t time = 0;
};

/// Account balances with an append-only transfer log. Balances never go
/// negative; transfers conserve the total supply.
class Ledger {
  public:
    void credit(const std::string& account, int64_t amount);  // supply injection
    void transfer(const std::string& from, const std::string& to, int64_t amount,
                  const std::string& memo, uint64_t time);
    int64_t balance(const std::string& account) const;
    int64_t total_supply() const;
    const std::vector<Transfer>& log() const { return log_; }

  private:
    std::map<std::string, int64_t> balances_;
    std::vector<Transfer> log_;
    int64_t supply_ = 0;
};

// ------------------------------------------------------------------- policy

enum class PolicyState { Created, Funded, Active, Settled, Rejected, Expired };
std::string to_string(PolicyState s);

struct ClaimRecord {
    uint64_t time = 0;
    bool accepted = false;
    std::string reason;
    VerifyTrace trace;
    GasReport gas;
};

struct PolicyDraft {
    std::string policy_id;
    std::string insurer, insuree;
    int64_t premium = 0, sum_insured = 0;
    LocationTag location;
    Bytes32 params_digest{};
    uint64_t expiry = 0;  // logical tick
    // verification context pieces prepared by the insurer at deployment
    Commitment s_y, k;
    WitnessLayout layout;
    std::vector<SourcePublicInfo> sources;
};

struct Policy {
    PolicyDraft draft;
    PolicyState state = PolicyState::Created;
    std::string global_handle;
    std::vector<ClaimRecord> claims;

    std::string escrow_account() const { return "escrow:" + draft.policy_id; }
};

/// Deployed-once verifier contract shared by every policy.
struct GlobalContract {
    std::string handle;  // digest of (kind, verifier key)
    VerifierKind kind = VerifierKind::enhanced;
    SrsVerifierKey verifier_key;
    int64_t deployment_gas = 0;
    uint32_t verifier_srs_words = 0;  // elements measured in uint256 words
};

/// In-memory two-contract simulation with logical time. Mutations are
/// totally ordered through this object.
class InsuranceSim {
  public:
    explicit InsuranceSim(GasCostModel model = {}) : model_(std::move(model)) {}

    Ledger& ledger() { return ledger_; }
    const Ledger& ledger() const { return ledger_; }
    uint64_t now() const { return now_; }
    void advance_time(uint64_t ticks) { now_ += ticks; }
    const GasCostModel& gas_model() const { return model_; }

    /// Idempotent by (kind, key) digest: redeploying returns the handle.
    std::string deploy_global(VerifierKind kind, const SrsVerifierKey& vk);
    const GlobalContract& global_contract(const std::string& handle) const;

    Policy& deploy_individual(const std::string& global_handle, PolicyDraft draft);
    Policy& policy(const std::string& policy_id);
    const Policy& policy(const std::string& policy_id) const;
    bool has_policy(const std::string& policy_id) const;

    void fund(const std::string& policy_id);         // insurer escrows the sum insured
    void pay_premium(const std::string& policy_id);  // insuree escrows the premium
    void expire(const std::string& policy_id);       // past-expiry refund to the insurer

    /// Runs the configured verifier; settles on accept, keeps the policy
    /// active on reject. Always returns a gas report.
    ClaimRecord submit_claim(const std::string& policy_id, const SonicProof& proof);

  private:
    GasCostModel model_;
    Ledger ledger_;
    uint64_t now_ = 0;
    std::map<std::string, GlobalContract> globals_;
    std::map<std::string, Policy> policies_;
};

// ----------------------------------------------------------------- scenario

struct ScenarioAction {
    std::string op;  // deploy | fund | premium | advance_time | claim | expire
    std::string policy_id;
    uint64_t ticks = 0;
    std::string proof_path;               // claim
    PolicyDraft draft;                    // deploy
    VerifierKind kind = VerifierKind::enhanced;
    SrsVerifierKey main_vk;               // deploy
};

struct ScenarioResult {
    std::vector<std::string> lines;
    std::vector<ClaimRecord> claims;
    int accepted = 0, rejected = 0, errors = 0;
    bool conservation_ok = true;
};

/// Applies the actions in order; action failures become report lines, not
/// aborts. The proof loader is injected so file resolution stays outside.
ScenarioResult run_scenario(InsuranceSim& sim, const std::vector<ScenarioAction>& actions,
                            const std::function<SonicProof(const std::string&)>& proof_loader);

}  // namespace zkins
