#include "zkins/insurance.hpp"

namespace zkins {

GasReport estimate_gas(const VerifyTrace& t, const GasCostModel& m) {
    GasReport r;
    auto row = [&r](const std::string& name, int64_t gas) {
        r.rows.emplace_back(name, gas);
        r.total += gas;
    };

    row("Processing Input", int64_t(t.input_bytes) * m.calldata_per_byte +
                                int64_t(t.keccak_words) * m.keccak_per_word);
    if (t.psi_field_muls) row("Computing Ψ_i", int64_t(t.psi_field_muls) * m.field_op);
    if (t.theta_g1_muls || t.theta_g1_adds)
        row("Computing Θ", int64_t(t.theta_g1_muls) * m.g1_mul +
                               int64_t(t.theta_g1_adds) * m.g1_add);
    if (t.phi_g1_muls || t.phi_g1_adds)
        row("Computing Φ",
            int64_t(t.phi_g1_muls) * m.g1_mul + int64_t(t.phi_g1_adds) * m.g1_add);

    std::string pairing_row = t.pairing_equations == 1
                                  ? "Checking Single Pairing Equation"
                                  : "Checking " + std::to_string(t.pairing_equations) +
                                        " Pairing Equations";
    row(pairing_row, int64_t(t.pairing_equations) * m.pairing_base +
                         int64_t(t.pairing_pairs) * m.pairing_per_pair +
                         int64_t(t.opening_g1_muls) * m.g1_mul +
                         int64_t(t.opening_g1_adds) * m.g1_add);
    row("Checking Other Equations", int64_t(t.other_field_ops) * m.field_op +
                                        int64_t(t.sig_checks) * m.ecrecover);
    row("Others", m.others_fixed);
    return r;
}

std::string to_string(VerifierKind k) {
    switch (k) {
        case VerifierKind::sonic: return "sonic";
        case VerifierKind::enhanced: return "enhanced";
        case VerifierKind::enhanced_plus: return "enhanced+";
    }
    return "?";
}

VerifierKind verifier_kind_from_string(const std::string& s) {
    if (s == "sonic") return VerifierKind::sonic;
    if (s == "enhanced") return VerifierKind::enhanced;
    if (s == "enhanced+" || s == "enhanced_plus") return VerifierKind::enhanced_plus;
    throw std::invalid_argument("unknown verifier kind: " + s);
}

std::string to_string(PolicyState s) {
    switch (s) {
        case PolicyState::Created: return "Created";
        case PolicyState::Funded: return "Funded";
        case PolicyState::Active: return "Active";
        case PolicyState::Settled: return "Settled";
        case PolicyState::Rejected: return "Rejected";
        case PolicyState::Expired: return "Expired";
    }
    return "?";
}

void Ledger::credit(const std::string& account, int64_t amount) {
    if (amount < 0) throw std::invalid_argument("negative credit");
    balances_[account] += amount;
    supply_ += amount;
    log_.push_back({"", account, amount, "credit", 0});
}

void Ledger::transfer(const std::string& from, const std::string& to, int64_t amount,
                      const std::string& memo, uint64_t time) {
    if (amount < 0) throw std::invalid_argument("negative transfer");
    auto it = balances_.find(from);
    if (it == balances_.end() || it->second < amount)
        throw std::runtime_error("insufficient balance for " + from);
    it->second -= amount;
    balances_[to] += amount;
    log_.push_back({from, to, amount, memo, time});
}

int64_t Ledger::balance(const std::string& account) const {
    auto it = balances_.find(account);
    return it == balances_.end() ? 0 : it->second;
}

int64_t Ledger::total_supply() const { return supply_; }

std::string InsuranceSim::deploy_global(VerifierKind kind, const SrsVerifierKey& vk) {
    Bytes buf;
    buf.push_back(uint8_t(kind));
    append(buf, g1_to_bytes(vk.g));
    append(buf, g2_to_bytes(vk.h));
    append(buf, g2_to_bytes(vk.h_alpha));
    append(buf, g2_to_bytes(vk.h_alpha_x));
    std::string handle = to_hex(keccak256(buf)).substr(0, 18);
    auto it = globals_.find(handle);
    if (it != globals_.end()) return handle;  // deployed once for all insurees

    GlobalContract gc;
    gc.handle = handle;
    gc.kind = kind;
    gc.verifier_key = vk;
    gc.verifier_srs_words = 2 + 3 * 4;  // g + three G2 points, in uint256 words
    gc.deployment_gas = model_.deploy_code_base;
    if (kind != VerifierKind::enhanced_plus)
        gc.deployment_gas += int64_t(gc.verifier_srs_words) * model_.sstore_per_word;
    globals_[handle] = std::move(gc);
    return handle;
}

const GlobalContract& InsuranceSim::global_contract(const std::string& handle) const {
    auto it = globals_.find(handle);
    if (it == globals_.end()) throw std::invalid_argument("unknown global contract");
    return it->second;
}

Policy& InsuranceSim::deploy_individual(const std::string& global_handle, PolicyDraft draft) {
    global_contract(global_handle);
    if (draft.policy_id.empty()) throw std::invalid_argument("policy id required");
    if (policies_.count(draft.policy_id))
        throw PolicyStateError("duplicate policy id " + draft.policy_id);
    Policy p;
    p.draft = std::move(draft);
    p.global_handle = global_handle;
    auto [it, _] = policies_.emplace(p.draft.policy_id, std::move(p));
    return it->second;
}

Policy& InsuranceSim::policy(const std::string& policy_id) {
    auto it = policies_.find(policy_id);
    if (it == policies_.end()) throw std::invalid_argument("unknown policy " + policy_id);
    return it->second;
}

const Policy& InsuranceSim::policy(const std::string& policy_id) const {
    auto it = policies_.find(policy_id);
    if (it == policies_.end()) throw std::invalid_argument("unknown policy " + policy_id);
    return it->second;
}

bool InsuranceSim::has_policy(const std::string& policy_id) const {
    return policies_.count(policy_id) != 0;
}

void InsuranceSim::fund(const std::string& policy_id) {
    Policy& p = policy(policy_id);
    if (p.state != PolicyState::Created)
        throw PolicyStateError("fund requires state Created, have " + to_string(p.state));
    ledger_.transfer(p.draft.insurer, p.escrow_account(), p.draft.sum_insured, "sum insured",
                     now_);
    p.state = PolicyState::Funded;
}

void InsuranceSim::pay_premium(const std::string& policy_id) {
    Policy& p = policy(policy_id);
    if (p.state != PolicyState::Funded)
        throw PolicyStateError("premium requires state Funded, have " + to_string(p.state));
    ledger_.transfer(p.draft.insuree, p.escrow_account(), p.draft.premium, "premium", now_);
    p.state = PolicyState::Active;
}

void InsuranceSim::expire(const std::string& policy_id) {
    Policy& p = policy(policy_id);
    if (now_ <= p.draft.expiry) throw PolicyStateError("policy has not reached expiry");
    if (p.state == PolicyState::Active) {
        ledger_.transfer(p.escrow_account(), p.draft.insurer,
                         p.draft.sum_insured + p.draft.premium, "expiry refund", now_);
    } else if (p.state == PolicyState::Funded) {
        ledger_.transfer(p.escrow_account(), p.draft.insurer, p.draft.sum_insured,
                         "expiry refund", now_);
    } else {
        throw PolicyStateError("expire requires an open policy");
    }
    p.state = PolicyState::Expired;
}

ClaimRecord InsuranceSim::submit_claim(const std::string& policy_id, const SonicProof& proof) {
    Policy& p = policy(policy_id);
    if (p.state == PolicyState::Settled)
        throw PolicyStateError("settled policy rejects further claims");
    if (p.state != PolicyState::Active)
        throw PolicyStateError("claims require state Active, have " + to_string(p.state));
    if (now_ > p.draft.expiry) {
        expire(policy_id);
        throw PolicyStateError("policy expired before the claim");
    }

    const GlobalContract& gc = global_contract(p.global_handle);
    SonicVerifyContext ctx;
    ctx.srs_vk = gc.verifier_key;
    ctx.s_y = p.draft.s_y;
    ctx.k = p.draft.k;
    ctx.layout = p.draft.layout;
    ctx.sources = p.draft.sources;
    ctx.location = p.draft.location;

    ClaimRecord rec;
    rec.time = now_;

    SonicVariant expected = gc.kind == VerifierKind::sonic ? SonicVariant::dat : SonicVariant::ev;
    bool ok = false;
    if (proof.variant != expected) {
        rec.reason = "verifier expects a " + to_string(expected) + " proof";
    } else {
        ok = sonic_verify(ctx, proof, &rec.trace);
        if (gc.kind == VerifierKind::enhanced_plus)
            rec.trace.input_bytes += uint64_t(gc.verifier_srs_words) * 32;  // SRS via calldata
        if (!ok) rec.reason = "proof verification failed";
    }
    rec.accepted = ok;
    rec.gas = estimate_gas(rec.trace, model_);

    if (ok) {
        ledger_.transfer(p.escrow_account(), p.draft.insuree, p.draft.sum_insured, "payout",
                         now_);
        ledger_.transfer(p.escrow_account(), p.draft.insurer, p.draft.premium,
                         "premium release", now_);
        p.state = PolicyState::Settled;
    }
    p.claims.push_back(rec);
    return rec;
}

ScenarioResult run_scenario(InsuranceSim& sim, const std::vector<ScenarioAction>& actions,
                            const std::function<SonicProof(const std::string&)>& proof_loader) {
    ScenarioResult result;
    int64_t supply = sim.ledger().total_supply();
    std::string last_global;

    for (const auto& act : actions) {
        try {
            if (act.op == "deploy") {
                last_global = sim.deploy_global(act.kind, act.main_vk);
                const GlobalContract& gc = sim.global_contract(last_global);
                Policy& p = sim.deploy_individual(last_global, act.draft);
                result.lines.push_back("deployed " + p.draft.policy_id + " on " +
                                       to_string(gc.kind) + " verifier (deployment gas " +
                                       std::to_string(gc.deployment_gas) + " + " +
                                       std::to_string(sim.gas_model().individual_deploy) + ")");
            } else if (act.op == "fund") {
                sim.fund(act.policy_id);
                result.lines.push_back(act.policy_id + " funded");
            } else if (act.op == "premium") {
                sim.pay_premium(act.policy_id);
                result.lines.push_back(act.policy_id + " active (premium paid)");
            } else if (act.op == "advance_time") {
                sim.advance_time(act.ticks);
                result.lines.push_back("time -> " + std::to_string(sim.now()));
            } else if (act.op == "expire") {
                sim.expire(act.policy_id);
                result.lines.push_back(act.policy_id + " expired");
            } else if (act.op == "claim") {
                SonicProof proof = proof_loader(act.proof_path);
                ClaimRecord rec = sim.submit_claim(act.policy_id, proof);
                (rec.accepted ? result.accepted : result.rejected)++;
                result.lines.push_back(act.policy_id + (rec.accepted ? " claim accepted, gas "
                                                                     : " claim rejected, gas ") +
                                       std::to_string(rec.gas.total));
                result.claims.push_back(std::move(rec));
            } else {
                throw std::invalid_argument("unknown scenario op " + act.op);
            }
        } catch (const std::exception& e) {
            result.errors++;
            result.lines.push_back(std::string("error: ") + e.what());
        }
    }
    result.conservation_ok = sim.ledger().total_supply() == supply;
    return result;
}

}  // namespace zkins
