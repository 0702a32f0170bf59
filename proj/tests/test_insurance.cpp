#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zkins/insurance.hpp"

using namespace zkins;

namespace {

struct Fixture {
    std::shared_ptr<Srs> srs;
    std::shared_ptr<Srs> src_srs;
    FixedPointParams params;
    RasterPair burnt, unburnt;
    KeyPair provider;
    LocationTag loc;
    BushfireCircuit circuit;

    Fixture() {
        CounterRng rng(500);
        params.epsilon = 1;
        circuit = build_bushfire_cs(4, params);
        int64_t d = 4 * int64_t(circuit.cs.n_mul()) + 8;
        srs = std::make_shared<Srs>(setup(d, rng));
        src_srs = std::make_shared<Srs>(setup(64, rng));
        provider = keygen(rng);
        loc = location_tag_from_string("lat:-35.3,lon:149.1,epoch:pre,date:2019-07-01");

        burnt.width = 2;
        burnt.height = 2;
        burnt.pre_nir.assign(4, 2000);
        burnt.pre_swir.assign(4, 150);
        burnt.post_nir.assign(4, 150);
        burnt.post_swir.assign(4, 2000);

        unburnt = burnt;
        unburnt.post_nir = unburnt.pre_nir;
        unburnt.post_swir = unburnt.pre_swir;
    }

    PolicyDraft draft(const std::string& id) const {
        SKPolys sk(circuit.cs);
        auto [s_y, k] = commit_public_polys(*srs, sk);
        PolicyDraft d;
        d.policy_id = id;
        d.insurer = "insurer";
        d.insuree = "insuree";
        d.premium = 50;
        d.sum_insured = 1000;
        d.location = loc;
        d.params_digest = params.digest();
        d.expiry = 100;
        d.s_y = s_y;
        d.k = k;
        d.layout = WitnessLayout{circuit.cs.n_mul(), {16}};
        d.sources = {{"dea", provider.pk, src_srs->verifier_key()}};
        return d;
    }

    SonicProof make_proof(const RasterPair& raster, SonicVariant variant) const {
        BushfireWitness w = build_bushfire_witness(raster, params);
        auto bundle =
            make_bundle("dea", raster_values_all(raster), src_srs, provider.sk, loc);
        if (variant == SonicVariant::ev)
            return prove_batched(*srs, circuit.cs, w.core, {bundle});
        return prove_with_data(*srs, circuit.cs, w.core, {bundle});
    }
};

}  // namespace

TEST_CASE("ledger conservation and balance guards") {
    Ledger l;
    l.credit("a", 100);
    l.credit("b", 50);
    CHECK(l.total_supply() == 150);
    l.transfer("a", "b", 30, "x", 0);
    CHECK(l.balance("a") == 70);
    CHECK(l.balance("b") == 80);
    CHECK(l.total_supply() == 150);
    CHECK_THROWS(l.transfer("a", "b", 1000, "too much", 0));
    CHECK_THROWS_AS(l.transfer("a", "b", -5, "negative", 0), std::invalid_argument);
}

TEST_CASE("gas model rows and monotonicity") {
    GasCostModel m;
    VerifyTrace t;
    t.pairing_equations = 9;
    t.pairing_pairs = 27;
    t.input_bytes = 1000;
    GasReport r = estimate_gas(t, m);
    bool found = false;
    for (auto& [name, gas] : r.rows) found = found || name == "Checking 9 Pairing Equations";
    CHECK(found);

    // adding any operation never decreases the total
    VerifyTrace t2 = t;
    t2.opening_g1_muls += 1;
    CHECK(estimate_gas(t2, m).total > r.total);
    t2.other_field_ops += 5;
    t2.sig_checks += 1;
    t2.keccak_words += 3;
    CHECK(estimate_gas(t2, m).total > r.total);

    VerifyTrace single;
    single.pairing_equations = 1;
    single.pairing_pairs = 6;
    GasReport rs = estimate_gas(single, m);
    found = false;
    for (auto& [name, gas] : rs.rows) found = found || name == "Checking Single Pairing Equation";
    CHECK(found);
}

TEST_CASE("global contract deployment is idempotent and prices srs storage") {
    Fixture f;
    InsuranceSim sim;
    std::string h1 = sim.deploy_global(VerifierKind::enhanced, f.srs->verifier_key());
    std::string h2 = sim.deploy_global(VerifierKind::enhanced, f.srs->verifier_key());
    CHECK(h1 == h2);
    CHECK(sim.global_contract(h1).verifier_srs_words == 14);

    std::string hp = sim.deploy_global(VerifierKind::enhanced_plus, f.srs->verifier_key());
    CHECK(sim.global_contract(hp).deployment_gas <
          sim.global_contract(h1).deployment_gas);
}

TEST_CASE("policy lifecycle with a valid claim") {
    Fixture f;
    InsuranceSim sim;
    sim.ledger().credit("insurer", 5000);
    sim.ledger().credit("insuree", 500);
    int64_t supply = sim.ledger().total_supply();

    std::string g = sim.deploy_global(VerifierKind::enhanced, f.srs->verifier_key());
    Policy& p = sim.deploy_individual(g, f.draft("p1"));
    CHECK(p.state == PolicyState::Created);
    CHECK_THROWS_AS(sim.deploy_individual(g, f.draft("p1")), PolicyStateError);

    sim.fund("p1");
    CHECK(p.state == PolicyState::Funded);
    sim.pay_premium("p1");
    CHECK(p.state == PolicyState::Active);
    CHECK(sim.ledger().balance(p.escrow_account()) == 1050);

    SonicProof proof = f.make_proof(f.burnt, SonicVariant::ev);
    ClaimRecord rec = sim.submit_claim("p1", proof);
    CHECK(rec.accepted);
    CHECK(rec.trace.pairing_equations == 1);
    CHECK(p.state == PolicyState::Settled);
    CHECK(sim.ledger().balance("insuree") == 500 - 50 + 1000);
    CHECK(sim.ledger().balance("insurer") == 5000 - 1000 + 50);
    CHECK(sim.ledger().total_supply() == supply);

    // replay is refused
    CHECK_THROWS_AS(sim.submit_claim("p1", proof), PolicyStateError);
}

TEST_CASE("wrong-location proof is rejected and premium retained") {
    Fixture f;
    InsuranceSim sim;
    sim.ledger().credit("insurer", 5000);
    sim.ledger().credit("insuree", 500);
    std::string g = sim.deploy_global(VerifierKind::enhanced, f.srs->verifier_key());

    PolicyDraft other = f.draft("p2");
    other.location = location_tag_from_string("lat:0,lon:0,epoch:pre,date:2019-07-01");
    sim.deploy_individual(g, other);
    sim.fund("p2");
    sim.pay_premium("p2");

    SonicProof proof = f.make_proof(f.burnt, SonicVariant::ev);  // for f.loc
    ClaimRecord rec = sim.submit_claim("p2", proof);
    CHECK(!rec.accepted);
    CHECK(sim.policy("p2").state == PolicyState::Active);
    CHECK(rec.gas.total > 0);
}

TEST_CASE("sonic verifier kind expects the per-opening variant") {
    Fixture f;
    InsuranceSim sim;
    sim.ledger().credit("insurer", 5000);
    sim.ledger().credit("insuree", 500);
    std::string g = sim.deploy_global(VerifierKind::sonic, f.srs->verifier_key());
    sim.deploy_individual(g, f.draft("p3"));
    sim.fund("p3");
    sim.pay_premium("p3");

    SonicProof dat = f.make_proof(f.burnt, SonicVariant::dat);
    ClaimRecord rec = sim.submit_claim("p3", dat);
    CHECK(rec.accepted);
    CHECK(rec.trace.pairing_equations == 9);
}

TEST_CASE("gas ratio between batched and per-opening verifiers") {
    Fixture f;
    InsuranceSim sim;
    sim.ledger().credit("insurer", 10000);
    sim.ledger().credit("insuree", 1000);
    std::string gs = sim.deploy_global(VerifierKind::sonic, f.srs->verifier_key());
    std::string ge = sim.deploy_global(VerifierKind::enhanced, f.srs->verifier_key());
    sim.deploy_individual(gs, f.draft("a"));
    sim.deploy_individual(ge, f.draft("b"));
    for (auto id : {"a", "b"}) {
        sim.fund(id);
        sim.pay_premium(id);
    }
    ClaimRecord sonic_rec = sim.submit_claim("a", f.make_proof(f.burnt, SonicVariant::dat));
    ClaimRecord batched_rec = sim.submit_claim("b", f.make_proof(f.burnt, SonicVariant::ev));
    REQUIRE(sonic_rec.accepted);
    REQUIRE(batched_rec.accepted);
    double ratio = double(batched_rec.gas.total) / double(sonic_rec.gas.total);
    CHECK(ratio <= 0.35);
}

TEST_CASE("expiry returns escrow to the insurer") {
    Fixture f;
    InsuranceSim sim;
    sim.ledger().credit("insurer", 5000);
    sim.ledger().credit("insuree", 500);
    std::string g = sim.deploy_global(VerifierKind::enhanced, f.srs->verifier_key());
    sim.deploy_individual(g, f.draft("p4"));
    sim.fund("p4");
    sim.pay_premium("p4");

    CHECK_THROWS_AS(sim.expire("p4"), PolicyStateError);  // not yet due
    sim.advance_time(101);
    SonicProof proof = f.make_proof(f.burnt, SonicVariant::ev);
    CHECK_THROWS_AS(sim.submit_claim("p4", proof), PolicyStateError);
    CHECK(sim.policy("p4").state == PolicyState::Expired);
    CHECK(sim.ledger().balance("insurer") == 5050);  // premium kept on expiry
}

TEST_CASE("invalid raster cannot even produce a proof") {
    Fixture f;
    CHECK_THROWS_AS(f.make_proof(f.unburnt, SonicVariant::ev), UnsatisfiedWitnessError);
}
