#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "zkins/workspace.hpp"

using namespace zkins;
namespace fs = std::filesystem;

static fs::path temp_dir() {
    static fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / "zkins-test-ws";
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

TEST_CASE("overwrite guard") {
    fs::path f = temp_dir() / "guard.txt";
    write_text_guarded(f, "one", false);
    CHECK_THROWS(write_text_guarded(f, "two", false));
    write_text_guarded(f, "two", true);
    Bytes data = read_file(f);
    CHECK(std::string(data.begin(), data.end()) == "two");
}

TEST_CASE("srs round trip and verifier sidecar") {
    CounterRng rng(600);
    Srs srs = setup(8, rng);
    fs::path f = temp_dir() / "test.srs";
    save_srs(srs, f, false);
    Srs loaded = load_srs(f);
    CHECK(loaded.d == srs.d);
    CHECK(loaded.digest() == srs.digest());
    CHECK(loaded.verifier_key() == srs.verifier_key());

    std::string sidecar = verifier_subset_json(srs);
    auto j = nlohmann::json::parse(sidecar);
    CHECK(j["element_count"] == 14);
    CHECK(j["elements"].size() == 14);

    fs::path sf = temp_dir() / "test.vk.json";
    write_text_guarded(sf, sidecar, false);
    CHECK(load_verifier_subset(sf) == srs.verifier_key());

    // corrupted file is rejected
    Bytes raw = read_file(f);
    raw[100] ^= 0xff;
    fs::path bad = temp_dir() / "bad.srs";
    write_file_guarded(bad, raw, false);
    CHECK_THROWS(load_srs(bad));
}

TEST_CASE("keypair round trip") {
    CounterRng rng(601);
    KeyPair kp = keygen(rng);
    fs::path f = temp_dir() / "key.json";
    save_keypair(kp, f, false);
    KeyPair loaded = load_keypair(f);
    CHECK(loaded.pk == kp.pk);
    CHECK(loaded.sk == kp.sk);
}

TEST_CASE("bundle round trip with srs digest binding") {
    CounterRng rng(602);
    auto srs = std::make_shared<Srs>(setup(16, rng));
    fs::path srs_file = temp_dir() / "src.srs";
    save_srs(*srs, srs_file, false);

    KeyPair kp = keygen(rng);
    LocationTag loc = location_tag_from_string("somewhere");
    DataSourceBundle b =
        make_bundle("dea", {Fr::from_u64(7), Fr::from_u64(9)}, srs, kp.sk, loc);
    fs::path f = temp_dir() / "bundle.json";
    write_text_guarded(f, bundle_json(b, "src.srs"), false);

    DataSourceBundle loaded = load_bundle(f);
    CHECK(loaded.source_id == "dea");
    CHECK(loaded.values.size() == 2);
    CHECK(loaded.commitment == b.commitment);
    CHECK(bundle_is_consistent(loaded));

    // value tampering is caught on load
    auto j = nlohmann::ordered_json::parse(bundle_json(b, "src.srs"));
    j["values"][0] = to_hex(Fr::from_u64(8).to_bytes_be());
    fs::path tampered = temp_dir() / "tampered.json";
    write_text_guarded(tampered, j.dump(1), false);
    CHECK_THROWS(load_bundle(tampered));
}

TEST_CASE("policy and proof round trips") {
    CounterRng rng(603);
    FixedPointParams params;
    BushfireCircuit circuit = build_bushfire_cs(1, params);
    Srs srs = setup(4 * int64_t(circuit.cs.n_mul()) + 8, rng);
    auto src_srs = std::make_shared<Srs>(setup(8, rng));
    KeyPair provider = keygen(rng);
    LocationTag loc = location_tag_from_string("policy-loc");

    SKPolys sk(circuit.cs);
    auto [s_y, k] = commit_public_polys(srs, sk);

    PolicyFile pf;
    pf.draft.policy_id = "p-7";
    pf.draft.insurer = "ins";
    pf.draft.insuree = "cli";
    pf.draft.premium = 10;
    pf.draft.sum_insured = 200;
    pf.draft.location = loc;
    pf.draft.expiry = 64;
    pf.draft.s_y = s_y;
    pf.draft.k = k;
    pf.draft.layout = WitnessLayout{circuit.cs.n_mul(), {4}};
    pf.draft.sources = {{"dea", provider.pk, src_srs->verifier_key()}};
    pf.params = params;
    pf.draft.params_digest = params.digest();
    pf.n_pixels = 1;
    pf.kind = VerifierKind::enhanced;
    pf.main_vk = srs.verifier_key();

    fs::path f = temp_dir() / "policy.json";
    write_text_guarded(f, policy_json(pf), false);
    PolicyFile loaded = load_policy(f);
    CHECK(loaded.draft.policy_id == "p-7");
    CHECK(loaded.draft.s_y == s_y);
    CHECK(loaded.draft.layout == pf.draft.layout);
    CHECK(loaded.main_vk == srs.verifier_key());
    CHECK(loaded.params.kappa_scaled == params.kappa_scaled);

    // proof round trip across all variants, verification preserved
    RasterPair raster;
    raster.width = raster.height = 1;
    raster.pre_nir = {2000};
    raster.pre_swir = {100};
    raster.post_nir = {100};
    raster.post_swir = {2000};
    BushfireWitness w = build_bushfire_witness(raster, params);
    auto bundle = make_bundle("dea", raster_values_all(raster), src_srs, provider.sk, loc);

    SonicVerifyContext ctx;
    ctx.srs_vk = srs.verifier_key();
    ctx.s_y = s_y;
    ctx.k = k;
    ctx.layout = pf.draft.layout;
    ctx.sources = pf.draft.sources;
    ctx.location = loc;

    for (auto variant : {SonicVariant::dat, SonicVariant::ev}) {
        SonicProof proof = variant == SonicVariant::ev
                               ? prove_batched(srs, circuit.cs, w.core, {bundle})
                               : prove_with_data(srs, circuit.cs, w.core, {bundle});
        fs::path pfile = temp_dir() / ("proof-" + to_string(variant) + ".json");
        write_text_guarded(pfile, proof_json(proof), false);
        SonicProof rt = load_proof(pfile);
        CHECK(rt.to_bytes() == proof.to_bytes());
        CHECK(sonic_verify(ctx, rt));
    }
}

TEST_CASE("gas report json shape") {
    VerifyTrace t;
    t.pairing_equations = 1;
    t.pairing_pairs = 6;
    GasReport r = estimate_gas(t, GasCostModel{});
    auto j = nlohmann::json::parse(gas_report_json(r));
    CHECK(j["total"] == r.total);
    CHECK(j["rows"].size() == r.rows.size());
}
