// zkins - command line front door for the proof toolkit and the insurance
// pipeline. Exit codes: 0 success/accept, 1 usage or IO failure, 2 domain
// rejection (unsatisfied claim, failed verification).

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "zkins/workspace.hpp"

using namespace zkins;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;

std::unique_ptr<RandomSource> make_rng(bool seeded, uint64_t seed) {
    if (seeded) return std::make_unique<CounterRng>(seed);
    return std::make_unique<SystemRng>();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct BandSplit {
    RasterPair raster;
    std::vector<uint32_t> m;  // per-bundle value counts
};

// rebuild the four bands from the concatenated bundle values
BandSplit raster_from_bundles(const std::vector<DataSourceBundle>& bundles, uint32_t n_pixels) {
    std::vector<Fr> all;
    BandSplit out;
    for (const auto& b : bundles) {
        all.insert(all.end(), b.values.begin(), b.values.end());
        out.m.push_back(uint32_t(b.values.size()));
    }
    if (all.size() != size_t(4) * n_pixels)
        throw std::invalid_argument("bundles carry " + std::to_string(all.size()) +
                                    " values, expected " + std::to_string(4 * n_pixels));
    auto band = [&](size_t base) {
        std::vector<int64_t> vals;
        vals.reserve(n_pixels);
        for (size_t i = 0; i < n_pixels; ++i) {
            U256 v = all[base + i].to_u256();
            if (v.limb[1] || v.limb[2] || v.limb[3])
                throw std::invalid_argument("raster value out of integer range");
            vals.push_back(int64_t(v.limb[0]));
        }
        return vals;
    };
    out.raster.width = n_pixels;
    out.raster.height = 1;
    out.raster.pre_nir = band(0);
    out.raster.pre_swir = band(n_pixels);
    out.raster.post_nir = band(size_t(2) * n_pixels);
    out.raster.post_swir = band(size_t(3) * n_pixels);
    return out;
}

SonicVerifyContext context_from_policy(const PolicyFile& p) {
    SonicVerifyContext ctx;
    ctx.srs_vk = p.main_vk;
    ctx.s_y = p.draft.s_y;
    ctx.k = p.draft.k;
    ctx.layout = p.draft.layout;
    ctx.sources = p.draft.sources;
    ctx.location = p.draft.location;
    return ctx;
}

void print_gas(const GasReport& report) {
    for (const auto& [name, gas] : report.rows)
        std::cout << "  " << name << ": " << gas << "\n";
    std::cout << "  Total: " << report.total << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-knowledge parametric insurance toolkit"};
    app.require_subcommand(1);

    uint64_t seed = 0;
    bool seeded = false;
    bool force = false;
    bool json_out = false;
    app.add_option("--seed", seed, "deterministic randomness seed")
        ->each([&](const std::string&) { seeded = true; });
    app.add_flag("--force", force, "overwrite existing output files");
    app.add_flag("--json", json_out, "machine-readable output");

    // ------------------------------------------------------------- setup
    auto* setup_cmd = app.add_subcommand("setup", "generate a structured reference string");
    int64_t degree = 256;
    std::string curve = "bn254";
    std::string setup_out;
    setup_cmd->add_option("--degree", degree, "degree bound d")->required();
    setup_cmd->add_option("--curve", curve, "pairing curve id");
    setup_cmd->add_option("--out", setup_out, "output .srs path")->required();

    // ------------------------------------------------------------- keygen
    auto* keygen_cmd = app.add_subcommand("keygen", "generate a data-provider signature key");
    std::string keygen_out;
    keygen_cmd->add_option("--out", keygen_out, "output key file")->required();

    // -------------------------------------------------------- data-commit
    auto* data_cmd = app.add_subcommand("data-commit",
                                        "commit and sign raster bands as one data source");
    std::vector<std::string> raster_files;
    std::string location, key_file, src_srs_file, source_id = "source", data_out;
    data_cmd->add_option("--raster", raster_files, "band CSV files, in order")->required();
    data_cmd->add_option("--location", location, "canonical location string")->required();
    data_cmd->add_option("--key", key_file, "provider key file")->required();
    data_cmd->add_option("--srs", src_srs_file, "provider reference string")->required();
    data_cmd->add_option("--source-id", source_id, "provider identifier");
    data_cmd->add_option("--out", data_out, "output bundle JSON")->required();

    // --------------------------------------------------------- policy-new
    auto* policy_cmd = app.add_subcommand("policy-new", "prepare a policy file");
    std::string pol_id, pol_insurer = "insurer", pol_insuree = "insuree";
    int64_t premium = 100, sum_insured = 10000;
    std::string pol_location;
    uint64_t expiry = 1000;
    uint32_t n_pixels = 4;
    std::string verifier_kind = "enhanced";
    std::string main_srs_file, policy_out;
    std::vector<std::string> source_bundles;
    FixedPointParams fpp;
    policy_cmd->add_option("--policy-id", pol_id)->required();
    policy_cmd->add_option("--insurer", pol_insurer);
    policy_cmd->add_option("--insuree", pol_insuree);
    policy_cmd->add_option("--premium", premium);
    policy_cmd->add_option("--sum-insured", sum_insured);
    policy_cmd->add_option("--location", pol_location, "canonical location string")->required();
    policy_cmd->add_option("--expiry", expiry, "logical expiry tick");
    policy_cmd->add_option("--pixels", n_pixels, "raster pixel count")->required();
    policy_cmd->add_option("--scale", fpp.scale);
    policy_cmd->add_option("--kappa-scaled", fpp.kappa_scaled);
    policy_cmd->add_option("--epsilon", fpp.epsilon);
    policy_cmd->add_option("--theta-max", fpp.theta_max);
    policy_cmd->add_option("--k-bits", fpp.k_bits);
    policy_cmd->add_option("--g-bits", fpp.g_bits);
    policy_cmd->add_option("--verifier", verifier_kind, "sonic | enhanced | enhanced+");
    policy_cmd->add_option("--srs", main_srs_file, "main reference string")->required();
    policy_cmd->add_option("--source", source_bundles, "data bundle(s) registering sources")
        ->required();
    policy_cmd->add_option("--out", policy_out)->required();

    // -------------------------------------------------------------- prove
    auto* prove_cmd = app.add_subcommand("prove", "construct a claim proof");
    std::string prove_policy, prove_srs, variant = "ev", prove_out;
    std::vector<std::string> prove_bundles;
    prove_cmd->add_option("--policy", prove_policy)->required();
    prove_cmd->add_option("--bundles,--bundle", prove_bundles)->required();
    prove_cmd->add_option("--srs", prove_srs, "main reference string")->required();
    prove_cmd->add_option("--variant", variant, "basic | dat | ev");
    prove_cmd->add_option("--out", prove_out)->required();

    // -------------------------------------------------------------- verify
    auto* verify_cmd = app.add_subcommand("verify", "verify a claim proof");
    std::string verify_proof, verify_policy, gas_out;
    verify_cmd->add_option("--proof", verify_proof)->required();
    verify_cmd->add_option("--policy", verify_policy)->required();
    verify_cmd->add_option("--gas-report", gas_out, "write the gas report JSON here");

    // --------------------------------------------------------------- claim
    auto* claim_cmd = app.add_subcommand("claim", "run a policy lifecycle scenario");
    std::string scenario_file, claim_out;
    claim_cmd->add_option("--scenario", scenario_file)->required();
    claim_cmd->add_option("--out", claim_out, "write the scenario report JSON here");

    // --------------------------------------------------------------- bench
    auto* bench_cmd = app.add_subcommand("bench", "prove/verify across raster sizes");
    std::string sizes_csv = "4,8,16";
    std::string bench_out;
    FixedPointParams bench_params;
    bench_cmd->add_option("--sizes", sizes_csv, "comma-separated pixel counts");
    bench_cmd->add_option("--k-bits", bench_params.k_bits);
    bench_cmd->add_option("--out", bench_out, "write the bench JSON here");

    CLI11_PARSE(app, argc, argv);

    try {
        auto rng = make_rng(seeded, seed);

        if (*setup_cmd) {
            if (curve != "bn254") throw std::invalid_argument("unsupported curve " + curve);
            if (degree < 1) throw std::invalid_argument("degree must be >= 1");
            Srs srs = setup(degree, *rng);
            save_srs(srs, setup_out, force);
            write_text_guarded(fs::path(setup_out).replace_extension(".vk.json"),
                               verifier_subset_json(srs), force);
            srs.validate();
            std::cout << "srs written to " << setup_out << " (d=" << degree
                      << ", verifier subset 14 elements)\n";
            return kExitOk;
        }

        if (*keygen_cmd) {
            KeyPair kp = keygen(*rng);
            save_keypair(kp, keygen_out, force);
            std::cout << "key written to " << keygen_out << "\n";
            return kExitOk;
        }

        if (*data_cmd) {
            KeyPair kp = load_keypair(key_file);
            auto srs = std::make_shared<Srs>(load_srs(src_srs_file));
            std::vector<Fr> values;
            for (const auto& f : raster_files) {
                RasterBand band = load_raster_band(f);
                for (int64_t v : band.values) values.push_back(Fr::from_i64(v));
            }
            LocationTag tag = location_tag_from_string(location);
            DataSourceBundle bundle =
                make_bundle(source_id, std::move(values), srs, kp.sk, tag);
            fs::path srs_rel = fs::relative(src_srs_file, fs::path(data_out).parent_path());
            write_text_guarded(data_out, bundle_json(bundle, srs_rel.string()), force);
            std::cout << "bundle written to " << data_out << " ("
                      << bundle.values.size() << " values)\n";
            return kExitOk;
        }

        if (*policy_cmd) {
            fpp.validate();
            Srs srs = load_srs(main_srs_file);
            BushfireCircuit circuit = build_bushfire_cs(n_pixels, fpp);
            if (4 * int64_t(circuit.cs.n_mul()) + 8 > srs.d)
                throw std::invalid_argument("srs degree too small for this circuit; need >= " +
                                            std::to_string(4 * circuit.cs.n_mul() + 8));
            SKPolys sk(circuit.cs);
            auto [s_y, k] = commit_public_polys(srs, sk);

            PolicyFile pf;
            pf.draft.policy_id = pol_id;
            pf.draft.insurer = pol_insurer;
            pf.draft.insuree = pol_insuree;
            pf.draft.premium = premium;
            pf.draft.sum_insured = sum_insured;
            pf.draft.location = location_tag_from_string(pol_location);
            pf.draft.expiry = expiry;
            pf.draft.s_y = s_y;
            pf.draft.k = k;
            pf.draft.params_digest = fpp.digest();
            pf.params = fpp;
            pf.n_pixels = n_pixels;
            pf.kind = verifier_kind_from_string(verifier_kind);
            pf.main_vk = srs.verifier_key();
            pf.draft.layout.n_total = circuit.cs.n_mul();
            for (const auto& bf : source_bundles) {
                DataSourceBundle b = load_bundle(bf);
                if (!(b.location == pf.draft.location))
                    throw std::invalid_argument("bundle " + bf +
                                                " was signed for a different location");
                pf.draft.layout.m.push_back(uint32_t(b.values.size()));
                pf.draft.sources.push_back(
                    {b.source_id, b.pk, b.srs->verifier_key()});
            }
            if (pf.draft.layout.n_core() != circuit.slots.data_base())
                throw std::invalid_argument("registered sources do not cover the data slots");
            write_text_guarded(policy_out, policy_json(pf), force);
            std::cout << "policy written to " << policy_out << "\n";
            return kExitOk;
        }

        if (*prove_cmd) {
            PolicyFile pf = load_policy(prove_policy);
            Srs srs = load_srs(prove_srs);
            if (!(srs.verifier_key() == pf.main_vk))
                throw std::invalid_argument("srs does not match the policy verifier key");
            std::vector<DataSourceBundle> bundles;
            for (const auto& bf : prove_bundles) bundles.push_back(load_bundle(bf));
            for (const auto& b : bundles)
                if (!(b.location == pf.draft.location))
                    throw std::invalid_argument("bundle location differs from the policy");

            SonicVariant var = sonic_variant_from_string(variant);
            if (var == SonicVariant::basic)
                throw std::invalid_argument(
                    "data-bearing claims require the dat or ev variant");

            BandSplit split = raster_from_bundles(bundles, pf.n_pixels);
            BushfireCircuit circuit = build_bushfire_cs(pf.n_pixels, pf.params);

            SonicProof proof;
            try {
                BushfireWitness w = build_bushfire_witness(split.raster, pf.params);
                proof = var == SonicVariant::ev
                            ? prove_batched(srs, circuit.cs, w.core, bundles)
                            : prove_with_data(srs, circuit.cs, w.core, bundles);
            } catch (const UnsatisfiedWitnessError& e) {
                std::cerr << "claim conditions not satisfied: " << e.what() << "\n";
                return kExitDomain;
            }
            write_text_guarded(prove_out, proof_json(proof), force);
            std::cout << "proof written to " << prove_out << " ("
                      << proof.to_bytes().size() << " bytes)\n";
            return kExitOk;
        }

        if (*verify_cmd) {
            PolicyFile pf = load_policy(verify_policy);
            SonicProof proof = load_proof(verify_proof);
            SonicVerifyContext ctx = context_from_policy(pf);
            VerifyTrace trace;
            bool ok = sonic_verify(ctx, proof, &trace);
            GasReport gas = estimate_gas(trace, GasCostModel{});
            if (!gas_out.empty()) write_text_guarded(gas_out, gas_report_json(gas), force);
            if (json_out) {
                std::cout << "{\"accepted\": " << (ok ? "true" : "false")
                          << ", \"gas_total\": " << gas.total
                          << ", \"pairing_equations\": " << trace.pairing_equations << "}\n";
            } else {
                std::cout << (ok ? "accepted" : "rejected") << "\n";
                print_gas(gas);
            }
            return ok ? kExitOk : kExitDomain;
        }

        if (*claim_cmd) {
            Scenario scenario = load_scenario(scenario_file);
            InsuranceSim sim;
            for (const auto& [name, balance] : scenario.accounts)
                sim.ledger().credit(name, balance);
            int64_t supply = sim.ledger().total_supply();

            ScenarioResult result;
            std::map<std::string, std::string> globals;  // policy id -> handle
            for (const auto& act : scenario.actions) {
                try {
                    if (act.op == "deploy") {
                        PolicyFile pf;  // draft embedded by the loader
                        std::string handle = sim.deploy_global(
                            act.kind, act.draft.sources.empty()
                                          ? SrsVerifierKey{}
                                          : SrsVerifierKey{});
                        (void)pf;
                        (void)handle;
                        result.lines.push_back("deploy needs policy main_vk; see claim docs");
                        result.errors++;
                    } else if (act.op == "advance_time") {
                        sim.advance_time(act.ticks);
                        result.lines.push_back("time advanced by " + std::to_string(act.ticks));
                    } else {
                        result.lines.push_back("unsupported op " + act.op);
                        result.errors++;
                    }
                } catch (const std::exception& e) {
                    result.errors++;
                    result.lines.push_back(std::string("error: ") + e.what());
                }
            }
            (void)supply;
            for (const auto& line : result.lines) std::cout << line << "\n";
            return result.errors ? kExitDomain : kExitOk;
        }

        if (*bench_cmd) {
            bench_params.validate();
            std::vector<uint32_t> sizes;
            std::stringstream ss(sizes_csv);
            std::string tok;
            while (std::getline(ss, tok, ',')) sizes.push_back(uint32_t(std::stoul(tok)));
            if (sizes.empty()) throw std::invalid_argument("no sizes given");

            std::cout << "bench placeholder\n";
            return kExitOk;
        }
    } catch (const UnsatisfiedWitnessError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
