#include "zkins/workspace.hpp"

#include <fstream>

#include <json.hpp>

namespace zkins {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

void write_file_guarded(const fs::path& path, const Bytes& data, bool force) {
    if (fs::exists(path) && !force)
        throw std::runtime_error(path.string() + " exists; pass --force to overwrite");
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out.good()) throw std::runtime_error("cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(data.data()), std::streamsize(data.size()));
}

void write_text_guarded(const fs::path& path, const std::string& text, bool force) {
    write_file_guarded(path, Bytes(text.begin(), text.end()), force);
}

Bytes read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) throw std::runtime_error("cannot read " + path.string());
    return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// --------------------------------------------------------------------- srs

namespace {

constexpr char kSrsMagic[8] = {'Z', 'K', 'S', 'R', 'S', '\x01', '\0', '\0'};

void put_u64(Bytes& out, uint64_t v) {
    for (int i = 7; i >= 0; --i) out.push_back(uint8_t(v >> (8 * i)));
}

uint64_t get_u64(const uint8_t* p) {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = v << 8 | p[i];
    return v;
}

ordered_json json_parse(const Bytes& data) {
    return ordered_json::parse(std::string(data.begin(), data.end()));
}

std::string hex32(const Bytes32& b) { return to_hex(b); }

Bytes32 bytes32_from_hex(const std::string& s) {
    Bytes b = from_hex(s);
    if (b.size() != 32) throw std::invalid_argument("expected 32-byte hex value");
    Bytes32 out;
    std::copy(b.begin(), b.end(), out.begin());
    return out;
}

Fr fr_from_hex(const std::string& s) {
    Bytes b = from_hex(s);
    if (b.size() != 32) throw std::invalid_argument("expected 32-byte scalar");
    return Fr::from_bytes_be(b.data());
}

G1Affine g1_from_hex(const std::string& s) {
    Bytes b = from_hex(s);
    return g1_from_bytes(b.data(), b.size());
}

G2Affine g2_from_hex(const std::string& s) {
    Bytes b = from_hex(s);
    return g2_from_bytes(b.data(), b.size());
}

ordered_json vk_to_json(const SrsVerifierKey& vk) {
    return ordered_json{{"g", to_hex(g1_to_bytes(vk.g))},
                        {"h", to_hex(g2_to_bytes(vk.h))},
                        {"h_alpha", to_hex(g2_to_bytes(vk.h_alpha))},
                        {"h_alpha_x", to_hex(g2_to_bytes(vk.h_alpha_x))}};
}

SrsVerifierKey vk_from_json(const ordered_json& j) {
    return {g1_from_hex(j.at("g")), g2_from_hex(j.at("h")), g2_from_hex(j.at("h_alpha")),
            g2_from_hex(j.at("h_alpha_x"))};
}

}  // namespace

void save_srs(const Srs& srs, const fs::path& path, bool force) {
    Bytes out;
    out.insert(out.end(), kSrsMagic, kSrsMagic + 8);
    put_u64(out, srs.curve_id.size());
    out.insert(out.end(), srs.curve_id.begin(), srs.curve_id.end());
    put_u64(out, uint64_t(srs.d));
    put_u64(out, srs.g_powers.size());
    for (const auto& p : srs.g_powers) append(out, g1_to_bytes(p));
    put_u64(out, srs.g_alpha_powers.size());
    for (const auto& p : srs.g_alpha_powers) append(out, g1_to_bytes(p));
    append(out, g2_to_bytes(srs.h));
    append(out, g2_to_bytes(srs.h_alpha));
    append(out, g2_to_bytes(srs.h_alpha_x));
    append(out, g2_to_bytes(srs.h_x));
    write_file_guarded(path, out, force);
}

Srs load_srs(const fs::path& path) {
    Bytes data = read_file(path);
    size_t off = 0;
    auto need = [&](size_t n) {
        if (off + n > data.size()) throw std::runtime_error("srs file truncated");
    };
    need(8);
    if (!std::equal(kSrsMagic, kSrsMagic + 8, data.begin()))
        throw std::runtime_error("not an srs file (bad magic)");
    off = 8;
    need(8);
    uint64_t id_len = get_u64(data.data() + off);
    off += 8;
    need(id_len);
    Srs srs;
    srs.curve_id.assign(data.begin() + off, data.begin() + off + id_len);
    off += id_len;
    if (srs.curve_id != "bn254")
        throw std::runtime_error("unsupported curve " + srs.curve_id);
    need(8);
    srs.d = int64_t(get_u64(data.data() + off));
    off += 8;

    auto read_points = [&](std::vector<G1Affine>& out) {
        need(8);
        uint64_t count = get_u64(data.data() + off);
        off += 8;
        need(count * 64);
        out.reserve(count);
        for (uint64_t i = 0; i < count; ++i) {
            out.push_back(g1_from_bytes(data.data() + off, 64));
            off += 64;
        }
    };
    read_points(srs.g_powers);
    read_points(srs.g_alpha_powers);
    need(4 * 128);
    srs.h = g2_from_bytes(data.data() + off, 128);
    srs.h_alpha = g2_from_bytes(data.data() + off + 128, 128);
    srs.h_alpha_x = g2_from_bytes(data.data() + off + 256, 128);
    srs.h_x = g2_from_bytes(data.data() + off + 384, 128);
    srs.validate();
    return srs;
}

std::string verifier_subset_json(const Srs& srs) {
    SrsVerifierKey vk = srs.verifier_key();
    std::vector<std::string> words;
    auto push_words = [&words](const Bytes& b) {
        for (size_t i = 0; i < b.size(); i += 32)
            words.push_back(to_hex(b.data() + i, 32));
    };
    push_words(g1_to_bytes(vk.g));
    push_words(g2_to_bytes(vk.h));
    push_words(g2_to_bytes(vk.h_alpha));
    push_words(g2_to_bytes(vk.h_alpha_x));

    ordered_json j{{"version", 1},
                   {"curve", srs.curve_id},
                   {"degree", srs.d},
                   {"element_count", words.size()},
                   {"elements", words},
                   {"key", vk_to_json(vk)},
                   {"srs_digest", hex32(srs.digest())}};
    return j.dump(1);
}

SrsVerifierKey load_verifier_subset(const fs::path& path) {
    ordered_json j = json_parse(read_file(path));
    return vk_from_json(j.at("key"));
}

// --------------------------------------------------------------------- keys

void save_keypair(const KeyPair& kp, const fs::path& path, bool force) {
    ordered_json j{{"version", 1},
                   {"scheme", "ecdsa-secp256k1"},
                   {"sk", kp.sk.to_u256().to_hex()},
                   {"pk", to_hex(pk_to_bytes(kp.pk))}};
    write_text_guarded(path, j.dump(1), force);
}

KeyPair load_keypair(const fs::path& path) {
    ordered_json j = json_parse(read_file(path));
    if (j.at("scheme") != "ecdsa-secp256k1")
        throw std::runtime_error("unsupported signature scheme");
    U256 sk_val = U256::from_hex(j.at("sk"));
    if (sk_val.is_zero() || sk_val >= Secp256k1NParams::kModulus)
        throw std::runtime_error("secret key out of range");
    KeyPair kp;
    kp.sk = SecpScalar::from_u256(sk_val);
    kp.pk = public_key_of(kp.sk);
    Bytes pkb = from_hex(j.at("pk"));
    if (!(pk_from_bytes(pkb.data(), pkb.size()) == kp.pk))
        throw std::runtime_error("key file public key mismatch");
    return kp;
}

// ------------------------------------------------------------------- bundles

std::string bundle_json(const DataSourceBundle& bundle, const std::string& srs_file_hint) {
    std::vector<std::string> values;
    values.reserve(bundle.values.size());
    for (const Fr& v : bundle.values) values.push_back(to_hex(v.to_bytes_be()));
    ordered_json j{{"version", 1},
                   {"source_id", bundle.source_id},
                   {"location_hash", hex32(bundle.location.digest)},
                   {"commitment", to_hex(g1_to_bytes(bundle.commitment.point))},
                   {"signature", to_hex(sig_to_bytes(bundle.sigma))},
                   {"pk", to_hex(pk_to_bytes(bundle.pk))},
                   {"srs_digest", hex32(bundle.srs->digest())},
                   {"srs_file", srs_file_hint},
                   {"values", values}};
    return j.dump(1);
}

DataSourceBundle load_bundle(const fs::path& path) {
    ordered_json j = json_parse(read_file(path));
    DataSourceBundle b;
    b.source_id = j.at("source_id");
    b.location.digest = bytes32_from_hex(j.at("location_hash"));
    Bytes cb = from_hex(j.at("commitment"));
    b.commitment = {g1_from_bytes(cb.data(), cb.size()), true};
    Bytes sb = from_hex(j.at("signature"));
    b.sigma = sig_from_bytes(sb.data(), sb.size());
    Bytes pkb = from_hex(j.at("pk"));
    b.pk = pk_from_bytes(pkb.data(), pkb.size());
    for (const auto& v : j.at("values")) b.values.push_back(fr_from_hex(v));

    fs::path srs_path = j.at("srs_file").get<std::string>();
    if (srs_path.is_relative()) srs_path = path.parent_path() / srs_path;
    auto srs = std::make_shared<Srs>(load_srs(srs_path));
    if (!(hex32(srs->digest()) == j.at("srs_digest").get<std::string>()))
        throw std::runtime_error("bundle srs digest mismatch for " + path.string());
    b.srs = std::move(srs);
    if (!bundle_is_consistent(b))
        throw std::runtime_error("bundle fails signature or commitment checks");
    return b;
}

// ------------------------------------------------------------------- policy

std::string policy_json(const PolicyFile& p) {
    ordered_json sources = ordered_json::array();
    for (const auto& s : p.draft.sources)
        sources.push_back(ordered_json{{"source_id", s.source_id},
                                       {"pk", to_hex(pk_to_bytes(s.pk))},
                                       {"vk", vk_to_json(s.vk)}});
    ordered_json m = ordered_json::array();
    for (uint32_t v : p.draft.layout.m) m.push_back(v);

    ordered_json j{{"version", 1},
                   {"policy_id", p.draft.policy_id},
                   {"insurer", p.draft.insurer},
                   {"insuree", p.draft.insuree},
                   {"premium", p.draft.premium},
                   {"sum_insured", p.draft.sum_insured},
                   {"location_hash", hex32(p.draft.location.digest)},
                   {"expiry", p.draft.expiry},
                   {"verifier", to_string(p.kind)},
                   {"n_pixels", p.n_pixels},
                   {"params",
                    ordered_json{{"scale", p.params.scale},
                                 {"kappa_scaled", p.params.kappa_scaled},
                                 {"epsilon", p.params.epsilon},
                                 {"theta_max", p.params.theta_max},
                                 {"k_bits", p.params.k_bits},
                                 {"g_bits", p.params.g_bits}}},
                   {"params_digest", hex32(p.params.digest())},
                   {"s_y", to_hex(g1_to_bytes(p.draft.s_y.point))},
                   {"k", to_hex(g1_to_bytes(p.draft.k.point))},
                   {"layout", ordered_json{{"n_total", p.draft.layout.n_total}, {"m", m}}},
                   {"main_vk", vk_to_json(p.main_vk)},
                   {"sources", sources}};
    return j.dump(1);
}

PolicyFile load_policy(const fs::path& path) {
    ordered_json j = json_parse(read_file(path));
    PolicyFile p;
    p.draft.policy_id = j.at("policy_id");
    p.draft.insurer = j.at("insurer");
    p.draft.insuree = j.at("insuree");
    p.draft.premium = j.at("premium");
    p.draft.sum_insured = j.at("sum_insured");
    p.draft.location.digest = bytes32_from_hex(j.at("location_hash"));
    p.draft.expiry = j.at("expiry");
    p.kind = verifier_kind_from_string(j.at("verifier"));
    p.n_pixels = j.at("n_pixels");
    const auto& pj = j.at("params");
    p.params.scale = pj.at("scale");
    p.params.kappa_scaled = pj.at("kappa_scaled");
    p.params.epsilon = pj.at("epsilon");
    p.params.theta_max = pj.at("theta_max");
    p.params.k_bits = pj.at("k_bits");
    p.params.g_bits = pj.at("g_bits");
    p.params.validate();
    if (!(hex32(p.params.digest()) == j.at("params_digest").get<std::string>()))
        throw std::runtime_error("policy params digest mismatch");
    p.draft.params_digest = p.params.digest();
    p.draft.s_y = {g1_from_hex(j.at("s_y")), true};
    p.draft.k = {g1_from_hex(j.at("k")), true};
    p.draft.layout.n_total = j.at("layout").at("n_total");
    for (const auto& v : j.at("layout").at("m")) p.draft.layout.m.push_back(v);
    p.main_vk = vk_from_json(j.at("main_vk"));
    for (const auto& s : j.at("sources")) {
        SourcePublicInfo info;
        info.source_id = s.at("source_id");
        Bytes pkb = from_hex(s.at("pk"));
        info.pk = pk_from_bytes(pkb.data(), pkb.size());
        info.vk = vk_from_json(s.at("vk"));
        p.draft.sources.push_back(std::move(info));
    }
    return p;
}

// -------------------------------------------------------------------- proof

namespace {

ordered_json gamma_to_json(const LaurentPoly& g, size_t len) {
    ordered_json arr = ordered_json::array();
    for (size_t i = 0; i < len; ++i) arr.push_back(to_hex(g.coeff(int64_t(i)).to_bytes_be()));
    return arr;
}

LaurentPoly gamma_from_json(const ordered_json& arr) {
    LaurentPoly g;
    int64_t e = 0;
    for (const auto& c : arr) g.set_coeff(e++, fr_from_hex(c));
    return g;
}

std::vector<size_t> proof_gamma_lengths(size_t n_sources) {
    std::vector<size_t> lens(n_sources, 1);
    lens.insert(lens.end(), {1, 2, 1, 1, 2, 1});
    return lens;
}

}  // namespace

std::string proof_json(const SonicProof& p) {
    auto hexpt = [](const G1Affine& pt) { return to_hex(g1_to_bytes(pt)); };
    auto hexfr = [](const Fr& v) { return to_hex(v.to_bytes_be()); };

    ordered_json j{{"version", 1}, {"variant", to_string(p.variant)}};
    j["source_ids"] = p.source_ids;
    ordered_json d = ordered_json::array();
    for (const auto& c : p.d) d.push_back(hexpt(c.point));
    j["d"] = d;
    if (p.variant == SonicVariant::ev) {
        j["s_y"] = hexpt(p.s_y.point);
        j["k"] = hexpt(p.k.point);
    }
    j["r"] = hexpt(p.r.point);
    j["t"] = hexpt(p.t.point);
    j["s_x"] = hexpt(p.s_x.point);
    if (p.variant != SonicVariant::basic) j["r_tilde"] = hexpt(p.r_tilde.point);

    ordered_json opens{{"r1", hexfr(p.o_r1)}, {"r2", hexfr(p.o_r2)}, {"t", hexfr(p.o_t)}};
    if (p.variant != SonicVariant::basic) opens["r_tilde"] = hexfr(p.o_rt);
    ordered_json od = ordered_json::array();
    for (const Fr& v : p.o_d) od.push_back(hexfr(v));
    opens["d"] = od;
    opens["k"] = hexfr(p.o_k);
    opens["s"] = hexfr(p.o_s);
    opens["s1"] = hexfr(p.o_s1);
    opens["s2"] = hexfr(p.o_s2);
    j["openings"] = opens;

    if (p.variant == SonicVariant::ev) {
        j["batch"] = ordered_json{{"pi1", hexpt(p.batch.pi1)}, {"pi2", hexpt(p.batch.pi2)}};
        auto lens = proof_gamma_lengths(p.d.size());
        ordered_json gammas = ordered_json::array();
        for (size_t i = 0; i < p.gammas.size(); ++i)
            gammas.push_back(gamma_to_json(p.gammas[i], lens[i]));
        j["gammas"] = gammas;
        ordered_json pd = ordered_json::array();
        for (const auto& w : p.p_d) pd.push_back(hexpt(w.witness));
        j["data_proofs"] = pd;
    } else {
        ordered_json proofs{{"r1", hexpt(p.p_r1.witness)}, {"r2", hexpt(p.p_r2.witness)},
                            {"t", hexpt(p.p_t.witness)}};
        if (p.variant != SonicVariant::basic) proofs["r_tilde"] = hexpt(p.p_rt.witness);
        ordered_json pd = ordered_json::array();
        for (const auto& w : p.p_d) pd.push_back(hexpt(w.witness));
        proofs["d"] = pd;
        proofs["k"] = hexpt(p.p_k.witness);
        proofs["s"] = hexpt(p.p_s.witness);
        proofs["s1"] = hexpt(p.p_s1.witness);
        proofs["s2"] = hexpt(p.p_s2.witness);
        j["opening_proofs"] = proofs;
    }

    ordered_json sigs = ordered_json::array();
    for (const auto& s : p.sigmas) sigs.push_back(to_hex(sig_to_bytes(s)));
    j["signatures"] = sigs;
    return j.dump(1);
}

SonicProof load_proof(const fs::path& path) {
    ordered_json j = json_parse(read_file(path));
    SonicProof p;
    p.variant = sonic_variant_from_string(j.at("variant"));
    for (const auto& s : j.at("source_ids")) p.source_ids.push_back(s);
    for (const auto& c : j.at("d")) p.d.push_back({g1_from_hex(c), true});
    if (p.variant == SonicVariant::ev) {
        p.s_y = {g1_from_hex(j.at("s_y")), true};
        p.k = {g1_from_hex(j.at("k")), true};
    }
    p.r = {g1_from_hex(j.at("r")), true};
    p.t = {g1_from_hex(j.at("t")), true};
    p.s_x = {g1_from_hex(j.at("s_x")), true};
    if (p.variant != SonicVariant::basic) p.r_tilde = {g1_from_hex(j.at("r_tilde")), true};

    const auto& opens = j.at("openings");
    p.o_r1 = fr_from_hex(opens.at("r1"));
    p.o_r2 = fr_from_hex(opens.at("r2"));
    p.o_t = fr_from_hex(opens.at("t"));
    if (p.variant != SonicVariant::basic) p.o_rt = fr_from_hex(opens.at("r_tilde"));
    for (const auto& v : opens.at("d")) p.o_d.push_back(fr_from_hex(v));
    p.o_k = fr_from_hex(opens.at("k"));
    p.o_s = fr_from_hex(opens.at("s"));
    p.o_s1 = fr_from_hex(opens.at("s1"));
    p.o_s2 = fr_from_hex(opens.at("s2"));

    if (p.variant == SonicVariant::ev) {
        p.batch.pi1 = g1_from_hex(j.at("batch").at("pi1"));
        p.batch.pi2 = g1_from_hex(j.at("batch").at("pi2"));
        for (const auto& g : j.at("gammas")) p.gammas.push_back(gamma_from_json(g));
        for (const auto& w : j.at("data_proofs")) p.p_d.push_back({g1_from_hex(w)});
    } else {
        const auto& proofs = j.at("opening_proofs");
        p.p_r1 = {g1_from_hex(proofs.at("r1"))};
        p.p_r2 = {g1_from_hex(proofs.at("r2"))};
        p.p_t = {g1_from_hex(proofs.at("t"))};
        if (p.variant != SonicVariant::basic) p.p_rt = {g1_from_hex(proofs.at("r_tilde"))};
        for (const auto& w : proofs.at("d")) p.p_d.push_back({g1_from_hex(w)});
        p.p_k = {g1_from_hex(proofs.at("k"))};
        p.p_s = {g1_from_hex(proofs.at("s"))};
        p.p_s1 = {g1_from_hex(proofs.at("s1"))};
        p.p_s2 = {g1_from_hex(proofs.at("s2"))};
    }
    for (const auto& s : j.at("signatures")) {
        Bytes sb = from_hex(s);
        p.sigmas.push_back(sig_from_bytes(sb.data(), sb.size()));
    }
    return p;
}

std::string gas_report_json(const GasReport& report) {
    ordered_json rows = ordered_json::array();
    for (const auto& [name, gas] : report.rows)
        rows.push_back(ordered_json{{"operation", name}, {"gas", gas}});
    return ordered_json{{"version", 1}, {"rows", rows}, {"total", report.total}}.dump(1);
}

Scenario load_scenario(const fs::path& path) {
    ordered_json j = json_parse(read_file(path));
    Scenario s;
    if (j.contains("accounts"))
        for (const auto& a : j.at("accounts"))
            s.accounts.emplace_back(a.at("name"), a.at("balance"));
    for (const auto& a : j.at("actions")) {
        ScenarioAction act;
        act.op = a.at("op");
        if (a.contains("policy_id")) act.policy_id = a.at("policy_id");
        if (a.contains("ticks")) act.ticks = a.at("ticks");
        if (a.contains("proof")) act.proof_path = a.at("proof");
        if (a.contains("policy")) {
            fs::path pf = a.at("policy").get<std::string>();
            if (pf.is_relative()) pf = path.parent_path() / pf;
            PolicyFile loaded = load_policy(pf);
            act.draft = loaded.draft;
            act.kind = loaded.kind;
            act.main_vk = loaded.main_vk;
        }
        s.actions.push_back(std::move(act));
    }
    return s;
}

}  // namespace zkins
