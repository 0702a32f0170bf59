#include "zkins/sonic.hpp"

#include <algorithm>

namespace zkins {

// ----------------------------------------------------------------- transcript

void Transcript::absorb(const std::string& label, const Bytes& bytes) {
    entries_.emplace_back(label, log_.size());
    log_.insert(log_.end(), bytes.begin(), bytes.end());
}

void Transcript::absorb_point(const std::string& label, const G1Affine& p) {
    absorb(label, g1_to_bytes(p));
}

void Transcript::absorb_commitment(const std::string& label, const Commitment& c) {
    absorb_point(label, c.point);
}

void Transcript::absorb_scalar(const std::string& label, const Fr& v) {
    auto b = v.to_bytes_be();
    absorb(label, Bytes(b.begin(), b.end()));
}

Fr Transcript::challenge(const std::string& domain_tag) const {
    return challenge_avoiding(domain_tag, {});
}

Fr Transcript::challenge_avoiding(const std::string& domain_tag,
                                  const std::vector<Fr>& forbidden) const {
    for (unsigned counter = 0;; ++counter) {
        std::string tag = domain_tag;
        if (counter) tag += ":" + std::to_string(counter);
        Fr v = hash_to_scalar(tag, log_);
        bool bad = v.is_zero() || v == Fr::one();
        for (const Fr& f : forbidden) bad = bad || v == f;
        if (!bad) return v;
        if (counter == 255) throw std::runtime_error("challenge derivation exhausted");
    }
}

std::string to_string(SonicVariant v) {
    switch (v) {
        case SonicVariant::basic: return "basic";
        case SonicVariant::dat: return "dat";
        case SonicVariant::ev: return "ev";
    }
    return "?";
}

SonicVariant sonic_variant_from_string(const std::string& s) {
    if (s == "basic") return SonicVariant::basic;
    if (s == "dat") return SonicVariant::dat;
    if (s == "ev") return SonicVariant::ev;
    throw std::invalid_argument("unknown proof variant: " + s);
}

// -------------------------------------------------------------- data sources

LaurentPoly data_poly(const std::vector<Fr>& values) {
    LaurentPoly f;
    for (size_t t = 0; t < values.size(); ++t) f.set_coeff(int64_t(t) + 1, values[t]);
    return f;
}

DataSourceBundle make_bundle(const std::string& source_id, std::vector<Fr> values,
                             std::shared_ptr<const Srs> srs, const SecpScalar& sk,
                             const LocationTag& location) {
    if (values.empty()) throw std::invalid_argument("data bundle must carry values");
    DataSourceBundle b;
    b.source_id = source_id;
    b.commitment = rkzg_commit(*srs, data_poly(values));
    b.values = std::move(values);
    b.srs = std::move(srs);
    b.location = location;
    b.pk = public_key_of(sk);
    b.sigma = sign_data_bundle(sk, location, b.commitment);
    return b;
}

bool bundle_is_consistent(const DataSourceBundle& b) {
    if (!b.srs || b.values.empty()) return false;
    if (!verify_data_bundle(b.pk, b.location, b.commitment, b.sigma)) return false;
    return rkzg_commit(*b.srs, data_poly(b.values)) == b.commitment;
}

uint32_t WitnessLayout::n_core() const {
    uint32_t sum = 0;
    for (uint32_t mj : m) sum += mj;
    if (sum > n_total) throw DataBindingError("data exceeds the witness slot count");
    return n_total - sum;
}

int64_t WitnessLayout::offset(size_t j) const {
    int64_t off = n_core();
    for (size_t i = 0; i < j; ++i) off += m[i];
    return off;
}

std::pair<Witness, WitnessLayout> assemble_data_witness(
    const ConstraintSystem& cs, const Witness& core,
    const std::vector<DataSourceBundle>& bundles) {
    uint32_t n = cs.n_mul();
    if (core.a.size() != n || core.b.size() != n || core.c.size() != n)
        throw DataBindingError("core witness length does not match the system");

    WitnessLayout layout;
    layout.n_total = n;
    for (const auto& b : bundles) layout.m.push_back(uint32_t(b.values.size()));
    uint32_t n_core = layout.n_core();

    for (size_t j = 0; j < bundles.size(); ++j) {
        const auto& b = bundles[j];
        if (!bundle_is_consistent(b))
            throw DataBindingError("bundle " + b.source_id + " fails signature binding");
        if (j > 0 && !(b.location == bundles[0].location))
            throw DataBindingError("bundles disagree on the location tag");
    }

    // data slots of the core witness must be vacant
    for (uint32_t i = n_core; i < n; ++i)
        if (!core.a[i].is_zero() || !core.b[i].is_zero() || !core.c[i].is_zero())
            throw DataBindingError("core witness occupies data slots");

    Witness full = core;
    for (size_t j = 0; j < bundles.size(); ++j) {
        int64_t off = layout.offset(j);
        for (size_t t = 0; t < bundles[j].values.size(); ++t)
            full.a[size_t(off) + t] = bundles[j].values[t];
    }
    return {std::move(full), std::move(layout)};
}

std::pair<Commitment, Commitment> commit_public_polys(const Srs& srs, const SKPolys& sk) {
    return {rkzg_commit(srs, sk.s_one_y()), rkzg_commit(srs, sk.k_hat())};
}

// ------------------------------------------------------------- serialization

namespace {

void put_u32(Bytes& out, uint32_t v) {
    for (int i = 3; i >= 0; --i) out.push_back(uint8_t(v >> (8 * i)));
}

void put_fr(Bytes& out, const Fr& v) {
    auto b = v.to_bytes_be();
    out.insert(out.end(), b.begin(), b.end());
}

void put_point(Bytes& out, const G1Affine& p) { append(out, g1_to_bytes(p)); }

// gamma lists are serialized dense with the family's fixed coefficient count
void put_gamma(Bytes& out, const LaurentPoly& g, size_t len) {
    for (size_t i = 0; i < len; ++i) put_fr(out, g.coeff(int64_t(i)));
}

std::vector<size_t> gamma_lengths(size_t n_sources) {
    std::vector<size_t> lens(n_sources, 1);             // d_j at {z}
    lens.insert(lens.end(), {1, 2, 1, 1, 2, 1});        // r~, r, t, k, s_x, s_y
    return lens;
}

}  // namespace

Bytes SonicProof::to_bytes() const {
    Bytes out;
    out.push_back(1);  // format version
    out.push_back(uint8_t(variant));
    put_u32(out, uint32_t(d.size()));
    for (const auto& c : d) put_point(out, c.point);
    if (variant == SonicVariant::ev) {
        put_point(out, s_y.point);
        put_point(out, k.point);
    }
    put_point(out, r.point);
    put_point(out, t.point);
    put_point(out, s_x.point);
    if (variant != SonicVariant::basic) put_point(out, r_tilde.point);

    put_fr(out, o_r1);
    put_fr(out, o_r2);
    put_fr(out, o_t);
    if (variant != SonicVariant::basic) put_fr(out, o_rt);
    for (const Fr& v : o_d) put_fr(out, v);
    put_fr(out, o_k);
    put_fr(out, o_s);
    put_fr(out, o_s1);
    put_fr(out, o_s2);

    if (variant == SonicVariant::ev) {
        put_point(out, batch.pi1);
        put_point(out, batch.pi2);
        auto lens = gamma_lengths(d.size());
        for (size_t i = 0; i < gammas.size(); ++i) put_gamma(out, gammas[i], lens[i]);
        for (const auto& pd : p_d) put_point(out, pd.witness);
    } else {
        put_point(out, p_r1.witness);
        put_point(out, p_r2.witness);
        put_point(out, p_t.witness);
        if (variant != SonicVariant::basic) put_point(out, p_rt.witness);
        for (const auto& pd : p_d) put_point(out, pd.witness);
        put_point(out, p_k.witness);
        put_point(out, p_s.witness);
        put_point(out, p_s1.witness);
        put_point(out, p_s2.witness);
    }
    for (const auto& s : sigmas) append(out, sig_to_bytes(s));
    return out;
}

// ------------------------------------------------------------------ proving

namespace {

struct ProverCore {
    RPoly r_full;
    SKPolys sk;
    LaurentPoly t_poly;  // at y
    LaurentPoly s_x_poly;
    Fr y, z;
};

uint64_t poly_bytes(const LaurentPoly& p) { return p.term_count() * 32; }

void add_stats(ProveStats* stats, const LaurentPoly& p) {
    if (stats) stats->polynomial_bytes += poly_bytes(p);
}

void trace_challenge(VerifyTrace* trace, const Transcript& tr) {
    if (trace) trace->keccak_words += (tr.absorbed_bytes() + 31) / 32;
}

}  // namespace

SonicProof prove_basic(const Srs& srs, const ConstraintSystem& cs, const Witness& wit,
                       ProveStats* stats) {
    SonicProof proof;
    proof.variant = SonicVariant::basic;

    RPoly r = build_r_poly(wit);
    SKPolys sk(cs);
    proof.r = rkzg_commit(srs, r.poly);
    add_stats(stats, r.poly);

    Transcript tr;
    tr.absorb_commitment("R", proof.r);
    Fr y = tr.challenge("y");

    LaurentPoly t_poly = compute_t(r, sk, y);
    LaurentPoly s_x = sk.s_at_y(y);
    proof.t = rkzg_commit(srs, t_poly);
    proof.s_x = rkzg_commit(srs, s_x);
    add_stats(stats, t_poly);
    add_stats(stats, s_x);
    add_stats(stats, sk.s_one_y());
    add_stats(stats, sk.k_hat());

    tr.absorb_commitment("T", proof.t);
    tr.absorb_commitment("S_X", proof.s_x);
    Fr z = tr.challenge("z");

    std::tie(proof.o_r1, proof.p_r1) = rkzg_open(srs, r.poly, z);
    std::tie(proof.o_r2, proof.p_r2) = rkzg_open(srs, r.poly, z * y);
    std::tie(proof.o_t, proof.p_t) = rkzg_open(srs, t_poly, z);
    std::tie(proof.o_k, proof.p_k) = rkzg_open(srs, sk.k_hat(), y);
    std::tie(proof.o_s, proof.p_s) = rkzg_open(srs, s_x, z);
    std::tie(proof.o_s1, proof.p_s1) = rkzg_open(srs, s_x, Fr::one());
    std::tie(proof.o_s2, proof.p_s2) = rkzg_open(srs, sk.s_one_y(), y);
    return proof;
}

bool verify_basic(const SonicVerifyContext& ctx, const SonicProof& proof, VerifyTrace* trace) {
    if (proof.variant != SonicVariant::basic) return false;
    if (trace) trace->input_bytes += proof.to_bytes().size();

    Transcript tr;
    tr.absorb_commitment("R", proof.r);
    Fr y = tr.challenge("y");
    trace_challenge(trace, tr);
    tr.absorb_commitment("T", proof.t);
    tr.absorb_commitment("S_X", proof.s_x);
    Fr z = tr.challenge("z");
    trace_challenge(trace, tr);

    // t = r1 (r2 + s) - k  and  s1 = s2
    if (trace) trace->other_field_ops += 3;
    if (!(proof.o_t == proof.o_r1 * (proof.o_r2 + proof.o_s) - proof.o_k)) return false;
    if (!(proof.o_s1 == proof.o_s2)) return false;

    const SrsVerifierKey& vk = ctx.srs_vk;
    return rkzg_verify(vk, proof.t, z, proof.o_t, proof.p_t, trace) &&
           rkzg_verify(vk, proof.r, z, proof.o_r1, proof.p_r1, trace) &&
           rkzg_verify(vk, proof.r, z * y, proof.o_r2, proof.p_r2, trace) &&
           rkzg_verify(vk, ctx.k, y, proof.o_k, proof.p_k, trace) &&
           rkzg_verify(vk, proof.s_x, z, proof.o_s, proof.p_s, trace) &&
           rkzg_verify(vk, proof.s_x, Fr::one(), proof.o_s1, proof.p_s1, trace) &&
           rkzg_verify(vk, ctx.s_y, y, proof.o_s2, proof.p_s2, trace);
}

namespace {

// shared tail of the two data-carrying provers
struct DataProver {
    Witness full;
    WitnessLayout layout;
    RPoly r_full, r_core;
    std::vector<LaurentPoly> d_polys;
};

DataProver prepare_data_prover(const ConstraintSystem& cs, const Witness& core,
                               const std::vector<DataSourceBundle>& bundles) {
    DataProver dp;
    std::tie(dp.full, dp.layout) = assemble_data_witness(cs, core, bundles);
    dp.r_full = build_r_poly(dp.full);
    dp.r_core = build_r_poly(core);
    for (const auto& b : bundles) dp.d_polys.push_back(data_poly(b.values));
    return dp;
}

}  // namespace

SonicProof prove_with_data(const Srs& srs, const ConstraintSystem& cs, const Witness& core,
                           const std::vector<DataSourceBundle>& bundles, ProveStats* stats) {
    SonicProof proof;
    proof.variant = SonicVariant::dat;

    DataProver dp = prepare_data_prover(cs, core, bundles);
    SKPolys sk(cs);
    for (const auto& b : bundles) {
        proof.source_ids.push_back(b.source_id);
        proof.d.push_back(b.commitment);
        proof.sigmas.push_back(b.sigma);
    }

    proof.r = rkzg_commit(srs, dp.r_full.poly);
    proof.r_tilde = rkzg_commit(srs, dp.r_core.poly);
    add_stats(stats, dp.r_full.poly);
    add_stats(stats, dp.r_core.poly);
    for (const auto& d : dp.d_polys) add_stats(stats, d);

    Transcript tr;
    tr.absorb_commitment("R", proof.r);
    tr.absorb_commitment("R~", proof.r_tilde);
    Fr y = tr.challenge("y");

    LaurentPoly t_poly = compute_t(dp.r_full, sk, y);
    LaurentPoly s_x = sk.s_at_y(y);
    proof.t = rkzg_commit(srs, t_poly);
    proof.s_x = rkzg_commit(srs, s_x);
    add_stats(stats, t_poly);
    add_stats(stats, s_x);
    add_stats(stats, sk.s_one_y());
    add_stats(stats, sk.k_hat());

    tr.absorb_commitment("T", proof.t);
    tr.absorb_commitment("S_X", proof.s_x);
    Fr z = tr.challenge("z");

    std::tie(proof.o_r1, proof.p_r1) = rkzg_open(srs, dp.r_full.poly, z);
    std::tie(proof.o_r2, proof.p_r2) = rkzg_open(srs, dp.r_full.poly, z * y);
    std::tie(proof.o_t, proof.p_t) = rkzg_open(srs, t_poly, z);
    std::tie(proof.o_rt, proof.p_rt) = rkzg_open(srs, dp.r_core.poly, z);
    for (size_t j = 0; j < bundles.size(); ++j) {
        auto [v, pi] = rkzg_open(*bundles[j].srs, dp.d_polys[j], z);
        proof.o_d.push_back(v);
        proof.p_d.push_back(pi);
    }
    std::tie(proof.o_k, proof.p_k) = rkzg_open(srs, sk.k_hat(), y);
    std::tie(proof.o_s, proof.p_s) = rkzg_open(srs, s_x, z);
    std::tie(proof.o_s1, proof.p_s1) = rkzg_open(srs, s_x, Fr::one());
    std::tie(proof.o_s2, proof.p_s2) = rkzg_open(srs, sk.s_one_y(), y);
    return proof;
}

namespace {

bool data_shape_ok(const SonicVerifyContext& ctx, const SonicProof& proof) {
    size_t j = ctx.sources.size();
    return proof.d.size() == j && proof.o_d.size() == j && proof.p_d.size() == j &&
           proof.sigmas.size() == j && ctx.layout.m.size() == j;
}

bool check_signatures(const SonicVerifyContext& ctx, const SonicProof& proof,
                      VerifyTrace* trace) {
    for (size_t j = 0; j < ctx.sources.size(); ++j) {
        if (trace) trace->sig_checks += 1;
        if (!verify_data_bundle(ctx.sources[j].pk, ctx.location, proof.d[j], proof.sigmas[j]))
            return false;
    }
    return true;
}

// r1 == r~ + sum_j d_j z^offset_j
bool check_r_decomposition(const SonicVerifyContext& ctx, const SonicProof& proof, const Fr& z,
                           VerifyTrace* trace) {
    Fr acc = proof.o_rt;
    for (size_t j = 0; j < ctx.sources.size(); ++j) {
        Fr zoff = z.pow(U256::from_u64(uint64_t(ctx.layout.offset(j))));
        acc += proof.o_d[j] * zoff;
        if (trace) trace->other_field_ops += 2;
    }
    return proof.o_r1 == acc;
}

}  // namespace

bool verify_with_data(const SonicVerifyContext& ctx, const SonicProof& proof,
                      VerifyTrace* trace) {
    if (proof.variant != SonicVariant::dat) return false;
    if (!data_shape_ok(ctx, proof)) return false;
    if (trace) trace->input_bytes += proof.to_bytes().size();

    if (!check_signatures(ctx, proof, trace)) return false;

    Transcript tr;
    tr.absorb_commitment("R", proof.r);
    tr.absorb_commitment("R~", proof.r_tilde);
    Fr y = tr.challenge("y");
    trace_challenge(trace, tr);
    tr.absorb_commitment("T", proof.t);
    tr.absorb_commitment("S_X", proof.s_x);
    Fr z = tr.challenge("z");
    trace_challenge(trace, tr);

    if (trace) trace->other_field_ops += 3;
    if (!(proof.o_t == proof.o_r1 * (proof.o_r2 + proof.o_s) - proof.o_k)) return false;
    if (!(proof.o_s1 == proof.o_s2)) return false;
    if (!check_r_decomposition(ctx, proof, z, trace)) return false;

    const SrsVerifierKey& vk = ctx.srs_vk;
    for (size_t j = 0; j < ctx.sources.size(); ++j)
        if (!rkzg_verify(ctx.sources[j].vk, proof.d[j], z, proof.o_d[j], proof.p_d[j], trace))
            return false;
    return rkzg_verify(vk, proof.r_tilde, z, proof.o_rt, proof.p_rt, trace) &&
           rkzg_verify(vk, proof.t, z, proof.o_t, proof.p_t, trace) &&
           rkzg_verify(vk, proof.r, z, proof.o_r1, proof.p_r1, trace) &&
           rkzg_verify(vk, proof.r, z * y, proof.o_r2, proof.p_r2, trace) &&
           rkzg_verify(vk, ctx.k, y, proof.o_k, proof.p_k, trace) &&
           rkzg_verify(vk, proof.s_x, z, proof.o_s, proof.p_s, trace) &&
           rkzg_verify(vk, proof.s_x, Fr::one(), proof.o_s1, proof.p_s1, trace) &&
           rkzg_verify(vk, ctx.s_y, y, proof.o_s2, proof.p_s2, trace);
}

namespace {

// transcript prefix shared by prover and verifier of the batched variant
struct EvChallenges {
    Fr y, beta, z, mu;
};

void ev_absorb_data(Transcript& tr, const std::vector<Commitment>& d) {
    for (size_t j = 0; j < d.size(); ++j) tr.absorb_commitment("D", d[j]);
}

void ev_absorb_commitments(Transcript& tr, const SonicProof& proof) {
    tr.absorb_commitment("S_Y", proof.s_y);
    tr.absorb_commitment("K", proof.k);
    tr.absorb_commitment("R", proof.r);
    tr.absorb_commitment("S", proof.t);
    tr.absorb_commitment("R~", proof.r_tilde);
    tr.absorb_commitment("S_X", proof.s_x);
}

std::vector<std::vector<Fr>> ev_point_sets(const Fr& z, const Fr& y) {
    Fr zy = z * y;
    return {{z}, {z, zy}, {z}, {y}, {z, Fr::one()}, {y}};
}

// absorb everything after pi2 so the fold weights bind the whole proof
void ev_absorb_tail(Transcript& tr, const SonicProof& proof) {
    tr.absorb_point("pi2", proof.batch.pi2);
    tr.absorb_scalar("r1", proof.o_r1);
    tr.absorb_scalar("r2", proof.o_r2);
    tr.absorb_scalar("t", proof.o_t);
    tr.absorb_scalar("r~", proof.o_rt);
    for (const Fr& v : proof.o_d) tr.absorb_scalar("d", v);
    tr.absorb_scalar("k", proof.o_k);
    tr.absorb_scalar("s", proof.o_s);
    tr.absorb_scalar("s1", proof.o_s1);
    tr.absorb_scalar("s2", proof.o_s2);
    auto lens = gamma_lengths(proof.d.size());
    for (size_t i = 0; i < proof.gammas.size(); ++i) {
        Bytes gb;
        put_gamma(gb, proof.gammas[i], lens[i]);
        tr.absorb("gamma", gb);
    }
    for (const auto& pd : proof.p_d) tr.absorb_point("pi_d", pd.witness);
    for (const auto& s : proof.sigmas) tr.absorb("sigma", sig_to_bytes(s));
}

}  // namespace

SonicProof prove_batched(const Srs& srs, const ConstraintSystem& cs, const Witness& core,
                         const std::vector<DataSourceBundle>& bundles, ProveStats* stats) {
    SonicProof proof;
    proof.variant = SonicVariant::ev;

    DataProver dp = prepare_data_prover(cs, core, bundles);
    SKPolys sk(cs);
    for (const auto& b : bundles) {
        proof.source_ids.push_back(b.source_id);
        proof.d.push_back(b.commitment);
        proof.sigmas.push_back(b.sigma);
    }

    Transcript tr;
    ev_absorb_data(tr, proof.d);
    Fr y = tr.challenge("y");
    Fr beta = tr.challenge("beta");

    LaurentPoly t_poly = compute_t(dp.r_full, sk, y);
    LaurentPoly s_x = sk.s_at_y(y);

    std::tie(proof.s_y, proof.k) = commit_public_polys(srs, sk);
    proof.r = rkzg_commit(srs, dp.r_full.poly);
    proof.r_tilde = rkzg_commit(srs, dp.r_core.poly);
    proof.t = rkzg_commit(srs, t_poly);
    proof.s_x = rkzg_commit(srs, s_x);
    add_stats(stats, dp.r_full.poly);
    add_stats(stats, dp.r_core.poly);
    add_stats(stats, t_poly);
    add_stats(stats, s_x);
    add_stats(stats, sk.s_one_y());
    add_stats(stats, sk.k_hat());
    for (const auto& d : dp.d_polys) add_stats(stats, d);

    ev_absorb_commitments(tr, proof);
    Fr z = tr.challenge("z");

    // main-srs batch: r~, r, t, k, s_x, s_y at the Table point sets
    std::vector<LaurentPoly> polys{dp.r_core.poly, dp.r_full.poly, t_poly,
                                   sk.k_hat(),     s_x,            sk.s_one_y()};
    std::vector<std::vector<Fr>> sets = ev_point_sets(z, y);
    RkzgbSession ses = rkzgb_open_begin(srs, std::move(polys), sets, beta);
    proof.batch.pi1 = ses.pi1;
    add_stats(stats, ses.p);

    tr.absorb_point("pi1", proof.batch.pi1);
    Fr mu = tr.challenge_avoiding("mu", ses.s_union);
    proof.batch.pi2 = rkzgb_open_finish(srs, ses, mu);

    // scalar openings and the gamma lists (data gammas are the constants d_j[z])
    Fr zy = z * y;
    proof.o_rt = dp.r_core.poly.eval(z);
    proof.o_r1 = dp.r_full.poly.eval(z);
    proof.o_r2 = dp.r_full.poly.eval(zy);
    proof.o_t = t_poly.eval(z);
    proof.o_k = sk.k_hat().eval(y);
    proof.o_s = s_x.eval(z);
    proof.o_s1 = s_x.eval(Fr::one());
    proof.o_s2 = sk.s_one_y().eval(y);

    for (size_t j = 0; j < bundles.size(); ++j) {
        auto [v, pi] = rkzg_open(*bundles[j].srs, dp.d_polys[j], z);
        proof.o_d.push_back(v);
        proof.p_d.push_back(pi);
        proof.gammas.push_back(LaurentPoly::constant(v));
    }
    for (const auto& g : ses.gammas) proof.gammas.push_back(g);

    return proof;
}

bool verify_batched(const SonicVerifyContext& ctx, const SonicProof& proof,
                    VerifyTrace* trace) {
    if (proof.variant != SonicVariant::ev) return false;
    if (!data_shape_ok(ctx, proof)) return false;
    if (proof.gammas.size() != ctx.sources.size() + 6) return false;
    // the echoed public commitments must be the trusted ones
    if (!(proof.s_y == ctx.s_y) || !(proof.k == ctx.k)) return false;
    if (trace) trace->input_bytes += proof.to_bytes().size();

    if (!check_signatures(ctx, proof, trace)) return false;

    Transcript tr;
    ev_absorb_data(tr, proof.d);
    Fr y = tr.challenge("y");
    Fr beta = tr.challenge("beta");
    trace_challenge(trace, tr);
    trace_challenge(trace, tr);
    ev_absorb_commitments(tr, proof);
    Fr z = tr.challenge("z");
    trace_challenge(trace, tr);

    std::vector<std::vector<Fr>> sets = ev_point_sets(z, y);
    std::vector<Fr> s_union = batch_point_union(sets);
    tr.absorb_point("pi1", proof.batch.pi1);
    Fr mu = tr.challenge_avoiding("mu", s_union);
    trace_challenge(trace, tr);

    size_t n_src = ctx.sources.size();
    Fr zy = z * y;

    // gamma lists must interpolate the claimed scalar openings
    auto gamma_matches = [&](size_t idx, const std::vector<std::pair<Fr, Fr>>& expect) {
        const LaurentPoly& g = proof.gammas[idx];
        for (const auto& [at, val] : expect) {
            if (trace) trace->other_field_ops += g.term_count();
            if (!(g.eval(at) == val)) return false;
        }
        return true;
    };
    for (size_t j = 0; j < n_src; ++j)
        if (!gamma_matches(j, {{z, proof.o_d[j]}})) return false;
    if (!gamma_matches(n_src + 0, {{z, proof.o_rt}})) return false;
    if (!gamma_matches(n_src + 1, {{z, proof.o_r1}, {zy, proof.o_r2}})) return false;
    if (!gamma_matches(n_src + 2, {{z, proof.o_t}})) return false;
    if (!gamma_matches(n_src + 3, {{y, proof.o_k}})) return false;
    if (!gamma_matches(n_src + 4, {{z, proof.o_s}, {Fr::one(), proof.o_s1}})) return false;
    if (!gamma_matches(n_src + 5, {{y, proof.o_s2}})) return false;

    if (trace) trace->other_field_ops += 3;
    if (!(proof.o_t == proof.o_r1 * (proof.o_r2 + proof.o_s) - proof.o_k)) return false;
    if (!(proof.o_s1 == proof.o_s2)) return false;
    if (!check_r_decomposition(ctx, proof, z, trace)) return false;

    // the one batched pairing equation over the main-srs family
    std::vector<BatchOpeningClaim> claims{
        {proof.r_tilde, sets[0], proof.gammas[n_src + 0]},
        {proof.r, sets[1], proof.gammas[n_src + 1]},
        {proof.t, sets[2], proof.gammas[n_src + 2]},
        {ctx.k, sets[3], proof.gammas[n_src + 3]},
        {proof.s_x, sets[4], proof.gammas[n_src + 4]},
        {ctx.s_y, sets[5], proof.gammas[n_src + 5]},
    };
    auto terms = rkzgb_batch_equation(ctx.srs_vk, claims, beta, mu, proof.batch, trace);
    if (!terms) return false;

    // fold the per-source data-opening equations into the same product with
    // independent transcript weights; the check stays a single equation
    ev_absorb_tail(tr, proof);
    for (size_t j = 0; j < n_src; ++j) {
        Fr rho = tr.challenge("rho:" + std::to_string(j));
        trace_challenge(trace, tr);
        PairingTerms data_eq =
            rkzg_equation(ctx.sources[j].vk, proof.d[j], z, proof.o_d[j], proof.p_d[j], nullptr);
        for (auto& [p, q] : data_eq) {
            terms->emplace_back(g1_mul(p, rho).to_affine(), q);
        }
        if (trace) {
            trace->pairing_pairs += 3;
            trace->opening_g1_muls += 5;  // v/z preparation plus the rho weighting
            trace->opening_g1_adds += 1;
        }
    }

    return pairing_product_is_one(*terms);
}

bool sonic_verify(const SonicVerifyContext& ctx, const SonicProof& proof, VerifyTrace* trace) {
    switch (proof.variant) {
        case SonicVariant::basic: return verify_basic(ctx, proof, trace);
        case SonicVariant::dat: return verify_with_data(ctx, proof, trace);
        case SonicVariant::ev: return verify_batched(ctx, proof, trace);
    }
    return false;
}

}  // namespace zkins
