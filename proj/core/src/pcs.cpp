#include "zkins/pcs.hpp"

#include <algorithm>

namespace zkins {

const G1Affine& Srs::g_power(int64_t i) const {
    if (i < -d || i > d) throw DegreeOverflowError("exponent outside SRS range");
    return g_powers[size_t(i + d)];
}

const G1Affine& Srs::g_alpha_power(int64_t i) const {
    if (i == 0) throw NonzeroConstantError("g^alpha is not part of the SRS");
    if (i < -d || i > d) throw DegreeOverflowError("exponent outside SRS range");
    return g_alpha_powers[size_t(i + d)];
}

void Srs::validate(bool full) const {
    if (d < 1) throw std::invalid_argument("srs degree must be >= 1");
    if (g_powers.size() != size_t(2 * d + 1) || g_alpha_powers.size() != size_t(2 * d + 1))
        throw std::invalid_argument("srs power arrays have wrong length");
    if (!(g_power(0) == G1Curve::generator_affine()))
        throw std::invalid_argument("srs base generator mismatch");
    if (!g_alpha_powers[size_t(d)].is_identity())
        throw std::invalid_argument("srs alpha slot at exponent zero must be empty");

    auto check = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("srs consistency: ") + what);
    };
    auto same_pairing = [](const G1Affine& a, const G2Affine& b, const G1Affine& c,
                           const G2Affine& e) {
        PairingTerms t{{a, b}, {c.neg(), e}};
        return pairing_product_is_one(t);
    };

    std::vector<int64_t> chain_sample, alpha_sample;
    if (full) {
        for (int64_t i = -d; i < d; ++i) chain_sample.push_back(i);
        for (int64_t i = -d; i <= d; ++i)
            if (i != 0) alpha_sample.push_back(i);
    } else {
        chain_sample = {-d, -1, 0, d - 1};
        alpha_sample = {-d, 1, d};
    }
    for (int64_t i : chain_sample)
        check(same_pairing(g_power(i + 1), h, g_power(i), h_x), "g chain vs h_x");
    for (int64_t i : alpha_sample)
        check(same_pairing(g_alpha_power(i), h, g_power(i), h_alpha), "alpha chain vs h_alpha");
    check(same_pairing(g_power(1), h_alpha, g_power(0), h_alpha_x), "h_alpha_x consistency");
}

Bytes32 Srs::digest() const {
    Bytes buf;
    buf.reserve(64 * g_powers.size());
    for (int i = 0; i < 8; ++i) buf.push_back(uint8_t(uint64_t(d) >> (8 * (7 - i))));
    for (const auto& p : g_powers) append(buf, g1_to_bytes(p));
    for (const auto& p : g_alpha_powers) append(buf, g1_to_bytes(p));
    append(buf, g2_to_bytes(h));
    append(buf, g2_to_bytes(h_alpha));
    append(buf, g2_to_bytes(h_alpha_x));
    append(buf, g2_to_bytes(h_x));
    return keccak256(buf);
}

Srs setup(int64_t d, RandomSource& rng) {
    if (d < 1) throw std::invalid_argument("srs degree must be >= 1");
    Fr x = rng.next_fr_not_binary();
    Fr alpha = rng.next_fr_not_binary();
    Fr x_inv = x.inverse();

    Srs srs;
    srs.d = d;
    const G1Affine g = G1Curve::generator_affine();
    const G2Affine h = G2Curve::generator_affine();

    std::vector<G1> jac(size_t(2 * d + 1));
    jac[size_t(d)] = G1::from_affine(g);
    for (int64_t i = 1; i <= d; ++i) {
        jac[size_t(d + i)] = jac[size_t(d + i - 1)].scalar_mul(x.to_u256());
        jac[size_t(d - i)] = jac[size_t(d - i + 1)].scalar_mul(x_inv.to_u256());
    }
    srs.g_powers = batch_to_affine<G1Curve>(jac);

    std::vector<G1> alpha_jac(size_t(2 * d + 1));
    for (int64_t i = -d; i <= d; ++i) {
        if (i == 0) continue;  // g^alpha is explicitly left out
        alpha_jac[size_t(i + d)] =
            G1::from_affine(srs.g_powers[size_t(i + d)]).scalar_mul(alpha.to_u256());
    }
    srs.g_alpha_powers = batch_to_affine<G1Curve>(alpha_jac);

    srs.h = h;
    srs.h_alpha = g2_mul(h, alpha).to_affine();
    srs.h_alpha_x = g2_mul(h, alpha * x).to_affine();
    srs.h_x = g2_mul(h, x).to_affine();

    // trapdoor is not retained
    x = Fr::zero();
    alpha = Fr::zero();
    x_inv = Fr::zero();

    return srs;
}

namespace {

// msm of f over the plain or alpha-shifted powers
G1Affine commit_msm(const Srs& srs, const LaurentPoly& f, bool alpha_shifted) {
    std::vector<G1Affine> bases;
    std::vector<Fr> scalars;
    bases.reserve(f.term_count());
    scalars.reserve(f.term_count());
    for (const auto& [e, c] : f.terms()) {
        bases.push_back(alpha_shifted ? srs.g_alpha_power(e) : srs.g_power(e));
        scalars.push_back(c);
    }
    return g1_msm(bases, scalars).to_affine();
}

void count_equation(VerifyTrace* trace, uint64_t pairs, uint64_t muls, uint64_t adds) {
    if (!trace) return;
    trace->pairing_equations += 1;
    trace->pairing_pairs += pairs;
    trace->opening_g1_muls += muls;
    trace->opening_g1_adds += adds;
}

}  // namespace

Commitment kzg_commit(const Srs& srs, const LaurentPoly& f) {
    return {commit_msm(srs, f, false), false};
}

std::pair<Fr, OpeningProof> kzg_open(const Srs& srs, const LaurentPoly& f, const Fr& z) {
    Fr v = f.eval(z);
    LaurentPoly q = f.divide_by_linear(z);
    return {v, OpeningProof{commit_msm(srs, q, false)}};
}

bool kzg_verify(const Srs& srs, const Commitment& F, const Fr& z, const Fr& v,
                const OpeningProof& pi, VerifyTrace* trace) {
    // e<F g^-v, h> == e<pi, h^x h^-z>
    G1Affine lhs = G1::from_affine(F.point)
                       .add(g1_mul(srs.g_power(0), v.neg()))
                       .to_affine();
    G2Affine rhs = G2::from_affine(srs.h_x).add(g2_mul(srs.h, z.neg())).to_affine();
    count_equation(trace, 2, 2, 2);
    PairingTerms terms{{lhs, srs.h}, {pi.witness.neg(), rhs}};
    return pairing_product_is_one(terms);
}

Commitment rkzg_commit(const Srs& srs, const LaurentPoly& f) {
    if (!f.coeff(0).is_zero())
        throw NonzeroConstantError("restricted commitment requires zero constant term");
    return {commit_msm(srs, f, true), true};
}

std::pair<Fr, OpeningProof> rkzg_open(const Srs& srs, const LaurentPoly& f, const Fr& z) {
    Fr v = f.eval(z);
    LaurentPoly q = f.divide_by_linear(z);
    return {v, OpeningProof{commit_msm(srs, q, false)}};
}

PairingTerms rkzg_equation(const SrsVerifierKey& vk, const Commitment& F, const Fr& z,
                           const Fr& v, const OpeningProof& pi, VerifyTrace* trace) {
    // e<pi, h^{alpha x}> * e<g^v pi^-z, h^alpha> * e<F^-1, h> == 1
    G1Affine mid =
        g1_mul(vk.g, v).add(g1_mul(pi.witness, z.neg())).to_affine();
    count_equation(trace, 3, 2, 1);
    return {{pi.witness, vk.h_alpha_x}, {mid, vk.h_alpha}, {F.point.neg(), vk.h}};
}

bool rkzg_verify(const SrsVerifierKey& vk, const Commitment& F, const Fr& z, const Fr& v,
                 const OpeningProof& pi, VerifyTrace* trace) {
    PairingTerms terms = rkzg_equation(vk, F, z, v, pi, trace);
    return pairing_product_is_one(terms);
}

bool rkzg_verify(const Srs& srs, const Commitment& F, const Fr& z, const Fr& v,
                 const OpeningProof& pi, VerifyTrace* trace) {
    return rkzg_verify(srs.verifier_key(), F, z, v, pi, trace);
}

std::vector<Fr> batch_point_union(const std::vector<std::vector<Fr>>& point_sets) {
    std::vector<Fr> all;
    for (const auto& s : point_sets) all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end(),
              [](const Fr& a, const Fr& b) { return a.to_u256() < b.to_u256(); });
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

namespace {

bool contains(const std::vector<Fr>& set, const Fr& v) {
    return std::find(set.begin(), set.end(), v) != set.end();
}

// Z_{S \ S_i}[mu]
Fr vanishing_complement_at(const std::vector<Fr>& s_union, const std::vector<Fr>& s_i,
                           const Fr& mu, VerifyTrace* trace) {
    Fr acc = Fr::one();
    for (const Fr& z : s_union) {
        if (contains(s_i, z)) continue;
        acc *= mu - z;
        if (trace) trace->psi_field_muls += 1;
    }
    return acc;
}

}  // namespace

std::vector<LaurentPoly> rkzgb_make_gammas(const std::vector<LaurentPoly>& polys,
                                           const std::vector<std::vector<Fr>>& point_sets) {
    if (polys.size() != point_sets.size())
        throw std::invalid_argument("batch: polynomial/point-set count mismatch");
    std::vector<LaurentPoly> gammas;
    gammas.reserve(polys.size());
    for (size_t i = 0; i < polys.size(); ++i) {
        std::vector<std::pair<Fr, Fr>> pts;
        for (const Fr& z : point_sets[i]) pts.emplace_back(z, polys[i].eval(z));
        gammas.push_back(lagrange_interpolate(pts));
    }
    return gammas;
}

RkzgbSession rkzgb_open_begin(const Srs& srs, std::vector<LaurentPoly> polys,
                              std::vector<std::vector<Fr>> point_sets, const Fr& beta) {
    if (polys.empty() || polys.size() != point_sets.size())
        throw std::invalid_argument("batch: polynomial/point-set count mismatch");
    for (const auto& s : point_sets)
        if (s.empty()) throw std::invalid_argument("batch: empty evaluation point set");
    for (const auto& f : polys)
        if (!f.coeff(0).is_zero())
            throw NonzeroConstantError("batched polynomials must have zero constant terms");

    RkzgbSession ses;
    ses.s_union = batch_point_union(point_sets);
    ses.gammas = rkzgb_make_gammas(polys, point_sets);
    ses.beta = beta;
    LaurentPoly z_s = vanishing_poly(ses.s_union);

    // f_hat = sum_i beta^{i-1} Z_{S\S_i} (f_i - gamma_i)
    LaurentPoly f_hat;
    Fr beta_pow = Fr::one();
    for (size_t i = 0; i < polys.size(); ++i) {
        std::vector<Fr> complement;
        for (const Fr& z : ses.s_union)
            if (!contains(point_sets[i], z)) complement.push_back(z);
        LaurentPoly z_comp = complement.empty() ? LaurentPoly::constant(Fr::one())
                                                : vanishing_poly(complement);
        f_hat = f_hat + z_comp.mul(polys[i] - ses.gammas[i]).scale(beta_pow);
        beta_pow *= beta;
    }

    auto p = f_hat.divide_exact(z_s);
    if (!p) throw InconsistentClaimError("batch opening: claimed evaluations are wrong");
    ses.p = std::move(*p);
    ses.pi1 = commit_msm(srs, ses.p, false);
    ses.polys = std::move(polys);
    ses.point_sets = std::move(point_sets);
    return ses;
}

G1Affine rkzgb_open_finish(const Srs& srs, const RkzgbSession& ses, const Fr& mu) {
    if (contains(ses.s_union, mu))
        throw std::invalid_argument("batch: mu collides with an evaluation point");

    // f_hat_mu = sum_i beta^{i-1} Z_{S\S_i}[mu] (f_i - gamma_i[mu])
    LaurentPoly f_hat_mu;
    Fr beta_pow = Fr::one();
    for (size_t i = 0; i < ses.polys.size(); ++i) {
        Fr psi = vanishing_complement_at(ses.s_union, ses.point_sets[i], mu, nullptr) * beta_pow;
        f_hat_mu = f_hat_mu +
                   (ses.polys[i] - LaurentPoly::constant(ses.gammas[i].eval(mu))).scale(psi);
        beta_pow *= ses.beta;
    }

    // l_mu = f_hat_mu - Z_S[mu] p, divisible by (X - mu)
    Fr z_s_mu = Fr::one();
    for (const Fr& z : ses.s_union) z_s_mu *= mu - z;
    LaurentPoly l_mu = f_hat_mu - ses.p.scale(z_s_mu);
    if (!l_mu.eval(mu).is_zero())
        throw InconsistentClaimError("batch opening: linearization does not vanish at mu");
    LaurentPoly w_mu = l_mu.divide_by_linear(mu);
    return commit_msm(srs, w_mu, false);
}

BatchProof rkzgb_batch_open(const Srs& srs, const std::vector<LaurentPoly>& polys,
                            const std::vector<std::vector<Fr>>& point_sets, const Fr& beta,
                            const Fr& mu) {
    RkzgbSession ses = rkzgb_open_begin(srs, polys, point_sets, beta);
    G1Affine pi2 = rkzgb_open_finish(srs, ses, mu);
    return {ses.pi1, pi2};
}

std::optional<PairingTerms> rkzgb_batch_equation(const SrsVerifierKey& vk,
                                                 const std::vector<BatchOpeningClaim>& claims,
                                                 const Fr& beta, const Fr& mu,
                                                 const BatchProof& proof, VerifyTrace* trace) {
    if (claims.empty()) return std::nullopt;
    std::vector<std::vector<Fr>> point_sets;
    point_sets.reserve(claims.size());
    for (const auto& c : claims) {
        if (c.points.empty()) return std::nullopt;
        if (!c.gamma.is_zero() &&
            (c.gamma.min_exp() < 0 || c.gamma.max_exp() >= int64_t(c.points.size())))
            return std::nullopt;
        point_sets.push_back(c.points);
    }
    std::vector<Fr> s_union = batch_point_union(point_sets);
    if (contains(s_union, mu)) return std::nullopt;

    // Psi_i[mu], Theta[mu], Phi'[mu]
    G1 theta = G1::identity();
    Fr gamma_fold = Fr::zero();
    Fr beta_pow = Fr::one();
    for (const auto& c : claims) {
        Fr psi = vanishing_complement_at(s_union, c.points, mu, trace) * beta_pow;
        theta = theta.add(g1_mul(c.commitment.point, psi));
        gamma_fold += c.gamma.eval(mu) * psi;
        beta_pow *= beta;
        if (trace) {
            trace->theta_g1_muls += 1;
            trace->theta_g1_adds += 1;
            trace->psi_field_muls += 2;  // beta fold and gamma weighting
            trace->other_field_ops += c.gamma.term_count();
        }
    }

    Fr z_s_mu = Fr::one();
    for (const Fr& z : s_union) {
        z_s_mu *= mu - z;
        if (trace) trace->psi_field_muls += 1;
    }

    G1 phi = g1_mul(proof.pi2, mu)
                 .add(g1_mul(proof.pi1, z_s_mu.neg()))
                 .add(g1_mul(vk.g, gamma_fold.neg()));
    if (trace) {
        trace->phi_g1_muls += 3;
        trace->phi_g1_adds += 2;
        trace->pairing_equations += 1;
        trace->pairing_pairs += 3;
    }

    // e<pi2, h^{alpha x}> == e<Theta, h> * e<Phi', h^alpha>
    return PairingTerms{{proof.pi2.neg(), vk.h_alpha_x},
                        {theta.to_affine(), vk.h},
                        {phi.to_affine(), vk.h_alpha}};
}

bool rkzgb_batch_verify(const SrsVerifierKey& vk, const std::vector<BatchOpeningClaim>& claims,
                        const Fr& beta, const Fr& mu, const BatchProof& proof,
                        VerifyTrace* trace) {
    auto terms = rkzgb_batch_equation(vk, claims, beta, mu, proof, trace);
    if (!terms) return false;
    return pairing_product_is_one(*terms);
}

bool rkzgb_batch_verify(const Srs& srs, const std::vector<BatchOpeningClaim>& claims,
                        const Fr& beta, const Fr& mu, const BatchProof& proof,
                        VerifyTrace* trace) {
    return rkzgb_batch_verify(srs.verifier_key(), claims, beta, mu, proof, trace);
}

}  // namespace zkins
