#include "zkins/scs.hpp"

namespace zkins {

void ConstraintSystem::add_linear(LinearConstraint lc) {
    auto check = [this](const std::vector<std::pair<uint32_t, Fr>>& vec) {
        for (const auto& [idx, val] : vec) {
            (void)val;
            if (idx < 1 || idx > n_mul_)
                throw std::out_of_range("linear constraint index outside [1, N]");
        }
    };
    check(lc.u);
    check(lc.v);
    check(lc.w);
    linear_.push_back(std::move(lc));
}

bool is_satisfied(const ConstraintSystem& cs, const Witness& wit) {
    uint32_t n = cs.n_mul();
    if (wit.a.size() != n || wit.b.size() != n || wit.c.size() != n)
        throw std::invalid_argument("witness length does not match constraint system");
    for (uint32_t i = 0; i < n; ++i)
        if (!(wit.a[i] * wit.b[i] == wit.c[i])) return false;
    for (const auto& lc : cs.linear()) {
        Fr acc = Fr::zero();
        for (const auto& [i, v] : lc.u) acc += wit.a[i - 1] * v;
        for (const auto& [i, v] : lc.v) acc += wit.b[i - 1] * v;
        for (const auto& [i, v] : lc.w) acc += wit.c[i - 1] * v;
        if (!(acc == lc.k)) return false;
    }
    return true;
}

RPoly build_r_poly(const Witness& wit) {
    RPoly r;
    r.n = uint32_t(wit.a.size());
    int64_t n = int64_t(r.n);
    for (int64_t i = 1; i <= n; ++i) {
        r.poly.add_to_coeff(i, wit.a[size_t(i - 1)]);
        r.poly.add_to_coeff(-i, wit.b[size_t(i - 1)]);
        r.poly.add_to_coeff(-i - n, wit.c[size_t(i - 1)]);
    }
    return r;
}

SKPolys::SKPolys(const ConstraintSystem& cs) : n_(cs.n_mul()), q_(cs.n_linear()) {
    u_hat_.resize(n_);
    v_hat_.resize(n_);
    w_hat_.resize(n_);

    for (uint32_t qi = 0; qi < q_; ++qi) {
        const LinearConstraint& lc = cs.linear()[qi];
        for (const auto& [i, val] : lc.u) u_hat_[i - 1].emplace_back(qi, val);
        for (const auto& [i, val] : lc.v) v_hat_[i - 1].emplace_back(qi, val);
        for (const auto& [i, val] : lc.w) w_hat_[i - 1].emplace_back(qi, val);
        k_hat_.add_to_coeff(int64_t(qi) + 1 + n_, lc.k);
    }

    // s[1,Y] = sum_q (sum_i u+v+w) Y^{q+N} - sum_i (Y^i + Y^-i)
    for (uint32_t qi = 0; qi < q_; ++qi) {
        const LinearConstraint& lc = cs.linear()[qi];
        Fr total = Fr::zero();
        for (const auto& [i, val] : lc.u) total += val;
        for (const auto& [i, val] : lc.v) total += val;
        for (const auto& [i, val] : lc.w) total += val;
        s_one_y_.add_to_coeff(int64_t(qi) + 1 + n_, total);
    }
    for (int64_t i = 1; i <= int64_t(n_); ++i) {
        s_one_y_.add_to_coeff(i, Fr::one().neg());
        s_one_y_.add_to_coeff(-i, Fr::one().neg());
    }
}

LaurentPoly SKPolys::s_at_y(const Fr& y) const {
    // y^(q+N) ladder shared across all slots
    std::vector<Fr> ypow_q(q_);
    Fr cur = y.pow(U256::from_u64(n_ + 1));
    for (uint32_t qi = 0; qi < q_; ++qi) {
        ypow_q[qi] = cur;
        cur *= y;
    }

    LaurentPoly s;
    Fr yi = Fr::one();
    Fr yinv = y.inverse();
    Fr yi_inv = Fr::one();
    for (int64_t i = 1; i <= int64_t(n_); ++i) {
        yi *= y;
        yi_inv *= yinv;
        Fr uc = Fr::zero(), vc = Fr::zero(), wc = Fr::zero();
        for (const auto& [qi, val] : u_hat_[size_t(i - 1)]) uc += val * ypow_q[qi];
        for (const auto& [qi, val] : v_hat_[size_t(i - 1)]) vc += val * ypow_q[qi];
        for (const auto& [qi, val] : w_hat_[size_t(i - 1)]) wc += val * ypow_q[qi];
        wc -= yi + yi_inv;
        s.add_to_coeff(-i, uc);
        s.add_to_coeff(i, vc);
        s.add_to_coeff(i + int64_t(n_), wc);
    }
    return s;
}

LaurentPoly compute_t(const RPoly& r, const SKPolys& sk, const Fr& y) {
    if (r.n != sk.n())
        throw std::invalid_argument("witness and system have different slot counts");
    LaurentPoly r_y = r.poly.scale_exponents(y);
    LaurentPoly t = r.poly.mul(r_y + sk.s_at_y(y));
    t.add_to_coeff(0, sk.k_hat().eval(y).neg());

    if (!t.coeff(0).is_zero())
        throw UnsatisfiedWitnessError("constraint polynomial is nonzero at y");
    int64_t n4 = 4 * int64_t(r.n), n3 = 3 * int64_t(r.n);
    if (!t.is_zero() && (t.min_exp() < -n4 || t.max_exp() > n3))
        throw DegreeOverflowError("t exceeds the [-4N, 3N] envelope");
    return t;
}

ConstraintSystem binary_check_system(const Fr& w) {
    ConstraintSystem cs;
    uint32_t s = cs.add_multiplication();
    cs.add_linear({{{s, Fr::one()}}, {{s, Fr::one().neg()}}, {}, Fr::zero()});  // a = b
    cs.add_linear({{{s, Fr::one()}}, {}, {{s, Fr::one().neg()}}, Fr::zero()});  // a = c
    cs.add_linear({{{s, Fr::one()}}, {}, {}, w});                               // a = w
    return cs;
}

Witness binary_check_witness(const Fr& w) { return {{w}, {w}, {w * w}}; }

ConstraintSystem range_check_system(const Fr& w, uint32_t k) {
    if (k == 0) throw std::invalid_argument("range width must be positive");
    ConstraintSystem cs;
    std::vector<uint32_t> slots(k);
    for (uint32_t i = 0; i < k; ++i) slots[i] = cs.add_multiplication();
    Fr pow2 = Fr::one();
    for (uint32_t i = 0; i < k; ++i) {
        // e_i lives in slot a and b; (e_i)^2 = 2^(i-1) e_i pins it to {0, 2^(i-1)}
        cs.add_linear({{{slots[i], Fr::one()}}, {{slots[i], Fr::one().neg()}}, {}, Fr::zero()});
        cs.add_linear({{{slots[i], pow2}}, {}, {{slots[i], Fr::one().neg()}}, Fr::zero()});
        pow2 = pow2.dbl();
    }
    LinearConstraint sum;
    for (uint32_t i = 0; i < k; ++i) sum.u.emplace_back(slots[i], Fr::one());
    sum.k = w;
    cs.add_linear(std::move(sum));
    return cs;
}

std::optional<Witness> range_check_witness(uint64_t w, uint32_t k) {
    if (k == 0 || (k < 64 && w >= (uint64_t(1) << k))) return std::nullopt;
    Witness wit;
    for (uint32_t i = 0; i < k; ++i) {
        Fr e = (w >> i) & 1 ? Fr::from_u64(uint64_t(1) << i) : Fr::zero();
        wit.a.push_back(e);
        wit.b.push_back(e);
        wit.c.push_back(e * e);
    }
    return wit;
}

}  // namespace zkins
