#include "zkins/pairing.hpp"

namespace zkins {

namespace {

// BN parameter of alt_bn128 and the ate loop count 6z+2.
const U256 kBnZ = U256::from_u64(0x44e992b44a6909f1ull);
const U256 kAteLoop{0x9d797039be763ba8ull, 0x1ull, 0, 0};

U256 divexact_small(const U256& v, uint64_t d) {
    U256 out;
    unsigned __int128 rem = 0;
    for (int i = 3; i >= 0; --i) {
        unsigned __int128 cur = (rem << 64) | v.limb[i];
        out.limb[i] = uint64_t(cur / d);
        rem = cur % d;
    }
    return out;
}

struct PairingConstants {
    Fq2 gamma6_1;   // xi^((q-1)/3), Fq6 Frobenius on the v coefficient
    Fq2 gamma6_2;   // xi^(2(q-1)/3)
    Fq2 gamma12;    // xi^((q-1)/6), Fq12 Frobenius on the w part
    Fq2 twist_x;    // xi^((q-1)/3)   G2 Frobenius x-coefficient
    Fq2 twist_y;    // xi^((q-1)/2)   G2 Frobenius y-coefficient
    Fq2 twist_x_sq; // xi^((q^2-1)/3) in Fq
};

const PairingConstants& consts() {
    static const PairingConstants c = [] {
        PairingConstants pc;
        U256 qm1;
        U256::sub(qm1, Bn254FqParams::kModulus, U256::from_u64(1));
        U256 sixth = divexact_small(qm1, 6);
        Fq2 base = Fq2::xi().pow(sixth);
        pc.gamma12 = base;
        pc.gamma6_1 = base.square();
        pc.gamma6_2 = pc.gamma6_1.square();
        pc.twist_x = pc.gamma6_1;
        pc.twist_y = base * base.square();  // xi^((q-1)/2)
        pc.twist_x_sq = pc.twist_x * pc.twist_x.conjugate();
        return pc;
    }();
    return c;
}

Fq6 frobenius6(const Fq6& a) {
    const auto& pc = consts();
    return {a.c0.conjugate(), a.c1.conjugate() * pc.gamma6_1, a.c2.conjugate() * pc.gamma6_2};
}

Fq12 frobenius(const Fq12& f) {
    const auto& pc = consts();
    return {frobenius6(f.c0), frobenius6(f.c1).mul_fq2(pc.gamma12)};
}

Fq12 frobenius(const Fq12& f, int n) {
    Fq12 r = f;
    for (int i = 0; i < n; ++i) r = frobenius(r);
    return r;
}

struct MillerPoint {
    Fq2 x, y;
};

// tangent line at t evaluated at p; t <- 2t
void dbl_step(MillerPoint& t, const G1Affine& p, Fq12& f) {
    Fq2 lam = t.x.square().mul_fq(Fq::from_u64(3)) * (t.y + t.y).inverse();
    Fq2 c = t.y - lam * t.x;
    Fq2 x3 = lam.square() - t.x - t.x;
    Fq2 y3 = lam * (t.x - x3) - t.y;
    t = {x3, y3};
    f = f.mul_by_line({p.y.neg(), Fq::zero()}, lam.mul_fq(p.x), c);
}

// chord through t and q evaluated at p; t <- t + q
void add_step(MillerPoint& t, const MillerPoint& q, const G1Affine& p, Fq12& f) {
    if (t.x == q.x) {
        if (t.y == q.y) {
            dbl_step(t, p, f);
            return;
        }
        // vertical line x - x_t, evaluated at p: (p.x - x_t v-part)
        Fq12 line = Fq12::zero();
        line.c0.c0 = {p.x, Fq::zero()};
        line.c0.c1 = t.x.neg();
        f = f * line;
        t = {Fq2::zero(), Fq2::zero()};  // point at infinity; callers avoid this path
        return;
    }
    Fq2 lam = (q.y - t.y) * (q.x - t.x).inverse();
    Fq2 c = t.y - lam * t.x;
    Fq2 x3 = lam.square() - t.x - q.x;
    Fq2 y3 = lam * (t.x - x3) - t.y;
    t = {x3, y3};
    f = f.mul_by_line({p.y.neg(), Fq::zero()}, lam.mul_fq(p.x), c);
}

}  // namespace

Fq12 miller_loop(const G1Affine& p, const G2Affine& q) {
    if (p.is_identity() || q.is_identity()) return Fq12::one();
    const auto& pc = consts();

    MillerPoint t{q.x, q.y};
    Fq12 f = Fq12::one();
    for (int i = int(kAteLoop.bit_length()) - 2; i >= 0; --i) {
        f = f.square();
        dbl_step(t, p, f);
        if (kAteLoop.bit(unsigned(i))) add_step(t, {q.x, q.y}, p, f);
    }

    // frobenius twist points: q1 = pi(q), q2 = -pi^2(q)
    MillerPoint q1{q.x.conjugate() * pc.twist_x, q.y.conjugate() * pc.twist_y};
    MillerPoint q2{q.x * pc.twist_x_sq, q.y};
    add_step(t, q1, p, f);
    add_step(t, q2, p, f);
    return f;
}

namespace {

Fq12 pow_u256(const Fq12& f, const U256& e) {
    Fq12 acc = Fq12::one();
    for (int i = int(e.bit_length()) - 1; i >= 0; --i) {
        acc = acc.square();
        if (e.bit(unsigned(i))) acc = acc * f;
    }
    return acc;
}

Fq12 pow_small(const Fq12& f, uint64_t e) { return pow_u256(f, U256::from_u64(e)); }

}  // namespace

Gt final_exponentiation(const Fq12& f) {
    if (f.is_zero()) return Fq12::zero();  // malformed input; never on honest path
    // easy part: f^((q^6-1)(q^2+1))
    Fq12 t = f.conjugate() * f.inverse();
    t = frobenius(t, 2) * t;

    // hard part f^((q^4-q^2+1)/r) via the base-q digits
    //   lam0 = -(36 z^3 + 30 z^2 + 18 z + 2)
    //   lam1 = -(36 z^3 + 18 z^2 + 12 z) + 1
    //   lam2 = 6 z^2 + 1
    //   lam3 = 1
    Fq12 fz = pow_u256(t, kBnZ);
    Fq12 fz2 = pow_u256(fz, kBnZ);
    Fq12 fz3 = pow_u256(fz2, kBnZ);

    Fq12 a36 = pow_small(fz3, 36);
    Fq12 x0 = a36 * pow_small(fz2, 30) * pow_small(fz, 18) * t.square();
    Fq12 x1 = (a36 * pow_small(fz2, 18) * pow_small(fz, 12)).conjugate() * t;
    Fq12 x2 = pow_small(fz2, 6) * t;

    return x0.conjugate() * frobenius(x1, 1) * frobenius(x2, 2) * frobenius(t, 3);
}

Gt pairing(const G1Affine& p, const G2Affine& q) {
    return final_exponentiation(miller_loop(p, q));
}

Gt multi_pairing(std::span<const std::pair<G1Affine, G2Affine>> pairs) {
    Fq12 acc = Fq12::one();
    for (const auto& [p, q] : pairs) acc = acc * miller_loop(p, q);
    return final_exponentiation(acc);
}

bool pairing_product_is_one(std::span<const std::pair<G1Affine, G2Affine>> pairs) {
    return multi_pairing(pairs).is_one();
}

Bytes gt_to_bytes(const Gt& t) {
    Bytes out;
    out.reserve(384);
    const Fq2* parts[6] = {&t.c0.c0, &t.c0.c1, &t.c0.c2, &t.c1.c0, &t.c1.c1, &t.c1.c2};
    for (const Fq2* v : parts) {
        auto b0 = v->c0.to_bytes_be();
        auto b1 = v->c1.to_bytes_be();
        out.insert(out.end(), b0.begin(), b0.end());
        out.insert(out.end(), b1.begin(), b1.end());
    }
    return out;
}

}  // namespace zkins
