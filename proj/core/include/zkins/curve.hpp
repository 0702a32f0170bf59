#pragma once

#include <span>
#include <vector>

#include "zkins/bytes.hpp"
#include "zkins/tower.hpp"

namespace zkins {

/// Jacobian-coordinate arithmetic on y^2 = x^3 + b (a = 0 throughout).
/// Curve supplies: Field, b(), generator affine coords, subgroup order info.
template <typename Curve>
struct AffinePoint {
    using F = typename Curve::Field;
    F x{}, y{};
    bool infinity = true;

    static AffinePoint identity() { return {}; }
    bool is_identity() const { return infinity; }

    bool operator==(const AffinePoint& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }

    bool is_on_curve() const {
        if (infinity) return true;
        return y * y == x * x * x + Curve::b();
    }

    AffinePoint neg() const {
        if (infinity) return *this;
        return {x, y.neg(), false};
    }
};

template <typename Curve>
struct JacobianPoint {
    using F = typename Curve::Field;
    using Affine = AffinePoint<Curve>;
    F X{}, Y{}, Z{};  // Z == 0 encodes the identity

    static JacobianPoint identity() {
        return {F::zero(), Curve::field_one(), F::zero()};
    }

    static JacobianPoint from_affine(const Affine& a) {
        if (a.infinity) return identity();
        return {a.x, a.y, Curve::field_one()};
    }

    bool is_identity() const { return Z.is_zero(); }

    JacobianPoint dbl() const {
        if (is_identity()) return *this;
        F A = X.square();
        F B = Y.square();
        F C = B.square();
        F t = (X + B).square() - A - C;
        F D = t + t;
        F E = A + A + A;
        F Fv = E.square();
        F X3 = Fv - (D + D);
        F eight_c = C.dbl().dbl().dbl();
        F Y3 = E * (D - X3) - eight_c;
        F Z3 = (Y * Z).dbl();
        return {X3, Y3, Z3};
    }

    JacobianPoint add(const JacobianPoint& o) const {
        if (is_identity()) return o;
        if (o.is_identity()) return *this;
        F Z1Z1 = Z.square();
        F Z2Z2 = o.Z.square();
        F U1 = X * Z2Z2;
        F U2 = o.X * Z1Z1;
        F S1 = Y * o.Z * Z2Z2;
        F S2 = o.Y * Z * Z1Z1;
        if (U1 == U2) {
            if (S1 == S2) return dbl();
            return identity();
        }
        F H = U2 - U1;
        F I = (H + H).square();
        F J = H * I;
        F r = (S2 - S1).dbl();
        F V = U1 * I;
        F X3 = r.square() - J - (V + V);
        F S1J = S1 * J;
        F Y3 = r * (V - X3) - (S1J + S1J);
        F Z3 = ((Z + o.Z).square() - Z1Z1 - Z2Z2) * H;
        return {X3, Y3, Z3};
    }

    JacobianPoint add_mixed(const Affine& o) const {
        if (o.infinity) return *this;
        if (is_identity()) return from_affine(o);
        F Z1Z1 = Z.square();
        F U2 = o.x * Z1Z1;
        F S2 = o.y * Z * Z1Z1;
        if (X == U2) {
            if (Y == S2) return dbl();
            return identity();
        }
        F H = U2 - X;
        F HH = H.square();
        F I = HH.dbl().dbl();
        F J = H * I;
        F r = (S2 - Y).dbl();
        F V = X * I;
        F X3 = r.square() - J - (V + V);
        F YJ = Y * J;
        F Y3 = r * (V - X3) - (YJ + YJ);
        F Z3 = (Z + H).square() - Z1Z1 - HH;
        return {X3, Y3, Z3};
    }

    JacobianPoint neg() const { return {X, Y.neg(), Z}; }

    JacobianPoint scalar_mul(const U256& k) const {
        JacobianPoint acc = identity();
        for (int i = int(k.bit_length()) - 1; i >= 0; --i) {
            acc = acc.dbl();
            if (k.bit(unsigned(i))) acc = acc.add(*this);
        }
        return acc;
    }

    Affine to_affine() const {
        if (is_identity()) return Affine::identity();
        F zinv = Z.inverse();
        F zinv2 = zinv.square();
        return {X * zinv2, Y * zinv2 * zinv, false};
    }
};

/// Shared inversion: converts a batch of Jacobian points to affine with one
/// field inversion (Montgomery's trick).
template <typename Curve>
std::vector<AffinePoint<Curve>> batch_to_affine(
    const std::vector<JacobianPoint<Curve>>& pts) {
    using F = typename Curve::Field;
    std::vector<AffinePoint<Curve>> out(pts.size());
    std::vector<F> prefix(pts.size());
    F acc = Curve::field_one();
    for (size_t i = 0; i < pts.size(); ++i) {
        prefix[i] = acc;
        if (!pts[i].is_identity()) acc = acc * pts[i].Z;
    }
    F inv = acc.inverse();
    for (size_t i = pts.size(); i-- > 0;) {
        if (pts[i].is_identity()) continue;
        F zinv = inv * prefix[i];
        inv = inv * pts[i].Z;
        F zinv2 = zinv.square();
        out[i] = {pts[i].X * zinv2, pts[i].Y * zinv2 * zinv, false};
    }
    return out;
}

// ---------------------------------------------------------------- instances

struct G1Curve {
    using Field = Fq;
    static Field field_one() { return Fq::one(); }
    static const Field& b();
    static const AffinePoint<G1Curve>& generator_affine();
};

struct G2Curve {
    using Field = Fq2;
    static Field field_one() { return Fq2::one(); }
    static const Field& b();  // 3 / xi
    static const AffinePoint<G2Curve>& generator_affine();
};

struct SecpCurve {
    using Field = SecpFp;
    static Field field_one() { return SecpFp::one(); }
    static const Field& b();
    static const AffinePoint<SecpCurve>& generator_affine();
};

using G1Affine = AffinePoint<G1Curve>;
using G1 = JacobianPoint<G1Curve>;
using G2Affine = AffinePoint<G2Curve>;
using G2 = JacobianPoint<G2Curve>;
using SecpAffine = AffinePoint<SecpCurve>;
using SecpPoint = JacobianPoint<SecpCurve>;

G1 g1_generator();
G2 g2_generator();

G1 g1_mul(const G1Affine& p, const Fr& k);
G2 g2_mul(const G2Affine& p, const Fr& k);

/// Multi-scalar multiplication (Pippenger). Lengths must match.
G1 g1_msm(std::span<const G1Affine> bases, std::span<const Fr> scalars);

/// Subgroup membership. G1 has cofactor 1, so on-curve suffices; G2 points
/// must additionally have order r.
bool g1_in_subgroup(const G1Affine& p);
bool g2_in_subgroup(const G2Affine& p);

// 64-byte (G1) / 128-byte (G2) big-endian coordinate serialization.
// The identity is all zeroes. Deserialization enforces curve and subgroup
// membership and throws std::invalid_argument otherwise.
Bytes g1_to_bytes(const G1Affine& p);
G1Affine g1_from_bytes(const uint8_t* data, size_t len);
Bytes g2_to_bytes(const G2Affine& p);
G2Affine g2_from_bytes(const uint8_t* data, size_t len);

/// Curve configuration surfaced to file formats and the CLI.
struct CurveParams {
    std::string id;       // "bn254"
    U256 group_order;     // r
    U256 base_field;      // q
    G1Affine g;
    G2Affine h;
};
const CurveParams& bn254_params();

}  // namespace zkins
