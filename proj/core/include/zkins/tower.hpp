#pragma once

#include "zkins/field_params.hpp"

// Extension tower for alt_bn128 pairings:
//   Fq2  = Fq[u]  / (u^2 + 1)
//   Fq6  = Fq2[v] / (v^3 - xi),  xi = 9 + u
//   Fq12 = Fq6[w] / (w^2 - v)

namespace zkins {

struct Fq2 {
    Fq c0, c1;

    static Fq2 zero() { return {Fq::zero(), Fq::zero()}; }
    static Fq2 one() { return {Fq::one(), Fq::zero()}; }
    static Fq2 xi() { return {Fq::from_u64(9), Fq::one()}; }

    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    bool operator==(const Fq2&) const = default;

    Fq2 operator+(const Fq2& o) const { return {c0 + o.c0, c1 + o.c1}; }
    Fq2 operator-(const Fq2& o) const { return {c0 - o.c0, c1 - o.c1}; }
    Fq2 neg() const { return {c0.neg(), c1.neg()}; }
    Fq2 dbl() const { return *this + *this; }

    Fq2 operator*(const Fq2& o) const {
        // Karatsuba
        Fq a = c0 * o.c0;
        Fq b = c1 * o.c1;
        Fq s = (c0 + c1) * (o.c0 + o.c1);
        return {a - b, s - a - b};
    }

    Fq2 mul_fq(const Fq& k) const { return {c0 * k, c1 * k}; }

    Fq2 square() const {
        Fq s = c0 + c1;
        Fq d = c0 - c1;
        Fq p = c0 * c1;
        return {s * d, p + p};
    }

    Fq2 conjugate() const { return {c0, c1.neg()}; }

    Fq2 inverse() const {
        Fq norm = c0 * c0 + c1 * c1;
        Fq n = norm.inverse();
        return {c0 * n, (c1 * n).neg()};
    }

    Fq2 pow(const U256& e) const {
        Fq2 acc = one();
        for (int i = int(e.bit_length()) - 1; i >= 0; --i) {
            acc = acc.square();
            if (e.bit(unsigned(i))) acc = acc * *this;
        }
        return acc;
    }
};

// (9 + u) * a, used by the v^3 = xi reduction
inline Fq2 mul_by_xi(const Fq2& a) {
    Fq nine_c0 = a.c0.dbl().dbl().dbl() + a.c0;
    Fq nine_c1 = a.c1.dbl().dbl().dbl() + a.c1;
    return {nine_c0 - a.c1, nine_c1 + a.c0};
}

struct Fq6 {
    Fq2 c0, c1, c2;  // c0 + c1 v + c2 v^2

    static Fq6 zero() { return {Fq2::zero(), Fq2::zero(), Fq2::zero()}; }
    static Fq6 one() { return {Fq2::one(), Fq2::zero(), Fq2::zero()}; }

    bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
    bool operator==(const Fq6&) const = default;

    Fq6 operator+(const Fq6& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2}; }
    Fq6 operator-(const Fq6& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
    Fq6 neg() const { return {c0.neg(), c1.neg(), c2.neg()}; }

    Fq6 operator*(const Fq6& o) const {
        // Toom/Karatsuba 3-way (CH-SQR3 style)
        Fq2 a = c0 * o.c0;
        Fq2 b = c1 * o.c1;
        Fq2 c = c2 * o.c2;
        Fq2 t0 = (c1 + c2) * (o.c1 + o.c2) - b - c;
        Fq2 t1 = (c0 + c1) * (o.c0 + o.c1) - a - b;
        Fq2 t2 = (c0 + c2) * (o.c0 + o.c2) - a - c;
        return {a + mul_by_xi(t0), t1 + mul_by_xi(c), t2 + b};
    }

    Fq6 square() const { return *this * *this; }

    // multiply by v
    Fq6 mul_by_v() const { return {mul_by_xi(c2), c0, c1}; }

    Fq6 mul_fq2(const Fq2& k) const { return {c0 * k, c1 * k, c2 * k}; }

    Fq6 inverse() const {
        // Algorithm xi-based (Guide to Pairing-Based Cryptography, alg. 5.23)
        Fq2 a = c0.square() - mul_by_xi(c1 * c2);
        Fq2 b = mul_by_xi(c2.square()) - c0 * c1;
        Fq2 c = c1.square() - c0 * c2;
        Fq2 t = mul_by_xi((c1 * c) + (c2 * b)) + c0 * a;
        Fq2 tinv = t.inverse();
        return {a * tinv, b * tinv, c * tinv};
    }
};

struct Fq12 {
    Fq6 c0, c1;  // c0 + c1 w

    static Fq12 zero() { return {Fq6::zero(), Fq6::zero()}; }
    static Fq12 one() { return {Fq6::one(), Fq6::zero()}; }

    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    bool is_one() const { return *this == one(); }
    bool operator==(const Fq12&) const = default;

    Fq12 operator+(const Fq12& o) const { return {c0 + o.c0, c1 + o.c1}; }
    Fq12 operator-(const Fq12& o) const { return {c0 - o.c0, c1 - o.c1}; }

    Fq12 operator*(const Fq12& o) const {
        Fq6 a = c0 * o.c0;
        Fq6 b = c1 * o.c1;
        Fq6 s = (c0 + c1) * (o.c0 + o.c1);
        return {a + b.mul_by_v(), s - a - b};
    }

    Fq12 square() const {
        Fq6 a = c0 * c1;
        Fq6 t = (c0 + c1) * (c0 + c1.mul_by_v());
        return {t - a - a.mul_by_v(), a + a};
    }

    /// Conjugation over Fq6; equals inversion on the unitary subgroup.
    Fq12 conjugate() const { return {c0, c1.neg()}; }

    Fq12 inverse() const {
        Fq6 t = (c0.square() - c1.square().mul_by_v()).inverse();
        return {c0 * t, (c1 * t).neg()};
    }

    Fq12 pow(const U256& e) const {
        Fq12 acc = one();
        for (int i = int(e.bit_length()) - 1; i >= 0; --i) {
            acc = acc.square();
            if (e.bit(unsigned(i))) acc = acc * *this;
        }
        return acc;
    }

    /// Sparse multiplication by a Miller-loop line a + (b + c v) w.
    Fq12 mul_by_line(const Fq2& a, const Fq2& b, const Fq2& c) const {
        Fq6 l1{b, c, Fq2::zero()};
        Fq6 t0 = c0.mul_fq2(a);
        Fq6 t1 = c1 * l1;
        Fq6 t2 = c1.mul_fq2(a);
        Fq6 t3 = c0 * l1;
        return {t0 + t1.mul_by_v(), t2 + t3};
    }
};

/// Target-group element (unitary subgroup of Fq12).
using Gt = Fq12;

}  // namespace zkins
