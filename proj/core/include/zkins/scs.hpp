#pragma once

#include "zkins/errors.hpp"
#include "zkins/poly.hpp"

namespace zkins {

/// One multi-fan-in linear constraint  a.u + b.v + c.w = k  over the
/// multiplication slots. Vectors are sparse (1-based slot index, value).
struct LinearConstraint {
    std::vector<std::pair<uint32_t, Fr>> u, v, w;
    Fr k;
};

/// N two-fan-in multiplicative constraints a_i b_i = c_i plus Q linear
/// constraints. Slot indices are 1-based to keep the (XY)^i exponent
/// arithmetic literal.
class ConstraintSystem {
  public:
    uint32_t add_multiplication() { return ++n_mul_; }

    void add_linear(LinearConstraint lc);

    uint32_t n_mul() const { return n_mul_; }
    uint32_t n_linear() const { return uint32_t(linear_.size()); }
    const std::vector<LinearConstraint>& linear() const { return linear_; }

  private:
    uint32_t n_mul_ = 0;
    std::vector<LinearConstraint> linear_;
};

/// Assignment vectors; satisfaction means a_i b_i = c_i for every slot and
/// every linear constraint holds.
struct Witness {
    std::vector<Fr> a, b, c;

    static Witness zeros(uint32_t n) {
        return {std::vector<Fr>(n, Fr::zero()), std::vector<Fr>(n, Fr::zero()),
                std::vector<Fr>(n, Fr::zero())};
    }
};

bool is_satisfied(const ConstraintSystem& cs, const Witness& wit);

/// R(Z) with a_i at Z^i, b_i at Z^-i, c_i at Z^{-i-N}. r[X,Y] = R(XY) and
/// r[X,1] = R(X); the constant slot is structurally empty.
struct RPoly {
    LaurentPoly poly;
    uint32_t n = 0;
};

RPoly build_r_poly(const Witness& wit);

/// The public-input polynomial family: s[X,y] on demand, s[1,Y] and
/// k_hat[Y] precomputed. All three have zero constant terms.
class SKPolys {
  public:
    explicit SKPolys(const ConstraintSystem& cs);

    uint32_t n() const { return n_; }
    uint32_t q() const { return q_; }
    const LaurentPoly& s_one_y() const { return s_one_y_; }
    const LaurentPoly& k_hat() const { return k_hat_; }

    /// s[X, y] as a univariate Laurent polynomial in X.
    LaurentPoly s_at_y(const Fr& y) const;

    /// s[z, y] without materializing the polynomial.
    Fr s_value(const Fr& z, const Fr& y) const { return s_at_y(y).eval(z); }

  private:
    uint32_t n_ = 0, q_ = 0;
    // per-slot coefficient polynomials in Y^(q+N), stored sparse over q
    std::vector<std::vector<std::pair<uint32_t, Fr>>> u_hat_, v_hat_, w_hat_;
    LaurentPoly s_one_y_, k_hat_;
};

/// t[X, y] = r[X,1](r[X,y] + s[X,y]) - k_hat[y]. The exponent-0 coefficient
/// equals the constraint polynomial at y; for a satisfying witness it
/// vanishes and the result carries no constant term. Throws
/// UnsatisfiedWitnessError otherwise.
LaurentPoly compute_t(const RPoly& r, const SKPolys& sk, const Fr& y);

// worked systems ------------------------------------------------------------

/// Decides whether the public value w is binary (one multiplication, three
/// linear constraints).
ConstraintSystem binary_check_system(const Fr& w);
Witness binary_check_witness(const Fr& w);

/// Decides 0 <= w < 2^k via scaled bits e_i in {0, 2^(i-1)} (k
/// multiplications, 2k+1 linear constraints).
ConstraintSystem range_check_system(const Fr& w, uint32_t k);
std::optional<Witness> range_check_witness(uint64_t w, uint32_t k);

}  // namespace zkins
