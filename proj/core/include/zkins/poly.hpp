#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "zkins/field_params.hpp"

namespace zkins {

/// Sparse Laurent polynomial over the scalar field. Canonical form: no
/// explicitly stored zero coefficients; equality is map equality.
class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return {}; }
    static LaurentPoly constant(const Fr& c);
    static LaurentPoly monomial(int64_t exp, const Fr& c);
    /// sum_{i} coeffs[i] X^(start + i)
    static LaurentPoly from_dense(int64_t start, const std::vector<Fr>& coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    size_t term_count() const { return coeffs_.size(); }
    int64_t min_exp() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    int64_t max_exp() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
    bool has_negative_exp() const { return !coeffs_.empty() && min_exp() < 0; }

    Fr coeff(int64_t exp) const;
    void set_coeff(int64_t exp, const Fr& v);  // erases on zero
    void add_to_coeff(int64_t exp, const Fr& v);

    const std::map<int64_t, Fr>& terms() const { return coeffs_; }

    bool operator==(const LaurentPoly&) const = default;

    LaurentPoly operator+(const LaurentPoly& g) const;
    LaurentPoly operator-(const LaurentPoly& g) const;
    LaurentPoly scale(const Fr& k) const;
    /// multiply by X^k
    LaurentPoly shift(int64_t k) const;
    /// coefficient-wise c_e -> c_e * y^e (substitutes X -> yX)
    LaurentPoly scale_exponents(const Fr& y) const;

    /// Product; throws std::out_of_range when a degree bound is supplied and
    /// the result would exceed it.
    LaurentPoly mul(const LaurentPoly& g,
                    std::optional<int64_t> degree_bound = std::nullopt) const;

    /// Evaluation at z. Throws std::domain_error at z = 0 when negative
    /// exponents are present.
    Fr eval(const Fr& z) const;

    /// Exact quotient (f - f(z)) / (X - z) per the factor lemma; z != 0.
    LaurentPoly divide_by_linear(const Fr& z) const;

    /// Exact division by an ordinary polynomial with nonzero constant term
    /// (vanishing polynomials). Returns nullopt when the division leaves a
    /// remainder.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  private:
    std::map<int64_t, Fr> coeffs_;
};

/// Degree < points.size() polynomial through the given points.
/// Throws std::invalid_argument on duplicate abscissae.
LaurentPoly lagrange_interpolate(const std::vector<std::pair<Fr, Fr>>& points);

/// Monic product of (X - z) over the set; set must be nonempty and distinct.
LaurentPoly vanishing_poly(const std::vector<Fr>& zs);

}  // namespace zkins
