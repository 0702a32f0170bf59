#include "zkins/poly.hpp"

#include <stdexcept>

namespace zkins {

LaurentPoly LaurentPoly::constant(const Fr& c) { return monomial(0, c); }

LaurentPoly LaurentPoly::monomial(int64_t exp, const Fr& c) {
    LaurentPoly f;
    if (!c.is_zero()) f.coeffs_[exp] = c;
    return f;
}

LaurentPoly LaurentPoly::from_dense(int64_t start, const std::vector<Fr>& coeffs) {
    LaurentPoly f;
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) f.coeffs_[start + int64_t(i)] = coeffs[i];
    return f;
}

Fr LaurentPoly::coeff(int64_t exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Fr::zero() : it->second;
}

void LaurentPoly::set_coeff(int64_t exp, const Fr& v) {
    if (v.is_zero())
        coeffs_.erase(exp);
    else
        coeffs_[exp] = v;
}

void LaurentPoly::add_to_coeff(int64_t exp, const Fr& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(exp, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& g) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : g.coeffs_) r.add_to_coeff(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& g) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : g.coeffs_) r.add_to_coeff(e, c.neg());
    return r;
}

LaurentPoly LaurentPoly::scale(const Fr& k) const {
    LaurentPoly r;
    if (k.is_zero()) return r;
    for (const auto& [e, c] : coeffs_) {
        Fr v = c * k;
        if (!v.is_zero()) r.coeffs_[e] = v;
    }
    return r;
}

LaurentPoly LaurentPoly::shift(int64_t k) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
    return r;
}

LaurentPoly LaurentPoly::scale_exponents(const Fr& y) const {
    if (coeffs_.empty()) return {};
    if (y.is_zero()) throw std::domain_error("exponent scaling by zero");
    LaurentPoly r;
    int64_t lo = min_exp();
    Fr ypow = y.pow(U256::from_u64(uint64_t(lo < 0 ? -lo : lo)));
    if (lo < 0) ypow = ypow.inverse();
    int64_t cur = lo;
    for (const auto& [e, c] : coeffs_) {
        while (cur < e) {
            ypow *= y;
            ++cur;
        }
        Fr v = c * ypow;
        if (!v.is_zero()) r.coeffs_[e] = v;
    }
    return r;
}

LaurentPoly LaurentPoly::mul(const LaurentPoly& g, std::optional<int64_t> degree_bound) const {
    LaurentPoly r;
    if (coeffs_.empty() || g.coeffs_.empty()) return r;
    int64_t lo = min_exp() + g.min_exp();
    int64_t hi = max_exp() + g.max_exp();
    if (degree_bound && (hi > *degree_bound || lo < -*degree_bound))
        throw std::out_of_range("polynomial product exceeds degree bound");
    // dense accumulation over the combined span
    std::vector<Fr> acc(size_t(hi - lo + 1), Fr::zero());
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : g.coeffs_) acc[size_t(e1 + e2 - lo)] += c1 * c2;
    for (size_t i = 0; i < acc.size(); ++i)
        if (!acc[i].is_zero()) r.coeffs_[lo + int64_t(i)] = acc[i];
    return r;
}

Fr LaurentPoly::eval(const Fr& z) const {
    if (has_negative_exp() && z.is_zero())
        throw std::domain_error("Laurent polynomial undefined at zero");

    // non-negative exponents: descending Horner
    Fr pos = Fr::zero();
    bool pos_started = false;
    int64_t prev = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend() && it->first >= 0; ++it) {
        if (!pos_started) {
            pos = it->second;
            prev = it->first;
            pos_started = true;
        } else {
            for (int64_t k = prev; k > it->first; --k) pos *= z;
            pos += it->second;
            prev = it->first;
        }
    }
    if (pos_started)
        for (int64_t k = prev; k > 0; --k) pos *= z;

    // negative exponents: Horner in z^-1, most negative term first
    Fr neg = Fr::zero();
    if (has_negative_exp()) {
        Fr zi = z.inverse();
        bool started = false;
        int64_t prev_pow = 0;
        for (auto it = coeffs_.begin(); it != coeffs_.end() && it->first < 0; ++it) {
            int64_t power = -it->first;
            if (!started) {
                neg = it->second;
                prev_pow = power;
                started = true;
            } else {
                for (int64_t k = prev_pow; k > power; --k) neg *= zi;
                neg += it->second;
                prev_pow = power;
            }
        }
        if (started)
            for (int64_t k = prev_pow; k > 0; --k) neg *= zi;
    }
    return pos + neg;
}

LaurentPoly LaurentPoly::divide_by_linear(const Fr& z) const {
    if (z.is_zero()) throw std::domain_error("division point must be nonzero");
    LaurentPoly q;

    // non-negative part: synthetic division of (P - P(z)) by (X - z)
    {
        int64_t deg = -1;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            if (it->first >= 0) {
                deg = it->first;
                break;
            }
        }
        if (deg >= 0) {
            std::vector<Fr> dense(size_t(deg) + 1, Fr::zero());
            for (const auto& [e, c] : coeffs_)
                if (e >= 0) dense[size_t(e)] = c;
            Fr carry = Fr::zero();
            for (int64_t i = deg; i >= 1; --i) {
                carry = dense[size_t(i)] + carry * z;
                if (!carry.is_zero()) q.coeffs_[i - 1] = carry;
            }
        }
    }

    // negative part M(X) = m'(Y) with Y = 1/X:
    //   (M - M(z)) / (X - z) = -(1/(Xz)) * q'(1/X),
    // q' the synthetic quotient of m' at 1/z.
    if (has_negative_exp()) {
        Fr zinv = z.inverse();
        int64_t deg = -min_exp();
        std::vector<Fr> dense(size_t(deg) + 1, Fr::zero());
        for (const auto& [e, c] : coeffs_)
            if (e < 0) dense[size_t(-e)] = c;
        Fr carry = Fr::zero();
        Fr neg_zinv = zinv.neg();
        for (int64_t i = deg; i >= 1; --i) {
            carry = dense[size_t(i)] + carry * zinv;
            // q' coefficient of Y^(i-1) contributes to X^-(i-1) * (-1/(Xz))
            if (!carry.is_zero()) q.add_to_coeff(-i, carry * neg_zinv);
        }
    }
    return q;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    if (divisor.min_exp() < 0 || divisor.coeff(0).is_zero())
        throw std::invalid_argument("divisor must be ordinary with nonzero constant term");
    if (is_zero()) return LaurentPoly::zero();

    // shift the numerator into an ordinary polynomial, divide, shift back
    int64_t shift_by = std::min<int64_t>(min_exp(), 0);
    int64_t num_deg = max_exp() - shift_by;
    int64_t div_deg = divisor.max_exp();
    if (num_deg < div_deg) return std::nullopt;

    std::vector<Fr> num(size_t(num_deg) + 1, Fr::zero());
    for (const auto& [e, c] : coeffs_) num[size_t(e - shift_by)] = c;
    std::vector<Fr> div(size_t(div_deg) + 1, Fr::zero());
    for (const auto& [e, c] : divisor.terms()) div[size_t(e)] = c;

    Fr lead_inv = div[size_t(div_deg)].inverse();
    std::vector<Fr> quot(size_t(num_deg - div_deg) + 1, Fr::zero());
    for (int64_t i = num_deg; i >= div_deg; --i) {
        Fr q = num[size_t(i)] * lead_inv;
        if (q.is_zero()) continue;
        quot[size_t(i - div_deg)] = q;
        for (int64_t j = 0; j <= div_deg; ++j)
            num[size_t(i - div_deg + j)] -= q * div[size_t(j)];
    }
    for (int64_t j = 0; j < div_deg; ++j)
        if (!num[size_t(j)].is_zero()) return std::nullopt;

    return LaurentPoly::from_dense(shift_by, quot);
}

LaurentPoly lagrange_interpolate(const std::vector<std::pair<Fr, Fr>>& points) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("duplicate abscissa in interpolation");

    LaurentPoly acc;
    for (size_t i = 0; i < points.size(); ++i) {
        LaurentPoly basis = LaurentPoly::constant(Fr::one());
        Fr denom = Fr::one();
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            LaurentPoly lin;
            lin.set_coeff(1, Fr::one());
            lin.set_coeff(0, points[j].first.neg());
            basis = basis.mul(lin);
            denom *= points[i].first - points[j].first;
        }
        acc = acc + basis.scale(points[i].second * denom.inverse());
    }
    return acc;
}

LaurentPoly vanishing_poly(const std::vector<Fr>& zs) {
    if (zs.empty()) throw std::invalid_argument("vanishing set must be nonempty");
    for (size_t i = 0; i < zs.size(); ++i)
        for (size_t j = i + 1; j < zs.size(); ++j)
            if (zs[i] == zs[j]) throw std::invalid_argument("vanishing set must be distinct");
    LaurentPoly acc = LaurentPoly::constant(Fr::one());
    for (const Fr& z : zs) {
        LaurentPoly lin;
        lin.set_coeff(1, Fr::one());
        lin.set_coeff(0, z.neg());
        acc = acc.mul(lin);
    }
    return acc;
}

}  // namespace zkins
