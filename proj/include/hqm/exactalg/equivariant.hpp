#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hqm/exactalg/rational.hpp"

namespace hqm {

inline constexpr int kDefaultTDegreeCap = 2;
inline constexpr int kDefaultMinZExponent = -2;

/// Polynomial in the equivariant parameter t, truncated above a fixed
/// degree cap. Coefficients past the cap are dropped on every operation.
class TPolynomial {
public:
    explicit TPolynomial(int degree_cap = kDefaultTDegreeCap);
    TPolynomial(std::vector<Rational> coeffs, int degree_cap = kDefaultTDegreeCap);

    static TPolynomial constant(const Rational& c, int degree_cap = kDefaultTDegreeCap);
    static TPolynomial t(int degree_cap = kDefaultTDegreeCap);

    int degree_cap() const { return cap_; }
    /// Coefficient of t^k; zero outside the stored range.
    Rational coeff(int k) const;
    /// Highest k with a nonzero coefficient, or -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const { return degree() < 0; }

    TPolynomial operator-() const;
    friend TPolynomial operator+(const TPolynomial& a, const TPolynomial& b);
    friend TPolynomial operator-(const TPolynomial& a, const TPolynomial& b);
    friend TPolynomial operator*(const TPolynomial& a, const TPolynomial& b);
    friend TPolynomial operator*(const Rational& c, const TPolynomial& p);
    friend bool operator==(const TPolynomial& a, const TPolynomial& b);

    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_; // c_[k] is the t^k coefficient, size <= cap + 1
    int cap_;
};

/// Element s(t) + o(t) * omega of Q[t] * {1, omega}, omega = c_1(omega_C).
/// There is no omega^2 slot, so omega^2 = 0 holds by construction.
class EquivCoeff {
public:
    explicit EquivCoeff(int degree_cap = kDefaultTDegreeCap);
    EquivCoeff(TPolynomial scalar, TPolynomial omega);

    static EquivCoeff constant(const Rational& c, int degree_cap = kDefaultTDegreeCap);
    static EquivCoeff t(int degree_cap = kDefaultTDegreeCap);
    static EquivCoeff omega(int degree_cap = kDefaultTDegreeCap);

    const TPolynomial& scalar_part() const { return scalar_; }
    const TPolynomial& omega_part() const { return omega_; }
    bool is_zero() const { return scalar_.is_zero() && omega_.is_zero(); }

    EquivCoeff operator-() const;
    friend EquivCoeff operator+(const EquivCoeff& a, const EquivCoeff& b);
    friend EquivCoeff operator-(const EquivCoeff& a, const EquivCoeff& b);
    friend EquivCoeff operator*(const EquivCoeff& a, const EquivCoeff& b);
    friend EquivCoeff operator*(const Rational& c, const EquivCoeff& e);
    friend bool operator==(const EquivCoeff& a, const EquivCoeff& b);

    std::string str() const;

private:
    TPolynomial scalar_;
    TPolynomial omega_;
};

/// Degree on C: the omega coefficient times deg(omega_C) = 2g - 2. The
/// scalar part carries no point class and integrates to zero.
TPolynomial integrate_over_curve(const EquivCoeff& e, std::int64_t genus);

/// Finite Laurent series in z with EquivCoeff coefficients. Terms with
/// exponent below min_exponent are discarded on insertion and in products.
class ZLaurent {
public:
    explicit ZLaurent(int min_exponent = kDefaultMinZExponent);

    int min_exponent() const { return min_exp_; }
    void add_term(int exponent, const EquivCoeff& c);
    /// Zero EquivCoeff when the exponent is absent.
    EquivCoeff coeff(int exponent) const;
    const std::map<int, EquivCoeff>& terms() const { return terms_; }

    friend ZLaurent operator+(const ZLaurent& a, const ZLaurent& b);
    friend ZLaurent operator*(const ZLaurent& a, const ZLaurent& b);
    friend bool operator==(const ZLaurent& a, const ZLaurent& b);

    std::string str() const;

private:
    std::map<int, EquivCoeff> terms_;
    int min_exp_;
};

/// Res_{z=0}: the z^{-1} coefficient.
EquivCoeff laurent_residue(const ZLaurent& f);

/// sum_k (-m z)^{-k} c_k for the given Chern classes c_0, c_1, ..., keeping
/// only exponents >= min_exponent.
ZLaurent chern_series_in_inverse_z(std::int64_t m, std::span<const EquivCoeff> chern,
                                   int min_exponent = kDefaultMinZExponent);

} // namespace hqm
