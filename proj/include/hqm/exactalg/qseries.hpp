#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hqm/exactalg/rational.hpp"

namespace hqm {

/// Truncated power series c_0 + c_1 q + ... + c_N q^N over the rationals.
///
/// Binary operations on series of different orders truncate to the smaller
/// order. Products are exact below the truncation.
class QSeries {
public:
    /// Zero series of order N (N >= 1).
    explicit QSeries(std::int64_t order);
    /// Takes ownership of coefficients c_0..c_N; N = size - 1 must be >= 1.
    explicit QSeries(std::vector<Rational> coeffs);

    static QSeries one(std::int64_t order);
    /// The monomial c q^k, truncated away when k > order.
    static QSeries monomial(std::int64_t order, std::int64_t k, const Rational& c = 1);

    std::int64_t order() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const Rational& operator[](std::int64_t k) const;
    void set(std::int64_t k, Rational c);
    std::span<const Rational> coefficients() const { return coeffs_; }

    bool is_zero() const;
    QSeries truncated(std::int64_t order) const;

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const Rational& c, const QSeries& s);

    /// Exact coefficientwise equality up to the common order.
    friend bool operator==(const QSeries& a, const QSeries& b);

    std::string str() const;

private:
    std::vector<Rational> coeffs_;
};

/// U(q) = log prod_{k>=1} (1 - q^k), truncated at q^N, obtained by summing
/// the termwise expansions -sum_j q^{kj}/j. Throws InvalidTruncation for N < 1.
QSeries series_log_product(std::int64_t order);

/// q -> -q: multiplies the q^w coefficient by (-1)^w.
QSeries series_negate_variable(const QSeries& s);

/// exp(s) for a series with zero constant term (finite Taylor sum, since s
/// is nilpotent modulo q^{N+1}). Throws DomainError otherwise.
QSeries series_exp(const QSeries& s);

/// log(s) for a series with constant term 1. Throws DomainError otherwise.
QSeries series_log(const QSeries& s);

} // namespace hqm
