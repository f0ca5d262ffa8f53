#include "hqm/exactalg/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "hqm/error.hpp"

namespace hqm {

namespace {

void check_order(std::int64_t order)
{
    if (order < 1)
        throw InvalidTruncation("truncation order must be >= 1, got " + std::to_string(order));
}

} // namespace

QSeries::QSeries(std::int64_t order)
{
    check_order(order);
    coeffs_.assign(static_cast<std::size_t>(order + 1), Rational(0));
}

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    check_order(static_cast<std::int64_t>(coeffs_.size()) - 1);
}

QSeries QSeries::one(std::int64_t order)
{
    QSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

QSeries QSeries::monomial(std::int64_t order, std::int64_t k, const Rational& c)
{
    QSeries s(order);
    if (k < 0)
        throw DomainError("negative exponent in power series");
    if (k <= order)
        s.coeffs_[static_cast<std::size_t>(k)] = c;
    return s;
}

const Rational& QSeries::operator[](std::int64_t k) const
{
    if (k < 0 || k > order())
        throw DomainError("coefficient index " + std::to_string(k) + " outside 0.." + std::to_string(order()));
    return coeffs_[static_cast<std::size_t>(k)];
}

void QSeries::set(std::int64_t k, Rational c)
{
    if (k < 0 || k > order())
        throw DomainError("coefficient index " + std::to_string(k) + " outside 0.." + std::to_string(order()));
    coeffs_[static_cast<std::size_t>(k)] = std::move(c);
}

bool QSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

QSeries QSeries::truncated(std::int64_t order) const
{
    check_order(order);
    if (order > this->order())
        throw InvalidTruncation("cannot extend a series beyond its truncation order");
    return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

QSeries QSeries::operator-() const
{
    QSeries r(*this);
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

QSeries operator+(const QSeries& a, const QSeries& b)
{
    QSeries r(std::min(a.order(), b.order()));
    for (std::int64_t k = 0; k <= r.order(); ++k)
        r.coeffs_[k] = a[k] + b[k];
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b)
{
    QSeries r(std::min(a.order(), b.order()));
    const std::int64_t n = r.order();
    for (std::int64_t i = 0; i <= n; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::int64_t j = 0; i + j <= n; ++j)
            if (!b[j].is_zero())
                r.coeffs_[i + j] += a[i] * b[j];
    }
    return r;
}

QSeries operator*(const Rational& c, const QSeries& s)
{
    QSeries r(s);
    for (auto& x : r.coeffs_)
        x *= c;
    return r;
}

bool operator==(const QSeries& a, const QSeries& b)
{
    const std::int64_t n = std::min(a.order(), b.order());
    for (std::int64_t k = 0; k <= n; ++k)
        if (a[k] != b[k])
            return false;
    return true;
}

std::string QSeries::str() const
{
    std::ostringstream os;
    bool first = true;
    for (std::int64_t k = 0; k <= order(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero())
            continue;
        if (!first)
            os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0)
            os << "-";
        first = false;
        Rational mag = c.sign() < 0 ? -c : c;
        if (k == 0)
            os << mag;
        else {
            if (mag != Rational(1))
                os << mag << "*";
            os << "q";
            if (k > 1)
                os << "^" << k;
        }
    }
    if (first)
        os << "0";
    os << " + O(q^" << order() + 1 << ")";
    return os.str();
}

QSeries series_log_product(std::int64_t order)
{
    QSeries u(order);
    // log(1 - q^k) = -sum_{j>=1} q^{kj} / j
    for (std::int64_t k = 1; k <= order; ++k)
        for (std::int64_t j = 1; k * j <= order; ++j)
            u.set(k * j, u[k * j] - Rational(1, j));
    return u;
}

QSeries series_negate_variable(const QSeries& s)
{
    QSeries r(s);
    for (std::int64_t k = 1; k <= r.order(); k += 2)
        r.set(k, -r[k]);
    return r;
}

QSeries series_exp(const QSeries& s)
{
    if (!s[0].is_zero())
        throw DomainError("series_exp requires a zero constant term");
    QSeries result = QSeries::one(s.order());
    QSeries power = QSeries::one(s.order());
    Rational factorial = 1;
    for (std::int64_t n = 1; n <= s.order(); ++n) {
        power = power * s;
        factorial *= n;
        result = result + (Rational(1) / factorial) * power;
    }
    return result;
}

QSeries series_log(const QSeries& s)
{
    if (s[0] != Rational(1))
        throw DomainError("series_log requires constant term 1");
    // log(1 + x) = sum_{n>=1} (-1)^{n+1} x^n / n, x = s - 1 nilpotent
    QSeries x = s - QSeries::one(s.order());
    QSeries result(s.order());
    QSeries power = QSeries::one(s.order());
    for (std::int64_t n = 1; n <= s.order(); ++n) {
        power = power * x;
        Rational c(n % 2 == 1 ? 1 : -1, n);
        result = result + c * power;
    }
    return result;
}

} // namespace hqm
