#include "hqm/exactalg/equivariant.hpp"

#include <algorithm>
#include <sstream>

#include "hqm/error.hpp"

namespace hqm {

// ---------------------------------------------------------------- TPolynomial

TPolynomial::TPolynomial(int degree_cap) : cap_(degree_cap)
{
    if (cap_ < 0)
        throw DomainError("t-degree cap must be non-negative");
}

TPolynomial::TPolynomial(std::vector<Rational> coeffs, int degree_cap) : c_(std::move(coeffs)), cap_(degree_cap)
{
    if (cap_ < 0)
        throw DomainError("t-degree cap must be non-negative");
    trim();
}

TPolynomial TPolynomial::constant(const Rational& c, int degree_cap) { return TPolynomial({c}, degree_cap); }

TPolynomial TPolynomial::t(int degree_cap) { return TPolynomial({0, 1}, degree_cap); }

void TPolynomial::trim()
{
    if (c_.size() > static_cast<std::size_t>(cap_) + 1)
        c_.resize(static_cast<std::size_t>(cap_) + 1);
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Rational TPolynomial::coeff(int k) const
{
    if (k < 0 || static_cast<std::size_t>(k) >= c_.size())
        return 0;
    return c_[static_cast<std::size_t>(k)];
}

int TPolynomial::degree() const { return static_cast<int>(c_.size()) - 1; }

TPolynomial TPolynomial::operator-() const
{
    TPolynomial r(*this);
    for (auto& x : r.c_)
        x = -x;
    return r;
}

TPolynomial operator+(const TPolynomial& a, const TPolynomial& b)
{
    const int cap = std::min(a.cap_, b.cap_);
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return TPolynomial(std::move(c), cap);
}

TPolynomial operator-(const TPolynomial& a, const TPolynomial& b) { return a + (-b); }

TPolynomial operator*(const TPolynomial& a, const TPolynomial& b)
{
    const int cap = std::min(a.cap_, b.cap_);
    if (a.c_.empty() || b.c_.empty())
        return TPolynomial(cap);
    std::vector<Rational> c(std::min(a.c_.size() + b.c_.size() - 1, static_cast<std::size_t>(cap) + 1), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size() && i + j < c.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return TPolynomial(std::move(c), cap);
}

TPolynomial operator*(const Rational& s, const TPolynomial& p)
{
    TPolynomial r(p);
    for (auto& x : r.c_)
        x *= s;
    r.trim();
    return r;
}

bool operator==(const TPolynomial& a, const TPolynomial& b) { return a.c_ == b.c_; }

std::string TPolynomial::str() const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero())
            continue;
        Rational mag = c_[k].sign() < 0 ? -c_[k] : c_[k];
        if (first)
            os << (c_[k].sign() < 0 ? "-" : "");
        else
            os << (c_[k].sign() < 0 ? " - " : " + ");
        first = false;
        if (k == 0)
            os << mag;
        else {
            if (mag != Rational(1))
                os << mag << "*";
            os << "t";
            if (k > 1)
                os << "^" << k;
        }
    }
    return os.str();
}

// ----------------------------------------------------------------- EquivCoeff

EquivCoeff::EquivCoeff(int degree_cap) : scalar_(degree_cap), omega_(degree_cap) {}

EquivCoeff::EquivCoeff(TPolynomial scalar, TPolynomial omega) : scalar_(std::move(scalar)), omega_(std::move(omega)) {}

EquivCoeff EquivCoeff::constant(const Rational& c, int degree_cap)
{
    return EquivCoeff(TPolynomial::constant(c, degree_cap), TPolynomial(degree_cap));
}

EquivCoeff EquivCoeff::t(int degree_cap) { return EquivCoeff(TPolynomial::t(degree_cap), TPolynomial(degree_cap)); }

EquivCoeff EquivCoeff::omega(int degree_cap)
{
    return EquivCoeff(TPolynomial(degree_cap), TPolynomial::constant(1, degree_cap));
}

EquivCoeff EquivCoeff::operator-() const { return EquivCoeff(-scalar_, -omega_); }

EquivCoeff operator+(const EquivCoeff& a, const EquivCoeff& b)
{
    return EquivCoeff(a.scalar_ + b.scalar_, a.omega_ + b.omega_);
}

EquivCoeff operator-(const EquivCoeff& a, const EquivCoeff& b) { return a + (-b); }

EquivCoeff operator*(const EquivCoeff& a, const EquivCoeff& b)
{
    // (s + o w)(s' + o' w) = s s' + (s o' + o s') w, since w^2 = 0
    return EquivCoeff(a.scalar_ * b.scalar_, a.scalar_ * b.omega_ + a.omega_ * b.scalar_);
}

EquivCoeff operator*(const Rational& c, const EquivCoeff& e) { return EquivCoeff(c * e.scalar_, c * e.omega_); }

bool operator==(const EquivCoeff& a, const EquivCoeff& b) { return a.scalar_ == b.scalar_ && a.omega_ == b.omega_; }

std::string EquivCoeff::str() const
{
    if (is_zero())
        return "0";
    if (omega_.is_zero())
        return scalar_.str();
    std::string w = "(" + omega_.str() + ")*omega";
    if (scalar_.is_zero())
        return w;
    return scalar_.str() + " + " + w;
}

TPolynomial integrate_over_curve(const EquivCoeff& e, std::int64_t genus)
{
    return Rational(2 * genus - 2) * e.omega_part();
}

// ------------------------------------------------------------------- ZLaurent

ZLaurent::ZLaurent(int min_exponent) : min_exp_(min_exponent) {}

void ZLaurent::add_term(int exponent, const EquivCoeff& c)
{
    if (exponent < min_exp_)
        return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        if (!c.is_zero())
            terms_.emplace(exponent, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero())
        terms_.erase(it);
}

EquivCoeff ZLaurent::coeff(int exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? EquivCoeff() : it->second;
}

ZLaurent operator+(const ZLaurent& a, const ZLaurent& b)
{
    ZLaurent r(std::max(a.min_exp_, b.min_exp_));
    for (const auto& [k, c] : a.terms_)
        r.add_term(k, c);
    for (const auto& [k, c] : b.terms_)
        r.add_term(k, c);
    return r;
}

ZLaurent operator*(const ZLaurent& a, const ZLaurent& b)
{
    ZLaurent r(std::max(a.min_exp_, b.min_exp_));
    for (const auto& [i, x] : a.terms_)
        for (const auto& [j, y] : b.terms_)
            r.add_term(i + j, x * y);
    return r;
}

bool operator==(const ZLaurent& a, const ZLaurent& b) { return a.terms_ == b.terms_; }

std::string ZLaurent::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first)
            os << " + ";
        first = false;
        os << "[" << it->second.str() << "]";
        if (it->first != 0)
            os << "*z^" << it->first;
    }
    return os.str();
}

EquivCoeff laurent_residue(const ZLaurent& f) { return f.coeff(-1); }

ZLaurent chern_series_in_inverse_z(std::int64_t m, std::span<const EquivCoeff> chern, int min_exponent)
{
    if (m == 0)
        throw DomainError("z-weight must be nonzero");
    ZLaurent f(min_exponent);
    for (std::size_t k = 0; k < chern.size(); ++k) {
        const int e = -static_cast<int>(k);
        if (e < min_exponent)
            break;
        // (-m z)^{-k} = (-m)^{-k} z^{-k}
        f.add_term(e, Rational(-m).pow(-static_cast<std::int64_t>(k)) * chern[k]);
    }
    return f;
}

} // namespace hqm
