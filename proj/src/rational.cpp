#include "hqm/exactalg/rational.hpp"

#include <climits>
#include <ostream>

#include "hqm/error.hpp"

namespace hqm {

namespace {

mpz_class to_mpz(std::int64_t v)
{
    // mpz_class has no portable int64 constructor; go through the string
    // form only when the value does not fit in a long.
    if (v >= LONG_MIN && v <= LONG_MAX)
        return mpz_class(static_cast<long>(v));
    return mpz_class(std::to_string(v));
}

bool is_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

} // namespace

Rational::Rational(std::int64_t n) : value_(to_mpz(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(to_mpz(num), to_mpz(den)) {}

Rational::Rational(const mpz_class& n) : value_(n) {}

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) {}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    std::string_view num_digits = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? num.substr(1) : num;
    if (!is_digits(num_digits) || !is_digits(den))
        throw DomainError("malformed rational '" + std::string(text) + "'");
    std::string num_str(num[0] == '+' ? num.substr(1) : num);
    return Rational(mpz_class(num_str), mpz_class(std::string(den)));
}

std::string Rational::str() const
{
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& o)
{
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    int c = cmp(a.value_, b.value_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::pow(std::int64_t e) const
{
    if (e < 0) {
        if (is_zero())
            throw DomainError("zero to a negative power");
        return (Rational(1) / *this).pow(-e);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace hqm
