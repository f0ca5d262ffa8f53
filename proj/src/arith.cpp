#include "hqm/arith.hpp"

#include <algorithm>
#include <string>

#include "hqm/error.hpp"

namespace hqm {

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    if (b == 0)
        throw DomainError("division by zero");
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t b)
{
    if (b == 0)
        throw DomainError("modulus zero");
    std::int64_t m = a % b;
    if (m < 0)
        m += (b < 0 ? -b : b);
    return m;
}

std::int64_t gcd(std::int64_t a, std::int64_t b)
{
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

std::vector<std::int64_t> divisors(std::int64_t n)
{
    if (n < 1)
        throw DomainError("divisors: expected n >= 1, got " + std::to_string(n));
    std::vector<std::int64_t> small, large;
    for (std::int64_t m = 1; m * m <= n; ++m) {
        if (n % m != 0)
            continue;
        small.push_back(m);
        if (m != n / m)
            large.push_back(n / m);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Rational sigma_minus_one(std::int64_t n)
{
    Rational s = 0;
    for (std::int64_t m : divisors(n))
        s += Rational(1, m);
    return s;
}

std::int64_t chi_pairing_E(const ChernClass& v, const ChernClass& u) { return v.u1 * u.u2 + v.u2 * u.u1; }

ChernClass suggest_u_choice(std::int64_t r, std::int64_t a)
{
    // find x, y with r x + a y = 1, then u = (y, x)
    std::int64_t old_r = r, cur_r = a, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
    while (cur_r != 0) {
        std::int64_t q = old_r / cur_r;
        std::int64_t tmp = old_r - q * cur_r;
        old_r = cur_r;
        cur_r = tmp;
        tmp = old_s - q * cur_s;
        old_s = cur_s;
        cur_s = tmp;
        tmp = old_t - q * cur_t;
        old_t = cur_t;
        cur_t = tmp;
    }
    if (old_r != 1 && old_r != -1)
        throw InvalidQuery("no normalization class exists: gcd(r, a) != 1");
    return {old_t * old_r, old_s * old_r};
}

// ------------------------------------------------------------ InvariantQuery

InvariantQuery::InvariantQuery(std::int64_t r, std::int64_t d, std::int64_t a, std::int64_t w, std::int64_t g,
                               std::optional<ChernClass> u_choice)
    : r_(r), d_(d), a_(a), w_(w), g_(g)
{
    if (r < 1)
        throw InvalidQuery("rank must be positive, got " + std::to_string(r));
    if (a < 0 || a >= r)
        throw InvalidQuery("degree a must lie in [0, r), got " + std::to_string(a));
    if (gcd(r, a) != 1)
        throw InvalidQuery("gcd(r, a) must be 1");
    if (g < 2)
        throw InvalidQuery("genus must be >= 2, got " + std::to_string(g));
    if (w < 0)
        throw InvalidQuery("quasimap degree w must be >= 0, got " + std::to_string(w));
    if (u_choice)
        u_ = *u_choice;
    else if (a == 1)
        u_ = {1, 0};
    else {
        ChernClass s = suggest_u_choice(r, a);
        throw InvalidQuery("a normalization class u is required when a != 1 (for example u = (" + std::to_string(s.u1) +
                           ", " + std::to_string(s.u2) + "))");
    }
    if (chi_pairing_E(v(), u_) != 1)
        throw InvalidQuery("normalization class must satisfy chi(v.u) = 1, got " +
                           std::to_string(chi_pairing_E(v(), u_)));
}

std::int64_t InvariantQuery::d_mod_r() const { return mod_floor(d_, r_); }

InvariantQuery InvariantQuery::with_genus(std::int64_t g) const { return InvariantQuery(r_, d_, a_, w_, g, u_); }

InvariantQuery InvariantQuery::with_degree(std::int64_t w) const { return InvariantQuery(r_, d_, a_, w, g_, u_); }

CheckW solve_check_w(const InvariantQuery& q)
{
    const ChernClass u = q.u_choice();
    const std::int64_t a = q.a(), r = q.r(), w = q.w();
    // [u2  u1] [w1]   [0]
    // [a  -r ] [w2] = [w]
    const std::int64_t det = -u.u2 * r - u.u1 * a;
    if (det == 0)
        throw UnsolvableNormalization("Chern character system is singular for u = (" + std::to_string(u.u1) + ", " +
                                      std::to_string(u.u2) + ")");
    const std::int64_t num1 = -u.u1 * w;
    const std::int64_t num2 = u.u2 * w;
    if (num1 % det != 0 || num2 % det != 0)
        throw UnsolvableNormalization("Chern character system has no integral solution");
    CheckW s{num1 / det, num2 / det};
    if (s.w1 * u.u2 + s.w2 * u.u1 != 0 || s.w1 * a - s.w2 * r != w)
        throw UnsolvableNormalization("Chern character solution failed re-substitution");
    return s;
}

std::int64_t torsion_order(std::int64_t n)
{
    if (n < 1)
        throw DomainError("torsion order needs n >= 1");
    return n * n;
}

} // namespace hqm
