#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hqm/exactalg/rational.hpp"

namespace hqm {

/// Class (u1, u2) in H^ev(E, Z): rank component and degree component.
struct ChernClass {
    std::int64_t u1 = 0;
    std::int64_t u2 = 0;

    friend bool operator==(const ChernClass&, const ChernClass&) = default;
    friend ChernClass operator+(ChernClass a, ChernClass b) { return {a.u1 + b.u1, a.u2 + b.u2}; }
    friend ChernClass operator-(ChernClass a, ChernClass b) { return {a.u1 - b.u1, a.u2 - b.u2}; }
    friend ChernClass operator*(std::int64_t k, ChernClass a) { return {k * a.u1, k * a.u2}; }
    bool is_zero() const { return u1 == 0 && u2 == 0; }
};

/// The curve-direction part of ch(F) for a sheaf attached to a quasisection.
struct CheckW {
    std::int64_t w1 = 0;
    std::int64_t w2 = 0;

    friend bool operator==(const CheckW&, const CheckW&) = default;
};

/// A validated request for a genus-1 invariant of the rank-r moduli.
///
/// Construction enforces g >= 2, 0 <= a < r, gcd(r, a) = 1, w >= 0 and
/// chi(v . u) = 1 for v = (r, a). When no normalization class is given and
/// a = 1 the class u = (1, 0) is used; for other a it must be supplied.
class InvariantQuery {
public:
    InvariantQuery(std::int64_t r, std::int64_t d, std::int64_t a, std::int64_t w, std::int64_t g,
                   std::optional<ChernClass> u_choice = std::nullopt);

    std::int64_t r() const { return r_; }
    std::int64_t d() const { return d_; }
    /// d reduced into [0, r).
    std::int64_t d_mod_r() const;
    std::int64_t a() const { return a_; }
    std::int64_t w() const { return w_; }
    std::int64_t g() const { return g_; }
    const ChernClass& u_choice() const { return u_; }
    /// v = (r, a) on E.
    ChernClass v() const { return {r_, a_}; }

    /// Same query at another genus or degree; revalidated.
    InvariantQuery with_genus(std::int64_t g) const;
    InvariantQuery with_degree(std::int64_t w) const;

private:
    std::int64_t r_, d_, a_, w_, g_;
    ChernClass u_;
};

/// floor(a / b) and a mod b in [0, |b|) for b != 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t mod_floor(std::int64_t a, std::int64_t b);
std::int64_t gcd(std::int64_t a, std::int64_t b);
bool is_prime(std::int64_t n);

/// Positive divisors in increasing order. Throws DomainError for n < 1.
std::vector<std::int64_t> divisors(std::int64_t n);

/// sum_{m | n} 1/m. Throws DomainError for n < 1.
Rational sigma_minus_one(std::int64_t n);

/// chi(v . u) on the elliptic curve: v.u1 * u.u2 + v.u2 * u.u1 (td_E = 1).
std::int64_t chi_pairing_E(const ChernClass& v, const ChernClass& u);

/// A class u with chi((r, a) . u) = 1, from the extended Euclidean
/// algorithm. Only used to suggest a normalization to the caller.
ChernClass suggest_u_choice(std::int64_t r, std::int64_t a);

/// Integral solution of
///     w1 * u2 + w2 * u1 = 0
///     w1 * a  - w2 * r  = w
/// Throws UnsolvableNormalization if singular or non-integral.
CheckW solve_check_w(const InvariantQuery& q);

/// |E[n]| = n^2.
std::int64_t torsion_order(std::int64_t n);

} // namespace hqm
