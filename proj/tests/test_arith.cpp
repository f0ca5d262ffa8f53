#include <random>

#include <doctest.h>

#include "hqm/arith.hpp"
#include "hqm/error.hpp"
#include "oracle.hpp"

using hqm::ChernClass;
using hqm::CheckW;
using hqm::InvariantQuery;
using hqm::Rational;

TEST_CASE("divisors")
{
    CHECK(hqm::divisors(1) == std::vector<std::int64_t>{1});
    CHECK(hqm::divisors(6) == std::vector<std::int64_t>{1, 2, 3, 6});
    CHECK(hqm::divisors(9) == std::vector<std::int64_t>{1, 3, 9});
    CHECK(hqm::divisors(36) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 9, 12, 18, 36});
    CHECK_THROWS_AS(hqm::divisors(0), hqm::DomainError);
    CHECK_THROWS_AS(hqm::divisors(-4), hqm::DomainError);
    for (std::int64_t n = 1; n <= 300; ++n) {
        std::vector<std::int64_t> ref;
        for (std::int64_t m = 1; m <= n; ++m)
            if (n % m == 0)
                ref.push_back(m);
        CHECK(hqm::divisors(n) == ref);
    }
}

TEST_CASE("reciprocal divisor sums")
{
    CHECK(hqm::sigma_minus_one(1) == Rational(1));
    CHECK(hqm::sigma_minus_one(6) == Rational(2));
    CHECK(hqm::sigma_minus_one(4) == Rational(7, 4));
    CHECK_THROWS_AS(hqm::sigma_minus_one(0), hqm::DomainError);
    for (std::int64_t n = 1; n <= 500; ++n) {
        const mpq_class ref = oracle::divisor_reciprocal_sum(n);
        CHECK(hqm::sigma_minus_one(n) == Rational(ref.get_num(), ref.get_den()));
    }
    // multiplicative on coprime arguments
    for (std::int64_t a = 1; a <= 40; ++a)
        for (std::int64_t b = 1; b <= 40; ++b)
            if (hqm::gcd(a, b) == 1)
                CHECK(hqm::sigma_minus_one(a * b) == hqm::sigma_minus_one(a) * hqm::sigma_minus_one(b));
}

TEST_CASE("euler pairing on the elliptic curve")
{
    CHECK(hqm::chi_pairing_E({2, 1}, {1, 0}) == 1);
    CHECK(hqm::chi_pairing_E({7, 3}, {0, 0}) == 0);
    CHECK(hqm::chi_pairing_E({3, 1}, {1, 0}) == 1);
    CHECK(hqm::chi_pairing_E({5, 2}, {-2, 1}) == 1);
}

TEST_CASE("normalization suggestions have euler pairing one")
{
    for (std::int64_t r = 2; r <= 30; ++r)
        for (std::int64_t a = 1; a < r; ++a)
            if (hqm::gcd(r, a) == 1)
                CHECK(hqm::chi_pairing_E({r, a}, hqm::suggest_u_choice(r, a)) == 1);
    CHECK(hqm::suggest_u_choice(5, 2) == ChernClass{-2, 1});
}

TEST_CASE("solving for the dual class")
{
    CHECK(hqm::solve_check_w(InvariantQuery(2, 1, 1, 3, 2)) == CheckW{3, 0});
    CHECK(hqm::solve_check_w(InvariantQuery(2, 1, 1, 0, 2)) == CheckW{0, 0});
    CHECK(hqm::solve_check_w(InvariantQuery(3, 1, 1, 5, 2)) == CheckW{5, 0});

    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> rr(2, 12), ww(0, 300);
    for (int i = 0; i < 300; ++i) {
        const std::int64_t r = rr(rng);
        std::int64_t a = std::uniform_int_distribution<std::int64_t>(1, r - 1)(rng);
        if (hqm::gcd(r, a) != 1)
            continue;
        const ChernClass u = hqm::suggest_u_choice(r, a);
        const std::int64_t w = ww(rng);
        const CheckW cw = hqm::solve_check_w(InvariantQuery(r, 0, a, w, 2, u));
        CHECK(cw.w1 * u.u2 + cw.w2 * u.u1 == 0);
        CHECK(cw.w1 * a - cw.w2 * r == w);
    }
}

TEST_CASE("query validation")
{
    CHECK_THROWS_AS(InvariantQuery(2, 1, 1, 1, 1), hqm::InvalidQuery);
    CHECK_THROWS_AS(InvariantQuery(0, 1, 0, 1, 2), hqm::InvalidQuery);
    CHECK_THROWS_AS(InvariantQuery(4, 1, 2, 1, 2), hqm::InvalidQuery);
    CHECK_THROWS_AS(InvariantQuery(2, 1, 2, 1, 2), hqm::InvalidQuery);
    CHECK_THROWS_AS(InvariantQuery(2, 1, 1, -1, 2), hqm::InvalidQuery);
    CHECK_THROWS_AS(InvariantQuery(5, 1, 2, 1, 2), hqm::InvalidQuery);
    CHECK_THROWS_AS(InvariantQuery(2, 1, 1, 1, 2, ChernClass{0, 0}), hqm::InvalidQuery);
    CHECK_NOTHROW(InvariantQuery(5, 1, 2, 1, 2, ChernClass{-2, 1}));
    const InvariantQuery q(3, -4, 1, 9, 2);
    CHECK(q.d_mod_r() == 2);
    CHECK(q.u_choice() == ChernClass{1, 0});
    CHECK(q.with_genus(5).g() == 5);
    CHECK(q.with_degree(4).w() == 4);
}

TEST_CASE("integer helpers")
{
    CHECK(hqm::torsion_order(1) == 1);
    CHECK(hqm::torsion_order(3) == 9);
    CHECK(hqm::torsion_order(10) == 100);
    CHECK(hqm::floor_div(-7, 2) == -4);
    CHECK(hqm::mod_floor(-7, 3) == 2);
    CHECK(hqm::is_prime(2));
    CHECK(hqm::is_prime(97));
    CHECK_FALSE(hqm::is_prime(1));
    CHECK_FALSE(hqm::is_prime(91));
}
