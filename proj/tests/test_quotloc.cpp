#include <random>

#include <doctest.h>

#include "hqm/error.hpp"
#include "hqm/quotloc.hpp"

using hqm::ChernClass;
using hqm::EquivCoeff;
using hqm::InvariantQuery;
using hqm::Mode;
using hqm::Rational;

TEST_CASE("wall components for rank 2")
{
    auto c3 = hqm::enumerate_wall_components(InvariantQuery(2, 1, 1, 3, 2));
    REQUIRE(c3.size() == 2);
    CHECK(c3[0].m == 1);
    CHECK(c3[0].h_m == 2);
    CHECK(c3[0].u_m == ChernClass{1, 2});
    CHECK(c3[1].m == 3);
    CHECK(c3[1].h_m == 1);
    CHECK(c3[1].u_m == ChernClass{1, 1});

    auto c1 = hqm::enumerate_wall_components(InvariantQuery(2, 1, 1, 1, 2));
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].h_m == 1);
    CHECK(c1[0].u_m == ChernClass{1, 1});

    auto c2 = hqm::enumerate_wall_components(InvariantQuery(2, 0, 1, 2, 2));
    REQUIRE(c2.size() == 2);
    CHECK(c2[0].h_m == 1);
    CHECK(c2[0].u_m == ChernClass{0, 1});
    CHECK(c2[1].h_m == 1);
    CHECK(c2[1].u_m == ChernClass{1, 1});

    CHECK_THROWS_AS(hqm::enumerate_wall_components(InvariantQuery(2, 0, 1, 0, 2)), hqm::DomainError);
}

TEST_CASE("unsupported classes in strict and permissive mode")
{
    // rank 5, degree 2: w = 3 gives a quotient class with u1 outside {0, r-1}
    const InvariantQuery q(5, 1, 2, 3, 2, ChernClass{-2, 1});
    CHECK_THROWS_AS(hqm::enumerate_wall_components(q, Mode::strict), hqm::UnsupportedCase);
    auto comps = hqm::enumerate_wall_components(q, Mode::permissive);
    bool flagged = false;
    for (const auto& c : comps)
        flagged = flagged || !c.supported;
    CHECK(flagged);
    CHECK_THROWS_AS(hqm::stabilizer_order(5, 2, ChernClass{2, 1}), hqm::UnsupportedCase);
    CHECK(hqm::stabilizer_order(5, 2, ChernClass{2, 1}, Mode::permissive) ==
          hqm::quot_dimension(5, 2, ChernClass{2, 1}) * hqm::quot_dimension(5, 2, ChernClass{2, 1}));
}

TEST_CASE("quot dimensions")
{
    CHECK(hqm::quot_dimension(2, 1, {1, 2}) == 3);
    CHECK(hqm::quot_dimension(2, 1, {0, 1}) == 2);
    CHECK(hqm::quot_dimension(3, 1, {2, 2}) == 4);
    CHECK_THROWS_AS(hqm::quot_dimension(2, 1, {1, 0}), hqm::InvalidComponent);
}

TEST_CASE("stabilizer orders")
{
    CHECK(hqm::stabilizer_order(2, 1, {1, 2}) == 9);
    CHECK(hqm::stabilizer_order(2, 1, {0, 1}) == 4);
    CHECK(hqm::stabilizer_order(2, 1, {1, 1}) == 1);
}

TEST_CASE("slice euler characteristics by enumeration")
{
    CHECK(hqm::euler_slice_bruteforce(2, {0, 1}) == 2);
    CHECK(hqm::euler_slice_bruteforce(3, {0, 4}) == 12);
    CHECK(hqm::euler_slice_bruteforce(5, {0, 1}) == 5);
    CHECK_THROWS_AS(hqm::euler_slice_bruteforce(3, {0, 0}), hqm::DomainError);
    CHECK_THROWS_AS(hqm::euler_slice_bruteforce(3, {1, 2}), hqm::DomainError);

    // number of compositions of k into r parts is C(k+r-1, r-1)
    auto binom = [](std::int64_t n, std::int64_t k) {
        std::int64_t out = 1;
        for (std::int64_t i = 1; i <= k; ++i)
            out = out * (n - k + i) / i;
        return out;
    };
    for (std::int64_t r = 1; r <= 5; ++r)
        for (std::int64_t k = 1; k <= 8; ++k)
            CHECK(static_cast<std::int64_t>(hqm::fixed_locus_decompositions(r, k).size()) ==
                  binom(k + r - 1, r - 1));
}

TEST_CASE("orbifold euler characteristic of the projective slice")
{
    CHECK(hqm::euler_quotient_projective(2, 1, {1, 1}) == Rational(1));
    CHECK(hqm::euler_quotient_projective(2, 1, {1, 2}) == Rational(1, 3));
    CHECK(hqm::euler_quotient_projective(3, 1, {2, 1}) == Rational(1));
    CHECK(hqm::projective_space_euler(0) == 1);
    CHECK(hqm::projective_space_euler(4) == 5);
}

TEST_CASE("normal bundle expansion")
{
    const EquivCoeff w_minus_t = EquivCoeff::omega() - EquivCoeff::t();
    auto e1 = hqm::normal_bundle_inverse_expansion(1, 1);
    CHECK(e1.coeff(0) == EquivCoeff::constant(1));
    CHECK(e1.coeff(-1) == -w_minus_t);
    auto e3 = hqm::normal_bundle_inverse_expansion(3, 1);
    CHECK(e3.coeff(-1) == Rational(-1, 3) * w_minus_t);
    auto e0 = hqm::normal_bundle_inverse_expansion(1, 0);
    CHECK(e0.coeff(0) == EquivCoeff::constant(1));
    CHECK(e0.coeff(-1).is_zero());
    CHECK_THROWS_AS(hqm::normal_bundle_inverse_expansion(0, 1), hqm::DomainError);
}

TEST_CASE("per-component residue degrees")
{
    auto comp = [](std::int64_t w, std::int64_t m) {
        for (const auto& c : hqm::enumerate_wall_components(InvariantQuery(2, 1, 1, w, 2)))
            if (c.m == m)
                return c;
        throw std::logic_error("missing component");
    };
    CHECK(hqm::component_residue_degree(comp(3, 1), 2) == Rational(2));
    CHECK(hqm::component_residue_degree(comp(3, 3), 2) == Rational(2, 3));
    CHECK(hqm::component_residue_degree(comp(1, 1), 2) == Rational(2));
    const auto c = comp(2, 2);
    CHECK(c.u_m == ChernClass{1, 1});
    CHECK(hqm::component_residue_degree(c, 3) == Rational(2));
}

TEST_CASE("virtual class is a multiple of omega")
{
    for (const auto& c : hqm::enumerate_wall_components(InvariantQuery(2, 1, 1, 45, 2))) {
        const EquivCoeff v = hqm::component_virtual_class(c);
        CHECK(v.scalar_part().is_zero());
        CHECK(v.omega_part() == hqm::TPolynomial::constant(c.orbifold_euler()));
    }
}
