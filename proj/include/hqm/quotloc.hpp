#pragma once

#include <cstdint>
#include <vector>

#include "hqm/arith.hpp"
#include "hqm/exactalg/equivariant.hpp"
#include "hqm/exactalg/rational.hpp"

namespace hqm {

/// How to treat Quot classes whose rank component is neither 0 nor r - 1.
/// Only those two families have a worked-out stabilizer and Euler
/// characteristic; anything else is either rejected or evaluated with the
/// uniform 1/dim rule and flagged.
enum class Mode { strict, permissive };

/// One Quot-scheme component Quot(a, u_m) on the wall, indexed by a
/// divisor m of w.
struct WallComponent {
    std::int64_t m = 0;
    std::int64_t h_m = 0;
    ChernClass u_m;
    std::int64_t dim = 0;
    std::int64_t stab_order = 1;
    /// Euler characteristic of the slice fixed by the stabilizer.
    std::int64_t euler_slice = 0;
    /// False when u_m.u1 is outside {0, r-1}; only produced in permissive mode.
    bool supported = true;

    /// e(T_[Quot/Phi]) = e(slice) / |stabilizer|.
    Rational orbifold_euler() const { return Rational(euler_slice, stab_order); }
};

/// A torus-fixed component of the slice for a split G = L_1 + ... + L_r:
/// an ordered decomposition u = u_1 + ... + u_r with its Euler contribution.
struct FixedLocusDecomposition {
    std::vector<ChernClass> parts;
    std::int64_t euler_contribution = 0;
};

/// u.u1 in {0, r - 1}.
bool is_supported_class(std::int64_t r, const ChernClass& u);

/// One component per divisor of w, ascending in m. Requires w >= 1 and
/// a != 0. In strict mode an unsupported class throws UnsupportedCase; in
/// permissive mode it is returned with supported = false.
std::vector<WallComponent> enumerate_wall_components(const InvariantQuery& q, Mode mode = Mode::strict);

/// dim Quot(a, u) = r u2 - a u1. Throws InvalidComponent if negative.
std::int64_t quot_dimension(std::int64_t r, std::int64_t a, const ChernClass& u);

/// Order of the subgroup of Phi_a fixing a slice of Quot(a, u):
/// dim^2 for u = (r-1, k), r^2 k^2 for u = (0, k). Other classes throw in
/// strict mode and fall back to dim^2 in permissive mode.
std::int64_t stabilizer_order(std::int64_t r, std::int64_t a, const ChernClass& u, Mode mode = Mode::strict);

/// e(P^n) = n + 1, the number of torus-fixed coordinate points.
std::int64_t projective_space_euler(std::int64_t n);

/// All ordered decompositions of (0, k) into r classes (0, k_i), k_i >= 0,
/// in lexicographic order of (k_1, ..., k_r).
std::vector<FixedLocusDecomposition> fixed_locus_decompositions(std::int64_t r, std::int64_t k);

/// e(Quot(a, (0, k))_0) by summing the fixed-locus contributions: zero when
/// two or more parts are nonzero (a free E-action survives), e(P^{k-1})
/// when exactly one is. Throws DomainError unless u = (0, k) with k >= 1.
std::int64_t euler_slice_bruteforce(std::int64_t r, const ChernClass& u);

/// e(T_[Quot/Phi]) for u = (r-1, k): e(P^{dim-1}) / dim^2 = 1 / dim.
Rational euler_quotient_projective(std::int64_t r, std::int64_t a, const ChernClass& u);

/// sum_k (-m z)^{-k} c_k(RHom(K, Q)^v t) with c_0 = 1 and
/// c_1 = dim (omega - t); the z^{-2} and lower terms vanish for dimension
/// reasons and are not produced.
ZLaurent normal_bundle_inverse_expansion(std::int64_t m, std::int64_t dim,
                                         int min_exponent = kDefaultMinZExponent);

/// Virtual class of [Quot^rel(a, u_m)/Phi_a] pushed to C. It is a point
/// class in the curve direction, written e(T_[Quot/Phi]) * omega so that its
/// degree is (2g - 2) e(T).
EquivCoeff component_virtual_class(const WallComponent& c);

/// t-coefficient of deg Res_{z=0}( [Quot^rel(a, u_m)/Phi]^vir / e(N^vir) ),
/// computed through the residue engine. Equals m^{-1} dim (2g-2) e(T).
/// Unsupported components throw in strict mode.
Rational component_residue_degree(const WallComponent& c, std::int64_t g, Mode mode = Mode::strict);

} // namespace hqm
