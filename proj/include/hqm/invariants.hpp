#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hqm/arith.hpp"
#include "hqm/exactalg/equivariant.hpp"
#include "hqm/exactalg/qseries.hpp"
#include "hqm/exactalg/rational.hpp"
#include "hqm/quotloc.hpp"

namespace hqm {

enum class Route { closed_form, wall_crossing_oracle, constant_map, conjecture };

std::string to_string(Route route);
/// Inverse of to_string; throws DomainError on unknown names.
Route route_from_string(std::string_view name);

struct Contribution {
    std::int64_t m = 0;
    Rational value;

    friend bool operator==(const Contribution&, const Contribution&) = default;
};

/// A reduced invariant (the coefficient of t) together with how it was
/// obtained. For the oracle route value_t is the sum of the breakdown.
struct InvariantResult {
    Rational value_t;
    std::vector<Contribution> breakdown;
    Route route = Route::closed_form;
    bool conjectural = false;

    /// The unreduced, t-linear invariant value_t * t.
    EquivCoeff raw() const { return value_t * EquivCoeff::t(); }
};

/// w = d a (mod r).
bool degree_congruence_holds(const InvariantQuery& q);

/// Every divisor m of w is 0 or a modulo r (w >= 1).
bool divisor_congruence_holds(const InvariantQuery& q);

/// Closed form on the E side: (2g-2) sigma_{-1}(w) when w = d a (mod r),
/// else 0. Proven for r prime, a != 0 and divisors of w in {0, a} mod r
/// (which covers every w when r = 2). Anything else throws UnsupportedCase.
InvariantResult qm_E_closed(const InvariantQuery& q);

/// One crossing term at the wall epsilon = 1/wall: k copies of the wall
/// locus W(a, wall) glued to a quasisection of degree residual.
struct WallCrossingTerm {
    std::int64_t wall = 0;
    std::int64_t multiplicity = 0;
    std::int64_t residual = 0;

    /// Only the single-copy, zero-residual term carries a Quot contribution;
    /// every other term is a pullback from a quotient and has degree 0.
    bool contributes() const { return multiplicity == 1 && residual == 0; }
};

/// All (wall, k, w') with k * wall + w' = w, k >= 1, w' >= 0, ordered by
/// wall and then k.
std::vector<WallCrossingTerm> wall_crossing_terms(std::int64_t w);

/// Wall-crossing route on the E side: telescopes from the empty chamber
/// epsilon = +infinity down to epsilon = 0+, summing the residues of the
/// Quot components of each contributing wall term. The moduli space is
/// empty, and the value zero, unless the curve-degree component of ch(F)
/// matches d modulo r.
InvariantResult qm_E_oracle(const InvariantQuery& q, Mode mode = Mode::strict);

/// Dispatch on route (closed_form, wall_crossing_oracle or conjecture).
/// The conjecture route returns the E-side value r^{-2g} times
/// conjecture_eval.
InvariantResult qm_E(const InvariantQuery& q, Route route, Mode mode = Mode::strict);

/// Curve side QM(C) = VW(C x E) = r^{2g} QM(E), for r prime. The conjecture
/// route defers to conjecture_eval and accepts any r.
InvariantResult qm_C(const InvariantQuery& q, Route route = Route::closed_form, Mode mode = Mode::strict);

/// Alias QM = GW for r = 2, a = 1, odd d and odd w.
InvariantResult gw_invariant(const InvariantQuery& q, Route route = Route::closed_form);

/// Constant-map invariant QM^a_{0,0}(C) = r^{2g-2}; r prime, a != 0 mod r.
Rational qm_constant_map(std::int64_t r, std::int64_t a, std::int64_t g);

/// Conjectural curve-side value (2g-2) r^{2g} sigma_{-1}(w) when
/// w = d a (mod r), else 0. When the proven hypotheses hold the value is
/// cross-checked against the oracle (RouteDisagreement on mismatch) and
/// marked non-conjectural.
InvariantResult conjecture_eval(const InvariantQuery& q);

struct SeriesIdentity {
    QSeries lhs;
    QSeries rhs;
    bool equal = false;
};

/// sum_{odd w} QM_{1,w} q^w against (2-2g) 2^{2g-1} (U(q) - U(-q)).
SeriesIdentity series_theorem_A(std::int64_t g, std::int64_t order, Route route = Route::closed_form);

/// sum_w QM^{1}_{0,w} q^w against (2-2g) 2^{2g-1} (U(q) + U(-q)).
SeriesIdentity series_theorem_B(std::int64_t g, std::int64_t order, Route route = Route::closed_form);

/// Genus-1 positive-degree GW series of an elliptic curve, -U(q).
QSeries elliptic_curve_gw_series(std::int64_t order);

} // namespace hqm
