#include "hqm/invariants.hpp"

#include <algorithm>

#include "hqm/error.hpp"

namespace hqm {

namespace {

Rational genus_factor(std::int64_t g) { return Rational(2 * g - 2); }

Rational curve_side_factor(std::int64_t r, std::int64_t g) { return Rational(r).pow(2 * g); }

void require_positive_degree(const InvariantQuery& q)
{
    if (q.w() < 1)
        throw DomainError("w = 0 is the constant-map invariant; use qm_constant_map");
}

bool proven_hypotheses(const InvariantQuery& q)
{
    return is_prime(q.r()) && q.a() % q.r() != 0 && divisor_congruence_holds(q);
}

InvariantResult scaled(InvariantResult res, const Rational& factor)
{
    res.value_t *= factor;
    for (auto& c : res.breakdown)
        c.value *= factor;
    return res;
}

} // namespace

std::string to_string(Route route)
{
    switch (route) {
    case Route::closed_form:
        return "closed_form";
    case Route::wall_crossing_oracle:
        return "wall_crossing_oracle";
    case Route::constant_map:
        return "constant_map";
    case Route::conjecture:
        return "conjecture";
    }
    return "unknown";
}

Route route_from_string(std::string_view name)
{
    for (Route r : {Route::closed_form, Route::wall_crossing_oracle, Route::constant_map, Route::conjecture})
        if (to_string(r) == name)
            return r;
    throw DomainError("unknown route '" + std::string(name) + "'");
}

bool degree_congruence_holds(const InvariantQuery& q)
{
    return mod_floor(q.w(), q.r()) == mod_floor(q.d() * q.a(), q.r());
}

bool divisor_congruence_holds(const InvariantQuery& q)
{
    require_positive_degree(q);
    const auto divs = divisors(q.w());
    return std::all_of(divs.begin(), divs.end(), [&](std::int64_t m) {
        const std::int64_t res = mod_floor(m, q.r());
        return res == 0 || res == mod_floor(q.a(), q.r());
    });
}

InvariantResult qm_E_closed(const InvariantQuery& q)
{
    require_positive_degree(q);
    if (!proven_hypotheses(q))
        throw UnsupportedCase("closed form is proven only for prime r, a != 0 and all divisors of w congruent "
                              "to 0 or a mod r");
    InvariantResult res;
    res.route = Route::closed_form;
    if (!degree_congruence_holds(q))
        return res;
    for (std::int64_t m : divisors(q.w()))
        res.breakdown.push_back({m, genus_factor(q.g()) / Rational(m)});
    res.value_t = genus_factor(q.g()) * sigma_minus_one(q.w());
    return res;
}

std::vector<WallCrossingTerm> wall_crossing_terms(std::int64_t w)
{
    std::vector<WallCrossingTerm> terms;
    for (std::int64_t wall = 1; wall <= w; ++wall)
        for (std::int64_t k = 1; k * wall <= w; ++k)
            terms.push_back({wall, k, w - k * wall});
    return terms;
}

InvariantResult qm_E_oracle(const InvariantQuery& q, Mode mode)
{
    require_positive_degree(q);
    InvariantResult res;
    res.route = Route::wall_crossing_oracle;

    // ch(F) = (v, check-w); check-w_1 is the degree along C, fixed to d up to
    // twists by multiples of r.
    const CheckW cw = solve_check_w(q);
    if (mod_floor(cw.w1, q.r()) != q.d_mod_r())
        return res;

    // epsilon = +infinity chamber: no quasisections of positive degree.
    Rational total = 0;
    for (const auto& term : wall_crossing_terms(q.w())) {
        if (!term.contributes())
            continue;
        for (const auto& c : enumerate_wall_components(q.with_degree(term.wall), mode)) {
            Rational contribution = component_residue_degree(c, q.g(), mode);
            res.breakdown.push_back({c.m, contribution});
            res.conjectural = res.conjectural || !c.supported;
            total += contribution;
        }
    }
    res.value_t = total;
    return res;
}

InvariantResult qm_E(const InvariantQuery& q, Route route, Mode mode)
{
    switch (route) {
    case Route::closed_form:
        return qm_E_closed(q);
    case Route::wall_crossing_oracle:
        return qm_E_oracle(q, mode);
    case Route::conjecture:
        return scaled(conjecture_eval(q), Rational(1) / curve_side_factor(q.r(), q.g()));
    case Route::constant_map:
        break;
    }
    throw DomainError("route " + to_string(route) + " does not apply to positive-degree invariants");
}

InvariantResult qm_C(const InvariantQuery& q, Route route, Mode mode)
{
    if (route == Route::conjecture)
        return conjecture_eval(q);
    if (!is_prime(q.r()))
        throw UnsupportedCase("the curve/elliptic correspondence needs prime r");
    return scaled(qm_E(q, route, mode), curve_side_factor(q.r(), q.g()));
}

InvariantResult gw_invariant(const InvariantQuery& q, Route route)
{
    if (q.r() != 2 || q.a() != 1 || q.d_mod_r() != 1 || q.w() % 2 == 0)
        throw UnsupportedCase("QM = GW is only available for r = 2, a = 1, odd d and odd w");
    return qm_C(q, route);
}

Rational qm_constant_map(std::int64_t r, std::int64_t a, std::int64_t g)
{
    if (!is_prime(r))
        throw UnsupportedCase("constant-map invariant needs prime r");
    if (mod_floor(a, r) == 0)
        throw UnsupportedCase("constant-map invariant needs a != 0 mod r");
    if (g < 2)
        throw InvalidQuery("genus must be >= 2");
    return Rational(r).pow(2 * g - 2);
}

InvariantResult conjecture_eval(const InvariantQuery& q)
{
    require_positive_degree(q);
    InvariantResult res;
    res.route = Route::conjecture;
    res.conjectural = !proven_hypotheses(q);
    if (degree_congruence_holds(q)) {
        const Rational scale = genus_factor(q.g()) * curve_side_factor(q.r(), q.g());
        for (std::int64_t m : divisors(q.w()))
            res.breakdown.push_back({m, scale / Rational(m)});
        res.value_t = scale * sigma_minus_one(q.w());
    }
    if (!res.conjectural) {
        const InvariantResult oracle = qm_C(q, Route::wall_crossing_oracle, Mode::strict);
        if (oracle.value_t != res.value_t)
            throw RouteDisagreement("conjectural value " + res.value_t.str() + " disagrees with the oracle value " +
                                    oracle.value_t.str());
    }
    return res;
}

namespace {

Rational series_prefactor(std::int64_t g)
{
    // (2 - 2g) 2^{2g-1}
    return Rational(2 - 2 * g) * Rational(2).pow(2 * g - 1);
}

SeriesIdentity assemble(std::int64_t g, std::int64_t order, std::int64_t d, bool odd_only, int sign, Route route)
{
    if (g < 2)
        throw InvalidQuery("genus must be >= 2");
    QSeries lhs(order);
    for (std::int64_t w = 1; w <= order; ++w) {
        if (odd_only && w % 2 == 0)
            continue;
        lhs.set(w, qm_C(InvariantQuery(2, d, 1, w, g), route).value_t);
    }
    const QSeries u = series_log_product(order);
    const QSeries u_neg = series_negate_variable(u);
    const QSeries combo = sign > 0 ? u + u_neg : u - u_neg;
    QSeries rhs = series_prefactor(g) * combo;
    const bool equal = lhs == rhs;
    return {std::move(lhs), std::move(rhs), equal};
}

} // namespace

SeriesIdentity series_theorem_A(std::int64_t g, std::int64_t order, Route route)
{
    return assemble(g, order, 1, true, -1, route);
}

SeriesIdentity series_theorem_B(std::int64_t g, std::int64_t order, Route route)
{
    return assemble(g, order, 0, false, +1, route);
}

QSeries elliptic_curve_gw_series(std::int64_t order) { return -series_log_product(order); }

} // namespace hqm
