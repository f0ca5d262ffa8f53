#include "hqm/quotloc.hpp"

#include <stdexcept>
#include <string>

#include "hqm/error.hpp"

namespace hqm {

namespace {

std::string class_str(const ChernClass& u) { return "(" + std::to_string(u.u1) + ", " + std::to_string(u.u2) + ")"; }

// Builds the components of the slice recursively: parts[0..i) already fixed,
// `left` still to distribute.
void decompose(std::int64_t r, std::int64_t left, std::vector<ChernClass>& parts,
               std::vector<FixedLocusDecomposition>& out)
{
    if (static_cast<std::int64_t>(parts.size()) == r - 1) {
        parts.push_back({0, left});
        std::int64_t nonzero = 0, k = 0;
        for (const auto& p : parts)
            if (!p.is_zero()) {
                ++nonzero;
                k = p.u2;
            }
        // one nonzero part: Quot(L_j, (0, k))_0 = P^{k-1}
        std::int64_t e = nonzero == 1 ? projective_space_euler(k - 1) : 0;
        out.push_back({parts, e});
        parts.pop_back();
        return;
    }
    for (std::int64_t ki = 0; ki <= left; ++ki) {
        parts.push_back({0, ki});
        decompose(r, left - ki, parts, out);
        parts.pop_back();
    }
}

} // namespace

bool is_supported_class(std::int64_t r, const ChernClass& u) { return u.u1 == 0 || u.u1 == r - 1; }

std::vector<WallComponent> enumerate_wall_components(const InvariantQuery& q, Mode mode)
{
    const std::int64_t r = q.r(), a = q.a(), w = q.w();
    if (w < 1)
        throw DomainError("wall components need w >= 1; w = 0 is the constant-map case");
    if (a == 0)
        throw UnsupportedCase("the Quot-scheme analysis assumes a != 0");
    const CheckW cw = solve_check_w(q);

    std::vector<WallComponent> out;
    for (std::int64_t m : divisors(w)) {
        if (cw.w1 % m != 0 || cw.w2 % m != 0)
            throw UnsolvableNormalization("check-w is not divisible by m = " + std::to_string(m));
        const std::int64_t x1 = cw.w1 / m, x2 = cw.w2 / m;

        // unique h with h r - x1 in [0, r - 1]
        const std::int64_t h = floor_div(x1 + r - 1, r);
        int hits = 0;
        for (std::int64_t cand = h - 1; cand <= h + 1; ++cand) {
            std::int64_t s = cand * r - x1;
            if (s >= 0 && s <= r - 1)
                ++hits;
        }
        if (hits != 1)
            throw std::logic_error("normalizer h_m is not unique");

        WallComponent c;
        c.m = m;
        c.h_m = h;
        c.u_m = ChernClass{h * r - x1, h * a - x2};
        c.dim = quot_dimension(r, a, c.u_m);
        c.supported = is_supported_class(r, c.u_m);
        if (!c.supported && mode == Mode::strict)
            throw UnsupportedCase("Quot class u_" + std::to_string(m) + " = " + class_str(c.u_m) +
                                  " has rank component outside {0, r-1}; rerun in permissive mode for the "
                                  "conjectural value");
        c.stab_order = stabilizer_order(r, a, c.u_m, mode);
        if (c.u_m.u1 == 0)
            c.euler_slice = euler_slice_bruteforce(r, c.u_m);
        else
            c.euler_slice = projective_space_euler(c.dim - 1);
        out.push_back(c);
    }
    return out;
}

std::int64_t quot_dimension(std::int64_t r, std::int64_t a, const ChernClass& u)
{
    const std::int64_t dim = r * u.u2 - a * u.u1;
    if (dim < 0)
        throw InvalidComponent("Quot class " + class_str(u) + " has negative dimension " + std::to_string(dim));
    return dim;
}

std::int64_t stabilizer_order(std::int64_t r, std::int64_t a, const ChernClass& u, Mode mode)
{
    const std::int64_t dim = quot_dimension(r, a, u);
    if (u.u1 == r - 1)
        return torsion_order(dim);
    if (u.u1 == 0)
        return torsion_order(r * u.u2);
    if (mode == Mode::strict)
        throw UnsupportedCase("no stabilizer formula for Quot class " + class_str(u));
    return torsion_order(dim);
}

std::int64_t projective_space_euler(std::int64_t n)
{
    if (n < 0)
        throw DomainError("projective space of negative dimension");
    return n + 1;
}

std::vector<FixedLocusDecomposition> fixed_locus_decompositions(std::int64_t r, std::int64_t k)
{
    if (r < 1)
        throw DomainError("rank must be positive");
    if (k < 0)
        throw DomainError("negative degree");
    std::vector<FixedLocusDecomposition> out;
    std::vector<ChernClass> parts;
    parts.reserve(static_cast<std::size_t>(r));
    decompose(r, k, parts, out);
    return out;
}

std::int64_t euler_slice_bruteforce(std::int64_t r, const ChernClass& u)
{
    if (u.u1 != 0)
        throw DomainError("slice Euler characteristic is only enumerated for u = (0, k)");
    if (u.u2 < 1)
        throw DomainError("degenerate quotient: k must be >= 1");
    std::int64_t total = 0;
    for (const auto& fixed : fixed_locus_decompositions(r, u.u2))
        total += fixed.euler_contribution;
    if (total != r * u.u2)
        throw std::logic_error("slice Euler characteristic " + std::to_string(total) + " != r k");
    return total;
}

Rational euler_quotient_projective(std::int64_t r, std::int64_t a, const ChernClass& u)
{
    if (u.u1 != r - 1)
        throw UnsupportedCase("projective-bundle case needs u1 = r - 1, got " + class_str(u));
    const std::int64_t dim = quot_dimension(r, a, u);
    if (dim < 1)
        throw InvalidComponent("empty projective bundle for " + class_str(u));
    return Rational(projective_space_euler(dim - 1), stabilizer_order(r, a, u));
}

ZLaurent normal_bundle_inverse_expansion(std::int64_t m, std::int64_t dim, int min_exponent)
{
    if (m < 1)
        throw DomainError("divisor m must be >= 1");
    if (dim < 0)
        throw InvalidComponent("negative rank for the normal bundle");
    const EquivCoeff chern[] = {
        EquivCoeff::constant(1),
        Rational(dim) * (EquivCoeff::omega() - EquivCoeff::t()),
    };
    return chern_series_in_inverse_z(m, chern, min_exponent);
}

EquivCoeff component_virtual_class(const WallComponent& c) { return c.orbifold_euler() * EquivCoeff::omega(); }

Rational component_residue_degree(const WallComponent& c, std::int64_t g, Mode mode)
{
    if (!c.supported && mode == Mode::strict)
        throw UnsupportedCase("component m = " + std::to_string(c.m) + " is not supported in strict mode");
    const EquivCoeff residue = laurent_residue(normal_bundle_inverse_expansion(c.m, c.dim));
    const TPolynomial degree = integrate_over_curve(residue * component_virtual_class(c), g);
    // Only the t-linear part can survive: the class is a point on C.
    if (!degree.coeff(0).is_zero() || degree.degree() > 1)
        throw std::logic_error("residue degree is not t-linear: " + degree.str());
    return degree.coeff(1);
}

} // namespace hqm
