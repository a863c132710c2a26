#include "covmod/riemann_roch.hpp"

namespace covmod {

namespace {

Rational half(Int x) { return make_rational(x, 2); }

} // namespace

UniPoly hilbert_polynomial(const InvariantVector& u, const DivisorClass& H, const SurfaceProfile& surface)
{
    const auto& form = surface.form();
    check_invariant(u, surface.ns());
    surface.ns().check(H);
    const Int HH = intersect(H, H, form);
    const Int cH = intersect(u.c, H, form);
    const Int KH = intersect(surface.canonical_class(), H, form);
    const Rational t2 = Rational(u.r) * half(HH);
    const Rational t1 = Rational(cH) - Rational(u.r) * half(KH);
    return UniPoly({Rational(u.chi), t1, t2});
}

BiPoly hilbert_polynomial_HA(const InvariantVector& u, const DivisorClass& H, const DivisorClass& A,
                             const SurfaceProfile& surface)
{
    const auto& form = surface.form();
    check_invariant(u, surface.ns());
    surface.ns().check(H);
    surface.ns().check(A);
    const auto& K = surface.canonical_class();
    const Rational r(u.r);
    const Int HH = intersect(H, H, form), HA = intersect(H, A, form), AA = intersect(A, A, form);
    const Rational lin_m = Rational(intersect(u.c, H, form)) - r * half(intersect(K, H, form));
    const Rational lin_n = Rational(intersect(u.c, A, form)) - r * half(intersect(K, A, form));
    // table[n-degree][m-degree]
    std::vector<std::vector<Rational>> table(3, std::vector<Rational>(3));
    table[0][0] = u.chi;
    table[0][1] = lin_m;
    table[0][2] = r * half(HH);
    table[1][0] = lin_n;
    table[1][1] = r * Rational(HA);
    table[2][0] = r * half(AA);
    return BiPoly::from_table(table);
}

int sheaf_dimension(const InvariantVector& u, const DivisorClass& H, const SurfaceProfile& surface)
{
    if (u.r > 0)
        return 2;
    if (intersect(u.c, H, surface.form()) != 0)
        return 1;
    return 0;
}

Int discriminant(const InvariantVector& u, const SurfaceProfile& surface)
{
    check_invariant(u, surface.ns());
    const auto& form = surface.form();
    const Int cc = intersect(u.c, u.c, form);
    const Int cK = intersect(u.c, surface.canonical_class(), form);
    Int d = cc;
    d = checked_sub(d, checked_mul(checked_mul(2, u.r), u.chi));
    d = checked_add(d, checked_mul(checked_mul(2, checked_mul(u.r, u.r)), surface.chiO()));
    d = checked_sub(d, checked_mul(u.r, cK));
    return d;
}

Int euler_pairing(const InvariantVector& u, const SurfaceProfile& surface)
{
    return checked_sub(checked_mul(surface.chiO(), checked_mul(u.r, u.r)), discriminant(u, surface));
}

Rational second_chern_character(const InvariantVector& u, const SurfaceProfile& surface)
{
    const Int cK = intersect(u.c, surface.canonical_class(), surface.form());
    return Rational(u.chi) - Rational(u.r) * Rational(surface.chiO()) + half(cK);
}

InvariantVector tensor_u(const InvariantVector& u, const InvariantVector& v, const SurfaceProfile& surface)
{
    if (v.r < 1)
        throw InputError("tensor_u: the second factor must be locally free (rank >= 1)");
    const auto& ns = surface.ns();
    check_invariant(u, ns);
    check_invariant(v, ns);
    InvariantVector out;
    out.r = checked_mul(u.r, v.r);
    out.c = ns.add(ns.scale(u.c, v.r), ns.scale(v.c, u.r));
    const Rational ch2 = Rational(v.r) * second_chern_character(u, surface) +
                         Rational(intersect(u.c, v.c, surface.form())) +
                         Rational(u.r) * second_chern_character(v, surface);
    // chi = ch_2 + r chi(O) - c.K/2
    const Rational chi = ch2 + Rational(out.r) * Rational(surface.chiO()) -
                         half(intersect(out.c, surface.canonical_class(), surface.form()));
    if (!is_integer(chi))
        throw InternalError("tensor_u: non-integral Euler characteristic " + to_string(chi));
    out.chi = to_int(chi);
    return out;
}

DimReport expected_dims(const InvariantVector& u, const SurfaceProfile& surface, const CoveringProfile& cov)
{
    if (!(cov.base().form() == surface.form() && cov.base().torsion() == surface.torsion() &&
          cov.base().chiO() == surface.chiO()))
        throw InputError("expected_dims: covering is not over the given surface");
    DimReport rep;
    rep.degree = cov.degree();
    rep.chi_uu = euler_pairing(u, surface);
    rep.chi_pullback = euler_pairing(pullback_u(u, cov), cov.cover());
    rep.dimY = checked_sub(1, rep.chi_uu);
    rep.dimX = checked_sub(2, rep.chi_pullback);
    rep.assumptions.push_back("exists E with u(E) = u and f*E stable");
    rep.assumptions.push_back("dimY = ext^1(E,E) with hom(E,E) = 1 and ext^2(E,E) = 0");

    const Int n = rep.degree;
    const Int predicted = checked_add(2 - n, checked_mul(n, rep.dimY));
    if (rep.dimX != predicted)
        throw InternalError("expected_dims: dimX = " + std::to_string(rep.dimX) +
                            " disagrees with 2 - n + n dimY = " + std::to_string(predicted));

    if (surface.chiO() == 0) {
        rep.dimY_fixed_det = rep.dimY - 1;
        rep.dimX_fixed_det = checked_mul(n, *rep.dimY_fixed_det);
        if (*rep.dimX_fixed_det != rep.dimX - 2)
            throw InternalError("expected_dims: fixed-determinant dimensions are inconsistent");
        rep.assumptions.push_back("fixed determinant: dimY0 = dimY - 1, dimX0 = n dimY0");
    }
    return rep;
}

} // namespace covmod
