#include "covmod/albanese.hpp"

namespace covmod {

namespace {

Rational frac(const Rational& q)
{
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    BigInt r = num % den;
    if (r < 0)
        r += den;
    return Rational(r, den);
}

Matrix2 mul(const Matrix2& a, const Matrix2& b)
{
    Matrix2 out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return out;
}

constexpr Matrix2 identity{{{1, 0}, {0, 1}}};

// Subgroup of Q^2/Z^2 generated by p.
std::vector<TorusPoint> cyclic(const TorusPoint& p)
{
    std::vector<TorusPoint> out;
    TorusPoint q;
    do {
        out.push_back(q);
        q = q + p;
    } while (!q.is_zero());
    return out;
}

} // namespace

TorusPoint TorusPoint::make(const Rational& x, const Rational& y)
{
    return TorusPoint{frac(x), frac(y)};
}

Int TorusPoint::order() const
{
    const BigInt l = boost::multiprecision::lcm(boost::multiprecision::denominator(x),
                                                boost::multiprecision::denominator(y));
    return l.convert_to<Int>();
}

TorusPoint BiellipticAction::rotate(const TorusPoint& b, Int k) const
{
    TorusPoint out = b;
    for (Int i = 0; i < mod_floor(k, n); ++i)
        out = TorusPoint::make(rho[0][0] * out.x + rho[0][1] * out.y, rho[1][0] * out.x + rho[1][1] * out.y);
    return out;
}

bool admissible_pair(Int n, Int m)
{
    switch (n) {
    case 2: return m == 1 || m == 2;
    case 3: return m == 1 || m == 3;
    case 4: return m == 1 || m == 2;
    case 6: return m == 1;
    default: return false;
    }
}

Matrix2 canonical_rho(Int n)
{
    switch (n) {
    case 2: return {{{-1, 0}, {0, -1}}};
    case 3: return {{{0, -1}, {1, -1}}};
    case 4: return {{{0, -1}, {1, 0}}};
    case 6: return {{{1, -1}, {1, 0}}};
    default: throw InputError("no bielliptic action of order " + std::to_string(n));
    }
}

BiellipticAction make_action(Int n, Int m, std::optional<TorusPoint> g, std::optional<TorusPoint> a,
                             std::optional<TorusPoint> c0)
{
    if (!admissible_pair(n, m))
        throw InputError("(n, m) = (" + std::to_string(n) + ", " + std::to_string(m) +
                         ") is not a bielliptic type; admissible: (2,1) (2,2) (3,1) (3,3) (4,1) (4,2) (6,1)");
    BiellipticAction act;
    act.n = n;
    act.m = m;
    act.rho = canonical_rho(n);
    act.g = g ? TorusPoint::make(g->x, g->y) : TorusPoint::make(make_rational(1, n), 0);
    act.c0 = c0 ? TorusPoint::make(c0->x, c0->y) : TorusPoint::make(0, make_rational(1, m));
    if (a) {
        act.a = TorusPoint::make(a->x, a->y);
    } else if (m == 2 && n == 2) {
        act.a = TorusPoint::make(make_rational(1, 2), 0);
    } else if (m == 2) {
        act.a = TorusPoint::make(make_rational(1, 2), make_rational(1, 2));
    } else if (m == 3) {
        act.a = TorusPoint::make(make_rational(1, 3), make_rational(2, 3));
    }

    Matrix2 p = identity;
    for (Int k = 1; k <= n; ++k) {
        p = mul(p, act.rho);
        if ((p == identity) != (k == n))
            throw InternalError("rho does not have order n");
    }
    if (act.g.order() != n)
        throw InputError("g must have order n = " + std::to_string(n));
    if (act.c0.order() != m)
        throw InputError("c0 must have order m = " + std::to_string(m));
    for (const auto& x : cyclic(act.g))
        if (!x.is_zero())
            for (const auto& y : cyclic(act.c0))
                if (x == y)
                    throw InputError("g and c0 must generate Z/n x Z/m");
    return act;
}

ProductPoint reduce_mod_m(const ProductPoint& p, const BiellipticAction& act)
{
    ProductPoint best{TorusPoint::make(p.b.x, p.b.y), TorusPoint::make(p.c.x, p.c.y)};
    ProductPoint cur = best;
    for (Int k = 1; k < act.m; ++k) {
        cur = cur + ProductPoint{act.a, act.c0};
        if (cur < best)
            best = cur;
    }
    return best;
}

SumReport sum_pushforward(const ZeroCycle& cycle, const BiellipticAction& act)
{
    const Int n = act.n;
    ProductPoint direct;
    ProductPoint closed;
    for (const auto& t : cycle) {
        ProductPoint orbit;
        TorusPoint b = t.b;
        TorusPoint c = t.c;
        for (Int k = 0; k < n; ++k) {
            orbit = orbit + ProductPoint{b, c};
            b = act.rotate(b);
            c = c + act.g;
        }
        direct = direct + ProductPoint{orbit.b.scaled(t.a), orbit.c.scaled(t.a)};
        const TorusPoint cf = t.c.scaled(n) + act.g.scaled(n * (n - 1) / 2);
        closed = closed + ProductPoint{TorusPoint{}, cf.scaled(t.a)};
    }
    SumReport rep;
    rep.b_component_zero = direct.b.is_zero();
    rep.direct = reduce_mod_m(direct, act);
    rep.closed_form = reduce_mod_m(closed, act);
    if (rep.direct != rep.closed_form)
        throw InternalError("orbit sum disagrees with the closed form");
    return rep;
}

ZeroCycle random_cycle(std::mt19937_64& rng, std::size_t terms, Int max_order)
{
    std::uniform_int_distribution<Int> coef(-5, 5);
    std::uniform_int_distribution<Int> ord(1, max_order);
    auto point = [&]() {
        const Int d = ord(rng);
        std::uniform_int_distribution<Int> res(0, d - 1);
        return TorusPoint::make(make_rational(res(rng), d), make_rational(res(rng), d));
    };
    ZeroCycle z;
    for (std::size_t i = 0; i < terms; ++i)
        z.push_back(CycleTerm{coef(rng), point(), point()});
    return z;
}

ImageBound image_dimension_bound(const BiellipticAction& act, Int cycles, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    ImageBound out;
    for (Int i = 0; i < cycles; ++i) {
        const auto rep = sum_pushforward(random_cycle(rng), act);
        out.b_component_zero = out.b_component_zero && rep.b_component_zero;
        ++out.cycles;
    }
    out.dimension_bound = out.b_component_zero ? 1 : 2;
    return out;
}

} // namespace covmod
