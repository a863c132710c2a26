#include "covmod/walls.hpp"

#include <algorithm>

#include "covmod/riemann_roch.hpp"

namespace covmod {

namespace {

Int vec_gcd(const std::vector<Int>& v)
{
    Int g = 0;
    for (Int x : v)
        g = gcd(g, x);
    return g;
}

// Primitive, first nonzero coordinate positive.
std::vector<Int> normalized(std::vector<Int> v)
{
    const Int g = vec_gcd(v);
    if (g == 0)
        return v;
    Int sign = 1;
    for (Int x : v)
        if (x != 0) {
            sign = x > 0 ? 1 : -1;
            break;
        }
    for (auto& x : v)
        x = x / g * sign;
    return v;
}

bool sign_normalized(const std::vector<Int>& v)
{
    for (Int x : v)
        if (x != 0)
            return x > 0;
    return false;
}

std::vector<Int> to_integral(const std::vector<Rational>& g)
{
    BigInt den = 1;
    for (const auto& x : g)
        den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
    std::vector<Int> out;
    out.reserve(g.size());
    for (const auto& x : g) {
        const Rational s = x * Rational(den);
        out.push_back(to_int(s));
    }
    const Int d = vec_gcd(out);
    if (d > 1)
        for (auto& x : out)
            x /= d;
    return out;
}

// Exact short-vector enumeration for a positive definite integer Gram matrix:
// calls visit(x) for every integer x with x^T G x <= radius.
class ShortVectors {
public:
    ShortVectors(const std::vector<std::vector<Int>>& G, const Rational& radius) : n_(G.size()), radius_(radius)
    {
        // Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2
        std::vector<std::vector<Rational>> a(n_, std::vector<Rational>(n_));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                a[i][j] = G[i][j];
        d_.assign(n_, 0);
        mu_.assign(n_, std::vector<Rational>(n_, 0));
        for (std::size_t i = 0; i < n_; ++i) {
            d_[i] = a[i][i];
            if (d_[i] <= 0)
                throw InternalError("short-vector form is not positive definite");
            for (std::size_t j = i + 1; j < n_; ++j)
                mu_[i][j] = a[i][j] / d_[i];
            for (std::size_t j = i + 1; j < n_; ++j)
                for (std::size_t k = i + 1; k < n_; ++k)
                    a[j][k] -= mu_[i][j] * a[i][k];
        }
    }

    template <typename Visit>
    void run(Visit&& visit)
    {
        std::vector<Int> x(n_, 0);
        recurse(static_cast<int>(n_) - 1, radius_, x, visit);
    }

private:
    template <typename Visit>
    void recurse(int i, const Rational& budget, std::vector<Int>& x, Visit& visit)
    {
        if (i < 0) {
            visit(x);
            return;
        }
        Rational c = 0;
        for (std::size_t j = i + 1; j < n_; ++j)
            c -= mu_[i][j] * x[j];
        const Rational beta = budget / d_[i];
        const BigInt s = floor_sqrt(beta);
        const BigInt fl = boost::multiprecision::numerator(c) / boost::multiprecision::denominator(c);
        const BigInt lo_big = fl - s - 2, hi_big = fl + s + 2;
        const Int lo = lo_big.convert_to<Int>(), hi = hi_big.convert_to<Int>();
        for (Int v = lo; v <= hi; ++v) {
            const Rational diff = Rational(v) - c;
            const Rational used = d_[i] * diff * diff;
            if (used > budget)
                continue;
            x[i] = v;
            recurse(i - 1, budget - used, x, visit);
        }
        x[i] = 0;
    }

    std::size_t n_;
    Rational radius_;
    std::vector<Rational> d_;
    std::vector<std::vector<Rational>> mu_;
};

Int require_positive_delta(const InvariantVector& u, const SurfaceProfile& surface)
{
    if (u.r < 2)
        throw InputError("walls are defined for rank >= 2 (rank 1: the whole ample cone is one chamber)");
    const Int delta = discriminant(u, surface);
    if (delta <= 0)
        throw InputError("walls need a positive discriminant, got Delta = " + std::to_string(delta));
    return delta;
}

} // namespace

ConeRegion::ConeRegion(std::vector<std::vector<Rational>> generators, const SurfaceProfile& surface)
    : generators_(std::move(generators))
{
    if (generators_.empty())
        throw InputError("region needs at least one generator");
    const auto& form = surface.form();
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i].size() != form.rank())
            throw InputError("region generator " + std::to_string(i) + " has length " +
                             std::to_string(generators_[i].size()) + ", expected " + std::to_string(form.rank()));
        auto h = to_integral(generators_[i]);
        if (form.square(h) <= 0)
            throw InputError("region generator " + std::to_string(i) + " must have positive square");
        if (form.pair(h, surface.ample_witness().free) <= 0)
            throw InputError("region generator " + std::to_string(i) +
                             " lies outside the positive cone component of the ample witness");
        integral_.push_back(std::move(h));
    }
}

ConeRegion ConeRegion::of_class(const DivisorClass& h, const SurfaceProfile& surface)
{
    surface.ns().check(h);
    std::vector<Rational> g;
    for (Int x : h.free)
        g.emplace_back(x);
    return ConeRegion({g}, surface);
}

Int wall_bound(const InvariantVector& u, const SurfaceProfile& surface)
{
    const Int delta = discriminant(u, surface);
    if (delta <= 0)
        return 0;
    return checked_mul(checked_mul(u.r, u.r), delta) / 4;
}

std::vector<Wall> enumerate_walls(const InvariantVector& u, const SurfaceProfile& surface, const ConeRegion& region)
{
    require_positive_delta(u, surface);
    const Int B = wall_bound(u, surface);
    const auto& form = surface.form();
    const std::size_t rho = form.rank();
    const auto& gens = region.integral();

    std::vector<Int> h0(rho, 0);
    for (const auto& h : gens)
        for (std::size_t i = 0; i < rho; ++i)
            h0[i] = checked_add(h0[i], h[i]);
    const Int h0sq = form.square(h0);

    // gamma = min_i h0^2 h_i^2 / (h0.h_i)^2 lies in (0, 1].
    Rational gamma = 1;
    for (const auto& h : gens) {
        const Rational hh0(form.pair(h, h0));
        const Rational g = Rational(h0sq) * Rational(form.square(h)) / (hh0 * hh0);
        gamma = std::min(gamma, g);
    }
    // Scaled by h0^2: h0^2 Q(xi) = 2 (xi.h0)^2 - h0^2 xi^2 <= h0^2 B + 2 T^2.
    const Rational T2 = Rational(h0sq) * (1 - gamma) * Rational(B) / gamma;
    const Rational radius = Rational(h0sq) * Rational(B) + 2 * T2;

    const auto v = form.apply(h0);
    std::vector<std::vector<Int>> G(rho, std::vector<Int>(rho));
    for (std::size_t i = 0; i < rho; ++i)
        for (std::size_t j = 0; j < rho; ++j)
            G[i][j] = checked_sub(checked_mul(2, checked_mul(v[i], v[j])), checked_mul(h0sq, form.entry(i, j)));

    std::vector<Wall> walls;
    ShortVectors sv(G, radius);
    sv.run([&](const std::vector<Int>& xi) {
        if (!sign_normalized(xi) || vec_gcd(xi) != 1)
            return;
        const Int sq = form.square(xi);
        if (sq >= 0 || sq < -B)
            return;
        Int lo = 0, hi = 0;
        bool first = true;
        for (const auto& h : gens) {
            const Int p = form.pair(xi, h);
            lo = first ? p : std::min(lo, p);
            hi = first ? p : std::max(hi, p);
            first = false;
        }
        if (lo <= 0 && 0 <= hi)
            walls.push_back(Wall{xi, sq});
    });
    std::sort(walls.begin(), walls.end(), [](const Wall& a, const Wall& b) {
        if (a.xi_square != b.xi_square)
            return a.xi_square < b.xi_square;
        return a.xi < b.xi;
    });
    return walls;
}

std::optional<ZeroRankWall> zero_rank_wall(const InvariantVector& u, const SubInvariant& sub,
                                           const SurfaceProfile& surface)
{
    if (u.r != 0)
        throw InputError("zero_rank_wall needs rank 0");
    surface.ns().check(sub.c);
    check_invariant(u, surface.ns());
    if (u.c.free_is_zero())
        throw InputError("zero_rank_wall needs a nonzero first Chern class");
    std::vector<Int> L(u.c.free.size());
    for (std::size_t i = 0; i < L.size(); ++i)
        L[i] = checked_sub(checked_mul(sub.chi, u.c.free[i]), checked_mul(u.chi, sub.c.free[i]));
    if (vec_gcd(L) == 0)
        return std::nullopt;
    const auto xi = normalized(L);
    const Int sq = surface.form().square(xi);
    if (sq >= 0)
        return std::nullopt;
    return ZeroRankWall{Wall{xi, sq}, L};
}

GeneralityReport is_general(const DivisorClass& H, const InvariantVector& u, const SurfaceProfile& surface,
                            const std::vector<SubInvariant>& candidates)
{
    surface.ns().check(H);
    check_invariant(u, surface.ns());
    GeneralityReport rep;
    if (u.r == 1) {
        rep.note = "rank 1: the whole ample cone is the only chamber";
        return rep;
    }
    if (u.r >= 2) {
        if (discriminant(u, surface) <= 0) {
            rep.note = "Delta <= 0: no walls";
            return rep;
        }
        const auto walls = enumerate_walls(u, surface, ConeRegion::of_class(H, surface));
        if (!walls.empty()) {
            rep.general = false;
            rep.witness = walls.front();
        }
        return rep;
    }
    if (candidates.empty())
        throw InputError("rank 0 generality needs candidate sub-invariants");
    rep.relative_to_candidates = true;
    rep.note = "general relative to the supplied candidate sub-invariants";
    if (u.chi == 0)
        rep.note += "; chi = 0, stability does not depend on H (shift chi first)";
    for (const auto& sub : candidates) {
        const auto w = zero_rank_wall(u, sub, surface);
        if (w && intersect(DivisorClass{w->wall.xi, {}}, DivisorClass{H.free, {}}, surface.form()) == 0) {
            rep.general = false;
            rep.witness = w->wall;
            rep.witness_L = w->L;
            break;
        }
    }
    return rep;
}

ShiftResult shift_chi(const InvariantVector& u, const DivisorClass& H, const SurfaceProfile& surface, Int k)
{
    if (u.r != 0)
        throw InputError("shift_chi needs rank 0");
    check_invariant(u, surface.ns());
    surface.ns().check(H);
    const Int cH = intersect(u.c, H, surface.form());
    ShiftResult out{u, cH == 0};
    out.u.chi = checked_add(u.chi, checked_mul(k, cH));
    return out;
}

TransferReport transfer_generality(const DivisorClass& H, const InvariantVector& u, const CoveringProfile& cov,
                                   const std::vector<SubInvariant>& candidates)
{
    const SurfaceProfile& base = cov.base();
    const SurfaceProfile& cover = cov.cover();
    const Int deg = cov.degree();
    TransferReport rep;
    rep.degree = deg;
    rep.base_delta = discriminant(u, base);
    const auto fu = pullback_u(u, cov);
    rep.cover_delta = discriminant(fu, cover);
    const auto fH = cov.pull(H);

    if (u.r == 1) {
        rep.vacuous = true;
        return rep;
    }
    if (u.r >= 2) {
        if (rep.base_delta <= 0) {
            rep.vacuous = true;
            return rep;
        }
        const Int cover_bound = wall_bound(fu, cover);
        for (const auto& w : enumerate_walls(u, base, ConeRegion::of_class(H, base))) {
            TransferRow row;
            row.xi = w.xi;
            row.xi_square = w.xi_square;
            const DivisorClass fxi = cov.pull(DivisorClass{w.xi, std::vector<Int>(base.torsion().size(), 0)});
            row.cover_square = intersect(fxi, fxi, cover.form());
            row.cover_bound = cover_bound;
            row.cover_wall_valid = row.cover_square == deg * w.xi_square && -cover_bound <= row.cover_square &&
                                   row.cover_square < 0;
            row.xi_dot_H = intersect(DivisorClass{w.xi, {}}, DivisorClass{H.free, {}}, base.form());
            row.cover_dot_H = intersect(fxi, fH, cover.form());
            row.pairing_scales = row.cover_dot_H == deg * row.xi_dot_H;
            row.base_on_wall = row.xi_dot_H == 0;
            row.cover_on_wall = row.cover_dot_H == 0;
            rep.rows.push_back(std::move(row));
        }
        rep.base_general = rep.rows.empty();
        rep.cover_general = is_general(fH, fu, cover).general;
    } else {
        if (candidates.empty())
            throw InputError("rank 0 transfer needs candidate sub-invariants");
        std::vector<SubInvariant> lifted;
        for (const auto& sub : candidates) {
            lifted.push_back(SubInvariant{cov.pull(sub.c), checked_mul(deg, sub.chi)});
            const auto w = zero_rank_wall(u, sub, base);
            if (!w)
                continue;
            TransferRow row;
            row.xi = w->wall.xi;
            row.xi_square = w->wall.xi_square;
            // L~ = deg f^*L computed from the lifted data.
            std::vector<Int> Lt(fu.c.free.size());
            for (std::size_t i = 0; i < Lt.size(); ++i)
                Lt[i] = checked_sub(checked_mul(lifted.back().chi, fu.c.free[i]),
                                  checked_mul(fu.chi, lifted.back().c.free[i]));
            const DivisorClass Ltc{Lt, {}};
            const DivisorClass Lc{w->L, {}};
            row.cover_square = intersect(Ltc, Ltc, cover.form());
            row.cover_wall_valid = row.cover_square == deg * deg * deg * intersect(Lc, Lc, base.form()) &&
                                   row.cover_square < 0;
            row.xi_dot_H = intersect(Lc, DivisorClass{H.free, {}}, base.form());
            row.cover_dot_H = intersect(Ltc, DivisorClass{fH.free, {}}, cover.form());
            row.pairing_scales = row.cover_dot_H == deg * deg * row.xi_dot_H;
            row.base_on_wall = row.xi_dot_H == 0;
            row.cover_on_wall = row.cover_dot_H == 0;
            rep.rows.push_back(std::move(row));
        }
        rep.base_general = is_general(H, u, base, candidates).general;
        rep.cover_general = is_general(fH, fu, cover, lifted).general;
    }
    rep.vacuous = rep.rows.empty();
    for (const auto& row : rep.rows)
        if (row.cover_on_wall && !row.base_on_wall)
            rep.implication_holds = false;
    if (rep.cover_general && !rep.base_general)
        rep.implication_holds = false;
    return rep;
}

} // namespace covmod
