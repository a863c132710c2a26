#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "covmod/riemann_roch.hpp"
#include "covmod/walls.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace covmod;

namespace {

// diag(2, -2), ample (1, 0), chi(O) = 0, K = 0
SurfaceProfile hyp() { return fixtures::plain({{2, 0}, {0, -2}}, {1, 0}); }

DivisorClass cls(std::vector<Int> v) { return DivisorClass{std::move(v), {}}; }

// r = 2, c = 0, chi = -1: Delta = 4, bound 4
InvariantVector u4() { return InvariantVector{2, cls({0, 0}), -1}; }

ConeRegion region(std::vector<std::vector<Int>> gens, const SurfaceProfile& s)
{
    std::vector<std::vector<Rational>> g;
    for (const auto& h : gens) {
        std::vector<Rational> q;
        for (Int x : h)
            q.emplace_back(x);
        g.push_back(q);
    }
    return ConeRegion(g, s);
}

} // namespace

TEST_CASE("enumerate walls on diag(2,-2)")
{
    const auto s = hyp();
    CHECK(discriminant(u4(), s) == 4);
    CHECK(wall_bound(u4(), s) == 4);
    const auto walls = enumerate_walls(u4(), s, region({{1, 0}, {2, 1}}, s));
    REQUIRE(walls.size() == 1);
    CHECK(walls[0].xi == std::vector<Int>{0, 1});
    CHECK(walls[0].xi_square == -2);

    CHECK(enumerate_walls(u4(), s, region({{2, 1}, {3, 1}}, s)).empty());

    // Bound 2, but 2a^2 - 6b^2 = -2 has no solution mod 3.
    const auto s6 = fixtures::plain({{2, 0}, {0, -6}}, {1, 0});
    const InvariantVector small{2, cls({1, 0}), 0};
    CHECK(wall_bound(small, s6) == 2);
    CHECK(enumerate_walls(small, s6, region({{1, 0}, {3, 1}}, s6)).empty());
}

TEST_CASE("rational region generators are rescaled")
{
    const auto s = hyp();
    const ConeRegion reg({{make_rational(1, 2), 0}, {1, make_rational(1, 2)}}, s);
    CHECK(reg.integral()[0] == std::vector<Int>{1, 0});
    CHECK(reg.integral()[1] == std::vector<Int>{2, 1});
    CHECK(enumerate_walls(u4(), s, reg).size() == 1);
}

TEST_CASE("enumerate walls input errors")
{
    const auto s = hyp();
    CHECK_THROWS_AS(enumerate_walls({1, cls({0, 0}), -3}, s, region({{1, 0}}, s)), InputError);
    CHECK_THROWS_AS(enumerate_walls({2, cls({0, 0}), 1}, s, region({{1, 0}}, s)), InputError);
    CHECK_THROWS_AS(region({{0, 1}}, s), InputError);  // negative square
    CHECK_THROWS_AS(region({{-1, 0}}, s), InputError); // wrong cone component
    CHECK_THROWS_AS(region({}, s), InputError);
}

TEST_CASE("is_general")
{
    const auto s = hyp();
    auto g = is_general(cls({1, 0}), u4(), s);
    CHECK_FALSE(g.general);
    REQUIRE(g.witness);
    CHECK(g.witness->xi == std::vector<Int>{0, 1});
    CHECK(is_general(cls({2, 1}), u4(), s).general);
    CHECK(is_general(cls({1, 0}), {1, cls({0, 1}), 3}, s).general);
    CHECK_THROWS_AS(is_general(cls({1, 0}), {0, cls({1, 1}), 1}, s), InputError);
}

TEST_CASE("zero rank walls")
{
    const auto s = hyp();
    const InvariantVector u{0, cls({1, 1}), 1};
    const auto w = zero_rank_wall(u, {cls({1, 0}), 1}, s);
    REQUIRE(w);
    CHECK(w->L == std::vector<Int>{0, 1});
    CHECK(w->wall.xi_square == -2);
    CHECK_FALSE(zero_rank_wall(u, {cls({1, 1}), 1}, s));
    const auto none = zero_rank_wall({0, cls({2, 0}), 1}, {cls({1, 0}), 1}, s);
    CHECK_FALSE(none);

    const auto g = is_general(cls({1, 0}), u, s, {{cls({1, 0}), 1}});
    CHECK(g.relative_to_candidates);
    CHECK_FALSE(g.general);
    CHECK(g.witness_L == std::vector<Int>{0, 1});
    CHECK(is_general(cls({2, 1}), u, s, {{cls({1, 0}), 1}}).general);
}

TEST_CASE("shift chi")
{
    const auto s = hyp();
    const InvariantVector u{0, cls({3, 1}), 0};
    const auto H = cls({1, 0});
    CHECK(intersect(u.c, H, s.form()) == 6);
    const auto one = shift_chi(u, H, s);
    CHECK(one.u.chi == 6);
    CHECK_FALSE(one.degenerate);
    CHECK(shift_chi(one.u, H, s).u.chi == shift_chi(u, H, s, 2).u.chi);
    const auto deg = shift_chi({0, cls({0, 1}), 5}, H, s);
    CHECK(deg.degenerate);
    CHECK(deg.u.chi == 5);
    CHECK_THROWS_AS(shift_chi(u4(), H, s), InputError);
}

TEST_CASE("shift chi by three")
{
    const auto s = fixtures::plain({{0, 1}, {1, 0}}, {1, 1});
    const auto r = shift_chi({0, cls({1, 2}), 0}, cls({1, 1}), s);
    CHECK(r.u.chi == 3);
}

TEST_CASE("transfer generality")
{
    // Base with chi(O) = 1 and torsion K of order 2 on diag(2,-2).
    NSLattice ns{IntersectionForm(std::vector<std::vector<Int>>{{2, 0}, {0, -2}}), TorsionGroup({2})};
    SurfaceProfile base(SurfaceKind::custom, 1, ns, DivisorClass{{0, 0}, {1}}, 2, DivisorClass{{1, 0}, {0}});
    const auto cov = CoveringProfile::canonical(base);
    // r = 2, c = 0, chi = 3: Delta = -12 + 8 = -4. Use chi = 1: Delta = -4 + 8 = 4.
    const InvariantVector u{2, DivisorClass{{0, 0}, {0}}, 1};
    REQUIRE(discriminant(u, base) == 4);
    const auto rep = transfer_generality(DivisorClass{{1, 0}, {0}}, u, cov);
    CHECK(rep.cover_delta == 2 * rep.base_delta);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].xi_square == -2);
    CHECK(rep.rows[0].cover_square == -4);
    CHECK(rep.rows[0].cover_wall_valid);
    CHECK(rep.rows[0].pairing_scales);
    CHECK(rep.rows[0].base_on_wall);
    CHECK(rep.rows[0].cover_on_wall);
    CHECK_FALSE(rep.cover_general);
    CHECK(rep.implication_holds);

    const auto off = transfer_generality(DivisorClass{{2, 1}, {0}}, u, cov);
    CHECK(off.vacuous);
    CHECK(off.base_general);
    CHECK(off.cover_general);
    CHECK(off.implication_holds);
}

TEST_CASE("enumeration matches the box oracle")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        const auto w = oracle::random_wall_instance(rng, t % 2 ? 3 : 2, 100, 40);
        const auto s = oracle::surface_of(w);
        const InvariantVector u{w.r, cls(w.c), w.chi};
        REQUIRE(wall_bound(u, s) == w.B);
        const auto got = enumerate_walls(u, s, oracle::region_of(w, s));
        const auto want = oracle::box_walls(w);
        CHECK(got == want);
        for (const auto& x : got) {
            CHECK(x.xi_square < 0);
            CHECK(x.xi_square >= -w.B);
            std::vector<Int> neg = x.xi;
            for (auto& v : neg)
                v = -v;
            CHECK(std::find_if(got.begin(), got.end(), [&](const Wall& y) { return y.xi == neg; }) == got.end());
        }
    }
}

TEST_CASE("generality upstairs never coexists with a base wall through H")
{
    std::mt19937_64 rng(11);
    int checked = 0;
    for (int t = 0; t < 30; ++t) {
        const auto w = oracle::random_wall_instance(rng, 2, 60, 40);
        const std::size_t rho = w.gram.size();
        NSLattice ns{IntersectionForm(w.gram), TorsionGroup({2})};
        SurfaceProfile base(SurfaceKind::custom, 0, ns, DivisorClass{std::vector<Int>(rho, 0), {1}}, 2,
                            DivisorClass{w.ample, {0}});
        const auto cov = CoveringProfile::canonical(base);
        const InvariantVector u{w.r, DivisorClass{w.c, {0}}, w.chi};
        const DivisorClass H{w.region[0], {0}};
        const auto rep = transfer_generality(H, u, cov);
        CHECK(rep.implication_holds);
        CHECK(rep.cover_delta == cov.degree() * rep.base_delta);
        for (const auto& row : rep.rows) {
            CHECK(row.cover_wall_valid);
            CHECK(row.pairing_scales);
        }
        ++checked;
    }
    CHECK(checked == 30);
}
