#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "covmod/lattice.hpp"
#include "fixtures.hpp"

using namespace covmod;

namespace {

IntersectionForm diag22() { return IntersectionForm({{2, 0}, {0, -2}}); }

// m u0 = u solvable by search over u0 in a box and torsion residues.
bool primitive_by_search(const InvariantVector& u, const TorsionGroup& tg)
{
    Int bound = std::abs(u.r) + std::abs(u.chi);
    for (Int x : u.c.free)
        bound = std::max(bound, std::abs(x));
    bound = std::max<Int>(bound, 2);
    for (Int m = 2; m <= bound; ++m) {
        bool free_ok = u.r % m == 0 && u.chi % m == 0;
        for (Int x : u.c.free)
            free_ok = free_ok && x % m == 0;
        if (!free_ok)
            continue;
        bool tors_ok = true;
        for (std::size_t i = 0; i < tg.size(); ++i) {
            bool hit = false;
            for (Int s = 0; s < tg.order(i) && !hit; ++s)
                hit = mod_floor(m * s, tg.order(i)) == u.c.tors[i];
            tors_ok = tors_ok && hit;
        }
        if (tors_ok)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("intersection pairing")
{
    const auto f = diag22();
    CHECK(intersect({{1, 0}, {}}, {{1, 0}, {}}, f) == 2);
    CHECK(intersect({{0, 0}, {}}, {{3, 7}, {}}, f) == 0);
    CHECK(intersect({{2, 1}, {}}, {{0, 1}, {}}, f) == -2);
    CHECK(intersect({{0, 0}, {1}}, {{5, 2}, {0}}, f) == 0);
    CHECK_THROWS_AS(intersect({{1}, {}}, {{1, 0}, {}}, f), InputError);
}

TEST_CASE("intersection form validation")
{
    CHECK_NOTHROW(IntersectionForm(std::vector<std::vector<Int>>{{2}}));
    CHECK_NOTHROW(IntersectionForm({{0, 1}, {1, 0}}));
    CHECK_NOTHROW(IntersectionForm(fixtures::enriques_gram()));
    CHECK_THROWS_AS(IntersectionForm(std::vector<std::vector<Int>>{{-2}}), InputError);
    CHECK_THROWS_AS(IntersectionForm({{2, 0}, {0, 2}}), InputError);
    CHECK_THROWS_AS(IntersectionForm({{1, 1}, {1, 1}}), InputError);
    CHECK_THROWS_AS(IntersectionForm({{0, 1}, {2, 0}}), InputError);
    CHECK_THROWS_AS(IntersectionForm({{0, 1}}), InputError);
    const auto sig = IntersectionForm::signature(fixtures::enriques_gram());
    CHECK(sig.positive == 1);
    CHECK(sig.negative == 9);
    // Zero diagonal everywhere still resolves the signature.
    const auto hyp = IntersectionForm::signature({{0, 1, 0}, {1, 0, 0}, {0, 0, -4}});
    CHECK(hyp.positive == 1);
    CHECK(hyp.negative == 2);
}

TEST_CASE("class order")
{
    const TorsionGroup z2({2});
    const TorsionGroup z4z6({4, 6});
    CHECK(class_order({{0, 0}, {0}}, z2) == 1);
    CHECK(class_order({{0, 0}, {1}}, z2) == 2);
    CHECK(class_order({{0, 0}, {2, 3}}, z4z6) == 2);
    CHECK(class_order({{0, 0}, {1, 4}}, z4z6) == 12);
    CHECK_FALSE(class_order({{1, 0}, {0}}, z2).has_value());
}

TEST_CASE("surface profile rules")
{
    CHECK_NOTHROW(fixtures::enriques());
    for (Int n : {2, 3, 4, 6})
        CHECK_NOTHROW(fixtures::bielliptic(n));
    NSLattice ns{diag22(), TorsionGroup({2})};
    DivisorClass k{{0, 0}, {1}};
    DivisorClass h{{1, 0}, {0}};
    CHECK_THROWS_AS(SurfaceProfile(SurfaceKind::enriques, 0, ns, k, 2, h), InputError);
    CHECK_THROWS_AS(SurfaceProfile(SurfaceKind::enriques, 1, ns, k, 3, h), InputError);
    CHECK_THROWS_AS(SurfaceProfile(SurfaceKind::enriques, 1, ns, {{0, 0}, {0}}, 2, h), InputError);
    CHECK_THROWS_AS(SurfaceProfile(SurfaceKind::bielliptic, 0, ns, k, 5, h), InputError);
    CHECK_THROWS_AS(SurfaceProfile(SurfaceKind::bielliptic, 0, ns, k, 3, h), InputError);
    CHECK_THROWS_AS(SurfaceProfile(SurfaceKind::k3, 2, ns, k, 1, h), InputError);
    CHECK_THROWS_AS(SurfaceProfile(SurfaceKind::abelian, 1, ns, {{0, 0}, {0}}, 1, h), InputError);
    CHECK_THROWS_AS(SurfaceProfile(SurfaceKind::custom, 0, ns, k, 2, {{0, 1}, {0}}), InputError);
    CHECK(SurfaceProfile(SurfaceKind::bielliptic, 0, ns, k, 4, h).nu() == 2);
}

TEST_CASE("pullback of classes")
{
    const auto y = fixtures::plain({{2, 0}, {0, -2}}, {1, 0});
    const CoveringProfile cov(y, 2, 0);
    const DivisorClass c{{1, 0}, {}};
    const auto fc = pullback_class(c, cov);
    CHECK(fc.free == std::vector<Int>{1, 0});
    CHECK(cov.cover().form().entry(0, 0) == 4);
    CHECK(cov.cover().form().entry(1, 1) == -4);
    CHECK(intersect(fc, fc, cov.cover().form()) == 4);
    CHECK(pullback_class({{0, 0}, {}}, cov).is_zero());

    const auto e = fixtures::enriques();
    const auto can = CoveringProfile::canonical(e);
    CHECK(can.cover().kind() == SurfaceKind::k3);
    CHECK(can.cover().chiO() == 2);
    CHECK(can.cover().n() == 1);
    CHECK(pullback_class(e.canonical_class(), can).is_zero());
    CHECK(can.cover().torsion().size() == 0);
}

TEST_CASE("torsion quotient maps")
{
    // Z/4 + Z/6 modulo <(2, 3)>: order 24 / 2 = 12.
    const TorsionGroup g({4, 6});
    const auto q = quotient_by_class(g, std::vector<Int>{2, 3});
    Int order = 1;
    for (Int d : q.target.orders())
        order *= d;
    CHECK(order == 12);
    // The kernel is exactly {0, (2, 3)}.
    int kernel = 0;
    for (Int a = 0; a < 4; ++a)
        for (Int b = 0; b < 6; ++b) {
            bool zero = true;
            for (std::size_t j = 0; j < q.target.size(); ++j)
                zero = zero && mod_floor(q.matrix[j][0] * a + q.matrix[j][1] * b, q.target.order(j)) == 0;
            kernel += zero;
        }
    CHECK(kernel == 2);

    const auto one = quotient_by_class(TorsionGroup({2, 3}), std::vector<Int>{1, 0});
    CHECK(one.target.orders() == std::vector<Int>{3});

    const auto id = quotient_by_class(TorsionGroup({2, 2}), std::vector<Int>{0, 0});
    CHECK(id.target.orders() == std::vector<Int>{2, 2});
}

TEST_CASE("explicit torsion maps are validated")
{
    const auto e = fixtures::enriques();
    CHECK_THROWS_AS(CoveringProfile(e, 2, 2, TorsionMap{TorsionGroup({3}), {{1}}}), InputError);
    CHECK_THROWS_AS(CoveringProfile(e, 2, 2, TorsionMap{TorsionGroup({2}), {{1}}}), InputError);
    CHECK_NOTHROW(CoveringProfile(e, 2, 2, TorsionMap{TorsionGroup(), {}}));
    CHECK_THROWS_AS(CoveringProfile(e, 2, 3), InputError);
    CHECK_THROWS_AS(CoveringProfile(e, 3, 3), InputError);
}

TEST_CASE("pullback of invariant vectors")
{
    const auto e = fixtures::enriques();
    const auto cov = CoveringProfile::canonical(e);
    const InvariantVector hauzer{2, fixtures::enriques_F1(), 1};
    const auto fu = pullback_u(hauzer, cov);
    CHECK(fu.r == 2);
    CHECK(fu.chi == 2);
    CHECK(fu.c.free == fixtures::enriques_F1().free);
    CHECK(pullback_u(InvariantVector{0, {std::vector<Int>(10, 0), {0}}, 0}, cov).is_zero());
    for (Int t = 1; t <= 5; ++t) {
        const auto p = pullback_u(InvariantVector{1, {std::vector<Int>(10, 0), {0}}, 1 - t}, cov);
        CHECK(p.chi == 2 - 2 * t);
    }
}

TEST_CASE("primitivity")
{
    const TorsionGroup none;
    const TorsionGroup z2({2});
    CHECK_FALSE(is_primitive({2, {{2, 0}, {}}, 4}, none));
    CHECK(is_primitive({2, {{1, 0}, {}}, 1}, none));
    CHECK(is_primitive({0, {{2, 0}, {1}}, 2}, z2));
    CHECK_FALSE(is_primitive({0, {{3, 0}, {1}}, 3}, z2));
    CHECK_FALSE(is_primitive({0, {{0, 0}, {1}}, 0}, z2));
    CHECK_THROWS_AS(is_primitive({0, {{0, 0}, {}}, 0}, none), InputError);
    CHECK_FALSE(is_primitive({0, {{1000003 * 2, 0}, {}}, 1000003}, none));
}

TEST_CASE("primitivity agrees with exhaustive search")
{
    std::mt19937_64 rng(7);
    const TorsionGroup tg({2, 4});
    std::uniform_int_distribution<Int> small(-12, 12);
    for (int it = 0; it < 3000; ++it) {
        InvariantVector u{std::abs(small(rng)), {{small(rng), small(rng)}, {mod_floor(small(rng), 2), mod_floor(small(rng), 4)}}, small(rng)};
        if (u.r % 3 == 0) {
            u.c.free = {6 * small(rng), 6 * small(rng)};
            u.chi = 6 * small(rng);
            u.r = 6 * std::abs(small(rng));
        }
        if (u.is_zero() || (u.r == 0 && u.chi == 0 && u.c.free_is_zero()))
            continue;
        CHECK(is_primitive(u, tg) == primitive_by_search(u, tg));
    }
}

TEST_CASE("pullback scales the pairing and primitivity descends")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Int> coord(-9, 9);
    const auto e = fixtures::enriques();
    for (Int deg : {2, 3, 5}) {
        const auto y = fixtures::plain({{2, 1, 0}, {1, -2, 0}, {0, 0, -6}}, {1, 0, 0});
        const CoveringProfile cov(y, deg, 0);
        for (int it = 0; it < 500; ++it) {
            DivisorClass a{{coord(rng), coord(rng), coord(rng)}, {}};
            DivisorClass b{{coord(rng), coord(rng), coord(rng)}, {}};
            CHECK(intersect(pullback_class(a, cov), pullback_class(b, cov), cov.cover().form()) ==
                  deg * intersect(a, b, y.form()));
            InvariantVector u{std::abs(coord(rng)), a, coord(rng)};
            if (u.is_zero())
                continue;
            if (is_primitive(pullback_u(u, cov), cov.cover().torsion()))
                CHECK(is_primitive(u, y.torsion()));
        }
    }
    const auto can = CoveringProfile::canonical(e);
    for (int it = 0; it < 500; ++it) {
        std::vector<Int> v(10);
        for (auto& x : v)
            x = coord(rng);
        InvariantVector u{std::abs(coord(rng)), {v, {static_cast<Int>(it % 2)}}, coord(rng)};
        if (u.r == 0 && u.chi == 0 && u.c.free_is_zero())
            continue;
        if (is_primitive(pullback_u(u, can), can.cover().torsion()))
            CHECK(is_primitive(u, e.torsion()));
    }
}
