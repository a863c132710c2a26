#pragma once

#include <vector>

#include "covmod/lattice.hpp"

namespace fixtures {

using covmod::DivisorClass;
using covmod::Int;
using covmod::IntersectionForm;
using covmod::NSLattice;
using covmod::SurfaceKind;
using covmod::SurfaceProfile;
using covmod::TorsionGroup;

// U + E8(-1): the Neron-Severi lattice of an Enriques surface modulo torsion.
inline std::vector<std::vector<Int>> enriques_gram()
{
    std::vector<std::vector<Int>> m(10, std::vector<Int>(10, 0));
    m[0][1] = m[1][0] = 1;
    for (int i = 2; i < 10; ++i)
        m[i][i] = -2;
    // E8 Dynkin diagram on nodes 0..7: chain 0-2-3-4-5-6-7 with 1 attached to 3.
    const int edges[7][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
    for (auto [a, b] : edges)
        m[2 + a][2 + b] = m[2 + b][2 + a] = 1;
    return m;
}

inline DivisorClass free_class(std::vector<Int> v, std::size_t tors = 0)
{
    return DivisorClass{std::move(v), std::vector<Int>(tors, 0)};
}

inline std::vector<Int> unit(std::size_t rank, std::size_t i, Int x = 1)
{
    std::vector<Int> v(rank, 0);
    v[i] = x;
    return v;
}

// Enriques surface with a half-fibre F1 = e_0 (isotropic) and H = e_0 + e_1.
inline SurfaceProfile enriques()
{
    NSLattice ns{IntersectionForm(enriques_gram()), TorsionGroup({2})};
    std::vector<Int> h(10, 0);
    h[0] = h[1] = 1;
    return SurfaceProfile(SurfaceKind::enriques, 1, ns, DivisorClass{std::vector<Int>(10, 0), {1}}, 2,
                          DivisorClass{h, {0}});
}

inline DivisorClass enriques_F1() { return DivisorClass{unit(10, 0), {0}}; }

inline DivisorClass enriques_H()
{
    std::vector<Int> h(10, 0);
    h[0] = h[1] = 1;
    return DivisorClass{h, {0}};
}

// Bielliptic model with free part U and torsion chosen so nu | n.
inline SurfaceProfile bielliptic(Int n)
{
    IntersectionForm u({{0, 1}, {1, 0}});
    std::vector<Int> torsion;
    std::vector<Int> k;
    if (n == 2 || n == 4) {
        torsion = {2};
        k = {1};
    } else if (n == 3) {
        torsion = {3};
        k = {1};
    }
    NSLattice ns{u, TorsionGroup(torsion)};
    return SurfaceProfile(SurfaceKind::bielliptic, 0, ns, DivisorClass{{0, 0}, k}, n,
                          DivisorClass{{1, 1}, std::vector<Int>(torsion.size(), 0)});
}

// Custom surface without torsion; K = 0.
inline SurfaceProfile plain(std::vector<std::vector<Int>> gram, std::vector<Int> ample, Int chiO = 0)
{
    const std::size_t rho = gram.size();
    NSLattice ns{IntersectionForm(std::move(gram)), TorsionGroup()};
    return SurfaceProfile(SurfaceKind::custom, chiO, ns, free_class(std::vector<Int>(rho, 0)), 1,
                          free_class(std::move(ample)));
}

} // namespace fixtures
