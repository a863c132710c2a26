#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "covmod/arith.hpp"

namespace covmod {

// Torsion point of an elliptic curve, as an element of Q^2 / Z^2.
struct TorusPoint {
    Rational x = 0;
    Rational y = 0;

    static TorusPoint make(const Rational& x, const Rational& y);

    TorusPoint operator+(const TorusPoint& o) const { return make(x + o.x, y + o.y); }
    TorusPoint operator-() const { return make(-x, -y); }
    TorusPoint scaled(Int k) const { return make(x * k, y * k); }
    bool is_zero() const { return x == 0 && y == 0; }
    // Lcm of the denominators.
    Int order() const;

    bool operator==(const TorusPoint& o) const { return x == o.x && y == o.y; }
    bool operator<(const TorusPoint& o) const { return std::tie(x, y) < std::tie(o.x, o.y); }
};

// Point of B x C.
struct ProductPoint {
    TorusPoint b;
    TorusPoint c;

    ProductPoint operator+(const ProductPoint& o) const { return {b + o.b, c + o.c}; }
    bool operator==(const ProductPoint& o) const { return b == o.b && c == o.c; }
    bool operator<(const ProductPoint& o) const { return std::tie(b, c) < std::tie(o.b, o.c); }
};

using Matrix2 = std::array<std::array<Int, 2>, 2>;

struct BiellipticAction {
    Int n = 2;
    Int m = 1;
    Matrix2 rho{};
    TorusPoint g;  // on C, order n
    TorusPoint a;  // on B, translation of the Z/m factor
    TorusPoint c0; // on C, order m

    TorusPoint rotate(const TorusPoint& b, Int k = 1) const;
};

bool admissible_pair(Int n, Int m);

Matrix2 canonical_rho(Int n);

// Defaults: g = (1/n, 0), c0 = (0, 1/m), a a rho-fixed point of order m.
BiellipticAction make_action(Int n, Int m, std::optional<TorusPoint> g = std::nullopt,
                             std::optional<TorusPoint> a = std::nullopt, std::optional<TorusPoint> c0 = std::nullopt);

struct CycleTerm {
    Int a = 0;
    TorusPoint b;
    TorusPoint c;
};

using ZeroCycle = std::vector<CycleTerm>;

// Lexicographically smallest point of the orbit under translation by (a, c0).
ProductPoint reduce_mod_m(const ProductPoint& p, const BiellipticAction& act);

struct SumReport {
    ProductPoint direct;
    ProductPoint closed_form;
    bool b_component_zero = false;
};

// Sum over the cycle of the full rho-orbits, against the closed form
// sum a_i (0, n c_i + n(n-1)/2 g). Throws InternalError if they differ.
SumReport sum_pushforward(const ZeroCycle& cycle, const BiellipticAction& act);

// Random torsion cycle with point orders up to max_order.
ZeroCycle random_cycle(std::mt19937_64& rng, std::size_t terms = 4, Int max_order = 12);

struct ImageBound {
    Int cycles = 0;
    bool b_component_zero = true;
    Int dimension_bound = 1;
};

ImageBound image_dimension_bound(const BiellipticAction& act, Int cycles, std::uint64_t seed);

} // namespace covmod
