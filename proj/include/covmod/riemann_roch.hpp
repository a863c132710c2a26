#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covmod/lattice.hpp"
#include "covmod/polynomial.hpp"

namespace covmod {

// P(u)(t) = r H^2/2 t^2 + (c - r K/2).H t + chi
UniPoly hilbert_polynomial(const InvariantVector& u, const DivisorClass& H, const SurfaceProfile& surface);

// chi(E (x) H^m (x) A^n) through Riemann-Roch; restricts to P(u) at n = 0.
BiPoly hilbert_polynomial_HA(const InvariantVector& u, const DivisorClass& H, const DivisorClass& A,
                             const SurfaceProfile& surface);

// Dimension of a sheaf with invariants u: 2 for r > 0, 1 for r = 0 with
// c.H != 0, else 0. Equals the degree of P(u).
int sheaf_dimension(const InvariantVector& u, const DivisorClass& H, const SurfaceProfile& surface);

// c^2 - 2 r chi + 2 r^2 chi(O) - r c.K
Int discriminant(const InvariantVector& u, const SurfaceProfile& surface);

// chi(u, u) = chi(O) r^2 - discriminant(u)
Int euler_pairing(const InvariantVector& u, const SurfaceProfile& surface);

// ch_2(u) = chi - r chi(O) + c.K/2
Rational second_chern_character(const InvariantVector& u, const SurfaceProfile& surface);

// Invariants of E (x) V for V locally free (v.r >= 1), via multiplicativity
// of the Chern character.
InvariantVector tensor_u(const InvariantVector& u, const InvariantVector& v, const SurfaceProfile& surface);

// Expected dimensions for a sheaf E with u(E) = u whose pullback is stable.
struct DimReport {
    Int dimY = 0;
    Int dimX = 0;
    // Determinant-fixed dimensions; present only when chi(O_Y) = 0, where
    // the Picard variety is positive dimensional.
    std::optional<Int> dimY_fixed_det;
    std::optional<Int> dimX_fixed_det;
    Int chi_uu = 0;
    Int chi_pullback = 0;
    Int degree = 0;
    std::vector<std::string> assumptions;
};

DimReport expected_dims(const InvariantVector& u, const SurfaceProfile& surface, const CoveringProfile& cov);

} // namespace covmod
