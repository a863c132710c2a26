#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covmod/lattice.hpp"

namespace covmod {

// xi^perp for a primitive free class xi of negative square; the first nonzero
// coordinate of xi is positive.
struct Wall {
    std::vector<Int> xi;
    Int xi_square = 0;

    bool operator==(const Wall&) const = default;
};

// Cone spanned by finitely many rational classes in the positive cone
// component of the ample witness.
class ConeRegion {
public:
    ConeRegion(std::vector<std::vector<Rational>> generators, const SurfaceProfile& surface);
    static ConeRegion of_class(const DivisorClass& h, const SurfaceProfile& surface);

    const std::vector<std::vector<Rational>>& generators() const { return generators_; }
    // Generators rescaled to primitive integer vectors.
    const std::vector<std::vector<Int>>& integral() const { return integral_; }

private:
    std::vector<std::vector<Rational>> generators_;
    std::vector<std::vector<Int>> integral_;
};

// floor(r^2 Delta / 4)
Int wall_bound(const InvariantVector& u, const SurfaceProfile& surface);

// Every primitive sign-normalized xi with -r^2 Delta/4 <= xi^2 < 0 whose
// hyperplane meets the region, sorted by (xi^2, xi).
std::vector<Wall> enumerate_walls(const InvariantVector& u, const SurfaceProfile& surface, const ConeRegion& region);

// Sub-invariants (c', chi') of a rank-zero sheaf, supplied by the caller.
struct SubInvariant {
    DivisorClass c;
    Int chi = 0;
};

struct ZeroRankWall {
    Wall wall;
    std::vector<Int> L; // chi' c - chi c' before normalization
};

// Wall defined by L = chi' c - chi c'. None if L = 0 or L^perp misses the
// positive cone (L^2 >= 0).
std::optional<ZeroRankWall> zero_rank_wall(const InvariantVector& u, const SubInvariant& sub,
                                           const SurfaceProfile& surface);

struct GeneralityReport {
    bool general = true;
    std::optional<Wall> witness;
    std::optional<std::vector<Int>> witness_L; // rank zero only
    bool relative_to_candidates = false;
    std::string note;
};

GeneralityReport is_general(const DivisorClass& H, const InvariantVector& u, const SurfaceProfile& surface,
                            const std::vector<SubInvariant>& candidates = {});

struct ShiftResult {
    InvariantVector u;
    bool degenerate = false; // c.H = 0
};

// (0, c, chi + k c.H)
ShiftResult shift_chi(const InvariantVector& u, const DivisorClass& H, const SurfaceProfile& surface, Int k = 1);

struct TransferRow {
    std::vector<Int> xi;
    Int xi_square = 0;
    Int cover_square = 0;
    Int cover_bound = 0; // floor(r^2 Delta(f^*u) / 4); 0 for rank zero
    bool cover_wall_valid = false;
    Int xi_dot_H = 0;
    Int cover_dot_H = 0;
    bool pairing_scales = false;
    bool base_on_wall = false;
    bool cover_on_wall = false;
};

struct TransferReport {
    Int degree = 0;
    Int base_delta = 0;
    Int cover_delta = 0;
    std::vector<TransferRow> rows;
    bool cover_general = true; // relative to the mapped walls
    bool base_general = true;
    bool implication_holds = true;
    bool vacuous = false;
};

// Maps every base wall through H (r >= 2) or every candidate wall (r = 0) to the
// cover and checks that generality upstairs forces generality downstairs.
TransferReport transfer_generality(const DivisorClass& H, const InvariantVector& u, const CoveringProfile& cov,
                                   const std::vector<SubInvariant>& candidates = {});

} // namespace covmod
