#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covmod/arith.hpp"

namespace covmod {

// Symmetric integer Gram matrix of the free part of a Neron-Severi group.
// Construction enforces hyperbolic signature (1, rank-1).
class IntersectionForm {
public:
    struct Signature {
        int positive = 0;
        int negative = 0;
        int zero = 0;
    };

    explicit IntersectionForm(std::vector<std::vector<Int>> rows);

    std::size_t rank() const { return rank_; }
    Int entry(std::size_t i, std::size_t j) const { return gram_[i * rank_ + j]; }
    std::vector<std::vector<Int>> rows() const;

    // a^T M b; throws InputError on a length mismatch.
    Int pair(std::span<const Int> a, std::span<const Int> b) const;
    Int square(std::span<const Int> a) const { return pair(a, a); }

    // M a
    std::vector<Int> apply(std::span<const Int> a) const;

    // Form multiplied by a positive integer (signature unchanged).
    IntersectionForm scaled(Int factor) const;

    bool operator==(const IntersectionForm&) const = default;

    // Exact Sylvester signature of any symmetric integer matrix.
    static Signature signature(const std::vector<std::vector<Int>>& rows);

private:
    std::size_t rank_ = 0;
    std::vector<Int> gram_;
};

// Finite abelian group Z/d_1 + ... + Z/d_k, every d_i >= 2.
class TorsionGroup {
public:
    TorsionGroup() = default;
    explicit TorsionGroup(std::vector<Int> orders);

    std::size_t size() const { return orders_.size(); }
    const std::vector<Int>& orders() const { return orders_; }
    Int order(std::size_t i) const { return orders_[i]; }

    // Residues reduced into [0, d_i). Throws on a length mismatch.
    std::vector<Int> reduce(std::span<const Int> residues) const;

    bool operator==(const TorsionGroup&) const = default;

private:
    std::vector<Int> orders_;
};

// Element of NS = Z^rho + torsion. Residues are kept reduced by NSLattice.
struct DivisorClass {
    std::vector<Int> free;
    std::vector<Int> tors;

    bool is_zero() const;
    bool free_is_zero() const;
    bool operator==(const DivisorClass&) const = default;
};

struct NSLattice {
    IntersectionForm form;
    TorsionGroup torsion;

    std::size_t rank() const { return form.rank(); }

    // Validates lengths and reduces residues.
    DivisorClass make(std::vector<Int> free, std::vector<Int> tors = {}) const;
    DivisorClass zero() const;
    void check(const DivisorClass& c) const;

    DivisorClass add(const DivisorClass& a, const DivisorClass& b) const;
    DivisorClass scale(const DivisorClass& a, Int k) const;
    DivisorClass negate(const DivisorClass& a) const { return scale(a, -1); }

    bool operator==(const NSLattice&) const = default;
};

// Torsion classes pair to zero: only the free parts enter.
Int intersect(const DivisorClass& a, const DivisorClass& b, const IntersectionForm& form);

// Order in NS; nullopt means infinite order (nonzero free part).
std::optional<Int> class_order(const DivisorClass& c, const TorsionGroup& torsion);

enum class SurfaceKind { enriques, bielliptic, k3, abelian, custom };

std::string to_string(SurfaceKind kind);
SurfaceKind parse_surface_kind(std::string_view name);

// Numerical skeleton of a surface. The canonical-bundle order n is asserted by
// the caller; nu (order of c_1(K) in NS) is derived from the canonical class.
class SurfaceProfile {
public:
    SurfaceProfile(SurfaceKind kind, Int chiO, NSLattice ns, DivisorClass canonical_class, Int n,
                   DivisorClass ample_witness);

    SurfaceKind kind() const { return kind_; }
    Int chiO() const { return chiO_; }
    const NSLattice& ns() const { return ns_; }
    const IntersectionForm& form() const { return ns_.form; }
    const TorsionGroup& torsion() const { return ns_.torsion; }
    const DivisorClass& canonical_class() const { return canonical_; }
    Int n() const { return n_; }
    const DivisorClass& ample_witness() const { return ample_; }

    // Order of c_1(K); nullopt if K is not numerically trivial.
    std::optional<Int> nu() const { return class_order(canonical_, ns_.torsion); }

private:
    SurfaceKind kind_;
    Int chiO_;
    NSLattice ns_;
    DivisorClass canonical_;
    Int n_;
    DivisorClass ample_;
};

// Homomorphism between torsion groups: target residue j is
// sum_i matrix[j][i] * source residue i (mod target order j).
struct TorsionMap {
    TorsionGroup target;
    std::vector<std::vector<Int>> matrix;
};

// Quotient of the source torsion by the cyclic subgroup a class generates,
// computed through a Smith normal form. Used as the default pullback on torsion.
TorsionMap quotient_by_class(const TorsionGroup& source, std::span<const Int> residues);

// Finite etale covering f: X -> Y. The NS model of X is the free lattice of Y
// with the form scaled by deg f, and torsion mapped through `torsion_map`.
class CoveringProfile {
public:
    // Default torsion map kills c_1(K_Y) and is the quotient map elsewhere.
    CoveringProfile(SurfaceProfile base, Int degree, Int cover_chiO,
                    std::optional<TorsionMap> torsion_map = std::nullopt);

    // Canonical covering given by K_Y: degree n, chi(O_X) = n chi(O_Y).
    static CoveringProfile canonical(const SurfaceProfile& base);

    const SurfaceProfile& base() const { return base_; }
    Int degree() const { return degree_; }
    Int cover_chiO() const { return cover_chiO_; }
    const TorsionMap& torsion_map() const { return map_; }
    const SurfaceProfile& cover() const { return cover_; }

    DivisorClass pull(const DivisorClass& c) const;

private:
    SurfaceProfile base_;
    Int degree_;
    Int cover_chiO_;
    TorsionMap map_;
    SurfaceProfile cover_;
};

// u = (r, c, chi) with c in NS (torsion kept).
struct InvariantVector {
    Int r = 0;
    DivisorClass c;
    Int chi = 0;

    bool is_zero() const { return r == 0 && chi == 0 && c.is_zero(); }
    bool operator==(const InvariantVector&) const = default;
};

void check_invariant(const InvariantVector& u, const NSLattice& ns);

DivisorClass pullback_class(const DivisorClass& c, const CoveringProfile& cov);

// (r, f^*c, deg f * chi)
InvariantVector pullback_u(const InvariantVector& u, const CoveringProfile& cov);

// No m >= 2 and u0 with m u0 = u. Throws InputError for u = 0.
bool is_primitive(const InvariantVector& u, const TorsionGroup& torsion);

} // namespace covmod
