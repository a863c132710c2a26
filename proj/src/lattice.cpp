#include "covmod/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace covmod {

namespace {

std::string len_msg(const char* what, std::size_t got, std::size_t want)
{
    return std::string(what) + ": expected length " + std::to_string(want) + ", got " +
           std::to_string(got);
}

} // namespace

// ---------------------------------------------------------------------------
// IntersectionForm

IntersectionForm::Signature IntersectionForm::signature(const std::vector<std::vector<Int>>& rows)
{
    const std::size_t n = rows.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw InputError("intersection form must be a square matrix");
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Rational(rows[i][j]);
    }

    Signature sig;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = n;
        for (std::size_t i = k; i < n; ++i) {
            if (a[i][i] != 0) {
                p = i;
                break;
            }
        }
        if (p == n) {
            // Zero diagonal on the remaining block: a congruence i += j creates
            // the pivot 2 a_ij when some off-diagonal entry is nonzero.
            bool found = false;
            for (std::size_t i = k; i < n && !found; ++i) {
                for (std::size_t j = i + 1; j < n && !found; ++j) {
                    if (a[i][j] != 0) {
                        for (std::size_t c = k; c < n; ++c)
                            a[i][c] += a[j][c];
                        for (std::size_t r = k; r < n; ++r)
                            a[r][i] += a[r][j];
                        p = i;
                        found = true;
                    }
                }
            }
            if (!found) {
                sig.zero += static_cast<int>(n - k);
                return sig;
            }
        }
        if (p != k) {
            std::swap(a[p], a[k]);
            for (auto& row : a)
                std::swap(row[p], row[k]);
        }
        const Rational pivot = a[k][k];
        (pivot > 0 ? sig.positive : sig.negative) += 1;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0)
                continue;
            const Rational f = a[i][k] / pivot;
            for (std::size_t j = k; j < n; ++j)
                a[i][j] -= f * a[k][j];
        }
        for (std::size_t i = k + 1; i < n; ++i)
            a[k][i] = 0;
    }
    return sig;
}

IntersectionForm::IntersectionForm(std::vector<std::vector<Int>> rows)
{
    rank_ = rows.size();
    if (rank_ == 0)
        throw InputError("intersection form must have rank >= 1");
    gram_.reserve(rank_ * rank_);
    for (const auto& row : rows) {
        if (row.size() != rank_)
            throw InputError("intersection form must be a square matrix");
        gram_.insert(gram_.end(), row.begin(), row.end());
    }
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = i + 1; j < rank_; ++j)
            if (entry(i, j) != entry(j, i))
                throw InputError("intersection form must be symmetric");

    const Signature sig = signature(rows);
    if (sig.zero != 0)
        throw InputError("intersection form is degenerate");
    if (sig.positive != 1)
        throw InputError("intersection form must have signature (1, " + std::to_string(rank_ - 1) +
                         "), got (" + std::to_string(sig.positive) + ", " +
                         std::to_string(sig.negative) + ")");
}

std::vector<std::vector<Int>> IntersectionForm::rows() const
{
    std::vector<std::vector<Int>> out(rank_);
    for (std::size_t i = 0; i < rank_; ++i)
        out[i].assign(gram_.begin() + i * rank_, gram_.begin() + (i + 1) * rank_);
    return out;
}

Int IntersectionForm::pair(std::span<const Int> a, std::span<const Int> b) const
{
    if (a.size() != rank_ || b.size() != rank_)
        throw InputError(len_msg("intersection", a.size() != rank_ ? a.size() : b.size(), rank_));
    Int total = 0;
    for (std::size_t i = 0; i < rank_; ++i) {
        if (a[i] == 0)
            continue;
        Int row = 0;
        for (std::size_t j = 0; j < rank_; ++j)
            row = checked_add(row, checked_mul(entry(i, j), b[j]));
        total = checked_add(total, checked_mul(a[i], row));
    }
    return total;
}

std::vector<Int> IntersectionForm::apply(std::span<const Int> a) const
{
    if (a.size() != rank_)
        throw InputError(len_msg("form application", a.size(), rank_));
    std::vector<Int> out(rank_, 0);
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j)
            out[i] = checked_add(out[i], checked_mul(entry(i, j), a[j]));
    return out;
}

IntersectionForm IntersectionForm::scaled(Int factor) const
{
    if (factor <= 0)
        throw InputError("form scaling factor must be positive");
    auto r = rows();
    for (auto& row : r)
        for (auto& x : row)
            x = checked_mul(x, factor);
    return IntersectionForm(std::move(r));
}

// ---------------------------------------------------------------------------
// TorsionGroup, DivisorClass, NSLattice

TorsionGroup::TorsionGroup(std::vector<Int> orders) : orders_(std::move(orders))
{
    for (Int d : orders_)
        if (d < 2)
            throw InputError("torsion orders must be >= 2, got " + std::to_string(d));
}

std::vector<Int> TorsionGroup::reduce(std::span<const Int> residues) const
{
    if (residues.size() != orders_.size())
        throw InputError(len_msg("torsion residues", residues.size(), orders_.size()));
    std::vector<Int> out(residues.size());
    for (std::size_t i = 0; i < residues.size(); ++i)
        out[i] = mod_floor(residues[i], orders_[i]);
    return out;
}

bool DivisorClass::free_is_zero() const
{
    return std::all_of(free.begin(), free.end(), [](Int x) { return x == 0; });
}

bool DivisorClass::is_zero() const
{
    return free_is_zero() && std::all_of(tors.begin(), tors.end(), [](Int x) { return x == 0; });
}

DivisorClass NSLattice::make(std::vector<Int> free, std::vector<Int> tors) const
{
    if (free.size() != rank())
        throw InputError(len_msg("divisor class free part", free.size(), rank()));
    if (tors.empty())
        tors.assign(torsion.size(), 0);
    return DivisorClass{std::move(free), torsion.reduce(tors)};
}

DivisorClass NSLattice::zero() const
{
    return DivisorClass{std::vector<Int>(rank(), 0), std::vector<Int>(torsion.size(), 0)};
}

void NSLattice::check(const DivisorClass& c) const
{
    if (c.free.size() != rank())
        throw InputError(len_msg("divisor class free part", c.free.size(), rank()));
    if (c.tors.size() != torsion.size())
        throw InputError(len_msg("divisor class torsion part", c.tors.size(), torsion.size()));
    for (std::size_t i = 0; i < c.tors.size(); ++i)
        if (c.tors[i] < 0 || c.tors[i] >= torsion.order(i))
            throw InputError("divisor class torsion residue not reduced");
}

DivisorClass NSLattice::add(const DivisorClass& a, const DivisorClass& b) const
{
    check(a);
    check(b);
    DivisorClass out = a;
    for (std::size_t i = 0; i < out.free.size(); ++i)
        out.free[i] = checked_add(out.free[i], b.free[i]);
    for (std::size_t i = 0; i < out.tors.size(); ++i)
        out.tors[i] = (out.tors[i] + b.tors[i]) % torsion.order(i);
    return out;
}

DivisorClass NSLattice::scale(const DivisorClass& a, Int k) const
{
    check(a);
    DivisorClass out = a;
    for (auto& x : out.free)
        x = checked_mul(x, k);
    for (std::size_t i = 0; i < out.tors.size(); ++i)
        out.tors[i] = mod_floor(checked_mul(out.tors[i], mod_floor(k, torsion.order(i))),
                                torsion.order(i));
    return out;
}

Int intersect(const DivisorClass& a, const DivisorClass& b, const IntersectionForm& form)
{
    return form.pair(a.free, b.free);
}

std::optional<Int> class_order(const DivisorClass& c, const TorsionGroup& torsion)
{
    if (!c.free_is_zero())
        return std::nullopt;
    if (c.tors.size() != torsion.size())
        throw InputError(len_msg("torsion residues", c.tors.size(), torsion.size()));
    Int order = 1;
    for (std::size_t i = 0; i < c.tors.size(); ++i) {
        const Int d = torsion.order(i);
        const Int t = mod_floor(c.tors[i], d);
        order = lcm(order, d / gcd(d, t));
    }
    return order;
}

// ---------------------------------------------------------------------------
// SurfaceProfile

std::string to_string(SurfaceKind kind)
{
    switch (kind) {
    case SurfaceKind::enriques: return "enriques";
    case SurfaceKind::bielliptic: return "bielliptic";
    case SurfaceKind::k3: return "k3";
    case SurfaceKind::abelian: return "abelian";
    case SurfaceKind::custom: return "custom";
    }
    return "custom";
}

SurfaceKind parse_surface_kind(std::string_view name)
{
    if (name == "enriques") return SurfaceKind::enriques;
    if (name == "bielliptic") return SurfaceKind::bielliptic;
    if (name == "k3") return SurfaceKind::k3;
    if (name == "abelian") return SurfaceKind::abelian;
    if (name == "custom") return SurfaceKind::custom;
    throw InputError("unknown surface kind \"" + std::string(name) +
                     "\" (expected enriques, bielliptic, k3, abelian or custom)");
}

SurfaceProfile::SurfaceProfile(SurfaceKind kind, Int chiO, NSLattice ns, DivisorClass canonical_class,
                               Int n, DivisorClass ample_witness)
    : kind_(kind), chiO_(chiO), ns_(std::move(ns)), canonical_(std::move(canonical_class)), n_(n),
      ample_(std::move(ample_witness))
{
    ns_.check(canonical_);
    ns_.check(ample_);
    if (n_ < 1)
        throw InputError("n (order of K in Pic) must be positive");
    if (ns_.form.square(ample_.free) <= 0)
        throw InputError("ample_witness must have positive square");

    const auto nu = class_order(canonical_, ns_.torsion);
    const std::string k = to_string(kind_);
    switch (kind_) {
    case SurfaceKind::enriques:
        if (chiO_ != 1)
            throw InputError("enriques profile requires chiO = 1");
        if (n_ != 2)
            throw InputError("enriques profile requires n = 2");
        if (nu != 2)
            throw InputError("enriques profile requires a canonical class of order 2 in NS");
        break;
    case SurfaceKind::bielliptic:
        if (chiO_ != 0)
            throw InputError("bielliptic profile requires chiO = 0");
        if (n_ != 2 && n_ != 3 && n_ != 4 && n_ != 6)
            throw InputError("bielliptic profile requires n in {2, 3, 4, 6}");
        if (!nu || n_ % *nu != 0)
            throw InputError("bielliptic profile requires the order of the canonical class to divide n");
        break;
    case SurfaceKind::k3:
    case SurfaceKind::abelian:
        if (chiO_ != (kind_ == SurfaceKind::k3 ? 2 : 0))
            throw InputError(k + " profile requires chiO = " + (kind_ == SurfaceKind::k3 ? "2" : "0"));
        if (n_ != 1)
            throw InputError(k + " profile requires n = 1");
        if (!canonical_.is_zero())
            throw InputError(k + " profile requires a zero canonical class");
        break;
    case SurfaceKind::custom:
        break;
    }
}

// ---------------------------------------------------------------------------
// Torsion maps

namespace {

// Row operations of a Smith normal form reduction; returns U with U R V = diag.
struct SmithResult {
    std::vector<std::vector<Int>> u;
    std::vector<Int> diagonal;
};

SmithResult smith_rows(std::vector<std::vector<Int>> a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::vector<Int>> u(rows, std::vector<Int>(rows, 0));
    for (std::size_t i = 0; i < rows; ++i)
        u[i][i] = 1;

    auto row_axpy = [&](std::size_t dst, std::size_t src, Int q) {
        for (std::size_t j = 0; j < cols; ++j)
            a[dst][j] = checked_sub(a[dst][j], checked_mul(q, a[src][j]));
        for (std::size_t j = 0; j < rows; ++j)
            u[dst][j] = checked_sub(u[dst][j], checked_mul(q, u[src][j]));
    };
    auto col_axpy = [&](std::size_t dst, std::size_t src, Int q) {
        for (std::size_t i = 0; i < rows; ++i)
            a[i][dst] = checked_sub(a[i][dst], checked_mul(q, a[i][src]));
    };
    auto swap_rows = [&](std::size_t x, std::size_t y) {
        std::swap(a[x], a[y]);
        std::swap(u[x], u[y]);
    };
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        for (auto& row : a)
            std::swap(row[x], row[y]);
    };

    std::vector<Int> diag;
    for (std::size_t p = 0; p < std::min(rows, cols); ++p) {
        for (;;) {
            std::size_t bi = rows, bj = cols;
            for (std::size_t i = p; i < rows; ++i)
                for (std::size_t j = p; j < cols; ++j)
                    if (a[i][j] != 0 && (bi == rows || std::llabs(a[i][j]) < std::llabs(a[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == rows) {
                diag.resize(std::min(rows, cols), 0);
                return {u, diag};
            }
            swap_rows(p, bi);
            swap_cols(p, bj);
            bool clean = true;
            for (std::size_t i = p + 1; i < rows; ++i) {
                row_axpy(i, p, a[i][p] / a[p][p]);
                clean = clean && a[i][p] == 0;
            }
            for (std::size_t j = p + 1; j < cols; ++j) {
                col_axpy(j, p, a[p][j] / a[p][p]);
                clean = clean && a[p][j] == 0;
            }
            if (!clean)
                continue;
            bool divides = true;
            for (std::size_t i = p + 1; i < rows && divides; ++i)
                for (std::size_t j = p + 1; j < cols && divides; ++j)
                    if (a[i][j] % a[p][p] != 0) {
                        for (std::size_t c = 0; c < cols; ++c)
                            a[p][c] = checked_add(a[p][c], a[i][c]);
                        for (std::size_t c = 0; c < rows; ++c)
                            u[p][c] = checked_add(u[p][c], u[i][c]);
                        divides = false;
                    }
            if (divides)
                break;
        }
        if (a[p][p] < 0) {
            for (auto& x : a[p])
                x = -x;
            for (auto& x : u[p])
                x = -x;
        }
        diag.push_back(a[p][p]);
    }
    return {u, diag};
}

std::vector<Int> apply_map(const TorsionMap& map, std::span<const Int> residues)
{
    std::vector<Int> out(map.target.size(), 0);
    for (std::size_t j = 0; j < out.size(); ++j) {
        const Int d = map.target.order(j);
        Int acc = 0;
        for (std::size_t i = 0; i < residues.size(); ++i)
            acc = mod_floor(acc + mod_floor(map.matrix[j][i], d) * mod_floor(residues[i], d), d);
        out[j] = acc;
    }
    return out;
}

} // namespace

TorsionMap quotient_by_class(const TorsionGroup& source, std::span<const Int> residues)
{
    const std::size_t k = source.size();
    const auto t = source.reduce(residues);
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < k; ++i)
        if (t[i] != 0)
            nonzero.push_back(i);

    std::vector<Int> orders;
    std::vector<std::vector<Int>> matrix;
    auto unit_row = [&](std::size_t i) {
        std::vector<Int> row(k, 0);
        row[i] = 1;
        return row;
    };

    if (nonzero.size() <= 1) {
        // Identity on untouched factors; Z/d / <t> = Z/gcd(d, t) on the touched one.
        for (std::size_t i = 0; i < k; ++i) {
            const Int d = nonzero.size() == 1 && nonzero[0] == i ? gcd(source.order(i), t[i])
                                                                  : source.order(i);
            if (d > 1) {
                orders.push_back(d);
                matrix.push_back(unit_row(i));
            }
        }
        return TorsionMap{TorsionGroup(orders), matrix};
    }

    std::vector<std::vector<Int>> rel(k, std::vector<Int>(k + 1, 0));
    for (std::size_t i = 0; i < k; ++i) {
        rel[i][i] = source.order(i);
        rel[i][k] = t[i];
    }
    const auto snf = smith_rows(rel);
    for (std::size_t i = 0; i < k; ++i) {
        const Int s = snf.diagonal[i];
        if (s > 1) {
            orders.push_back(s);
            std::vector<Int> row = snf.u[i];
            for (auto& x : row)
                x = mod_floor(x, s);
            matrix.push_back(row);
        }
    }
    return TorsionMap{TorsionGroup(orders), matrix};
}

// ---------------------------------------------------------------------------
// CoveringProfile

namespace {

TorsionMap validated_map(const SurfaceProfile& base, std::optional<TorsionMap> map)
{
    const TorsionGroup& src = base.torsion();
    if (!map)
        return quotient_by_class(src, base.canonical_class().tors);
    if (map->matrix.size() != map->target.size())
        throw InputError("torsion_map matrix needs one row per target factor");
    for (const auto& row : map->matrix)
        if (row.size() != src.size())
            throw InputError("torsion_map matrix needs one column per base torsion factor");
    // Well defined: d_i times generator i must map to zero.
    for (std::size_t j = 0; j < map->target.size(); ++j)
        for (std::size_t i = 0; i < src.size(); ++i)
            if (mod_floor(checked_mul(src.order(i), map->matrix[j][i]), map->target.order(j)) != 0)
                throw InputError("torsion_map is not a homomorphism (generator " + std::to_string(i) +
                                 " of order " + std::to_string(src.order(i)) + ")");
    return *map;
}

Int validated_degree(const SurfaceProfile& base, Int degree, Int cover_chiO)
{
    if (degree < 1)
        throw InputError("covering degree must be positive");
    if (cover_chiO != checked_mul(degree, base.chiO()))
        throw InputError("cover_chiO must equal degree * chiO of the base (got " +
                         std::to_string(cover_chiO) + ", expected " +
                         std::to_string(degree * base.chiO()) + ")");
    const bool canonical_kind =
        base.kind() == SurfaceKind::enriques || base.kind() == SurfaceKind::bielliptic;
    if (canonical_kind && degree != base.n())
        throw InputError("the canonical covering of an " + to_string(base.kind()) +
                         " surface has degree n = " + std::to_string(base.n()));
    return degree;
}

SurfaceKind cover_kind(SurfaceKind base)
{
    switch (base) {
    case SurfaceKind::enriques: return SurfaceKind::k3;
    case SurfaceKind::bielliptic: return SurfaceKind::abelian;
    default: return SurfaceKind::custom;
    }
}

SurfaceProfile build_cover(const SurfaceProfile& base, Int degree, Int cover_chiO, const TorsionMap& map)
{
    NSLattice ns{base.form().scaled(degree), map.target};
    auto pull = [&](const DivisorClass& c) {
        return DivisorClass{c.free, apply_map(map, c.tors)};
    };
    DivisorClass k = pull(base.canonical_class());
    const SurfaceKind kind = cover_kind(base.kind());
    if ((kind == SurfaceKind::k3 || kind == SurfaceKind::abelian) && !k.is_zero())
        throw InputError("torsion_map must kill the canonical class of a canonical covering");
    const Int n = k.is_zero() ? 1 : base.n();
    return SurfaceProfile(kind, cover_chiO, std::move(ns), std::move(k), n, pull(base.ample_witness()));
}

} // namespace

CoveringProfile::CoveringProfile(SurfaceProfile base, Int degree, Int cover_chiO,
                                 std::optional<TorsionMap> torsion_map)
    : base_(std::move(base)), degree_(validated_degree(base_, degree, cover_chiO)),
      cover_chiO_(cover_chiO), map_(validated_map(base_, std::move(torsion_map))),
      cover_(build_cover(base_, degree_, cover_chiO_, map_))
{
}

CoveringProfile CoveringProfile::canonical(const SurfaceProfile& base)
{
    return CoveringProfile(base, base.n(), checked_mul(base.n(), base.chiO()));
}

DivisorClass CoveringProfile::pull(const DivisorClass& c) const
{
    base_.ns().check(c);
    return DivisorClass{c.free, apply_map(map_, c.tors)};
}

// ---------------------------------------------------------------------------
// Invariant vectors

void check_invariant(const InvariantVector& u, const NSLattice& ns)
{
    if (u.r < 0)
        throw InputError("rank must be nonnegative");
    ns.check(u.c);
}

DivisorClass pullback_class(const DivisorClass& c, const CoveringProfile& cov)
{
    return cov.pull(c);
}

InvariantVector pullback_u(const InvariantVector& u, const CoveringProfile& cov)
{
    check_invariant(u, cov.base().ns());
    return InvariantVector{u.r, cov.pull(u.c), checked_mul(cov.degree(), u.chi)};
}

bool is_primitive(const InvariantVector& u, const TorsionGroup& torsion)
{
    if (u.is_zero())
        throw InputError("primitivity is undefined for the zero vector");
    if (u.c.tors.size() != torsion.size())
        throw InputError(len_msg("torsion residues", u.c.tors.size(), torsion.size()));
    Int g = gcd(u.r, u.chi);
    for (Int x : u.c.free)
        g = gcd(g, x);
    // A pure torsion vector is m-divisible for every m coprime to all orders.
    if (g == 0)
        return false;
    // m u0 = u is solvable iff m | g and gcd(m, d_i) | t_i; it suffices to test primes.
    auto divisible_by = [&](Int p) {
        for (std::size_t i = 0; i < torsion.size(); ++i)
            if (u.c.tors[i] % gcd(p, torsion.order(i)) != 0)
                return false;
        return true;
    };
    Int rest = g < 0 ? -g : g;
    for (Int p = 2; p * p <= rest; ++p) {
        if (rest % p != 0)
            continue;
        while (rest % p == 0)
            rest /= p;
        if (divisible_by(p))
            return false;
    }
    if (rest > 1 && divisible_by(rest))
        return false;
    return true;
}

} // namespace covmod
