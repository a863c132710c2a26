#pragma once

#include <compare>
#include <string>
#include <vector>

#include "covmod/arith.hpp"

namespace covmod {

// Exact univariate polynomial, coefficients in ascending degree.
// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(const Rational& c) { return UniPoly({c}); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
    Rational operator()(const Rational& x) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const Rational& s) const;

    bool operator==(const UniPoly&) const = default;

    // "t^2 + 3/2 t - 1"
    std::string to_string(const char* var = "t") const;

private:
    std::vector<Rational> coeffs_;
};

// Ordering of Q[t] by values at t >> 0: compare from the top degree down.
std::strong_ordering compare(const UniPoly& f, const UniPoly& g);

// Polynomial in (m, n) stored as Q[m][n]: entry k is the coefficient of n^k,
// itself a polynomial in m.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<UniPoly> by_n_degree);
    // coeffs[k][i] is the coefficient of n^k m^i.
    static BiPoly from_table(const std::vector<std::vector<Rational>>& coeffs);
    // p(m + n)
    static BiPoly of_sum(const UniPoly& p);
    static BiPoly in_m(const UniPoly& p) { return BiPoly({p}); }

    const std::vector<UniPoly>& by_n_degree() const { return parts_; }
    bool is_zero() const { return parts_.empty(); }
    int n_degree() const { return static_cast<int>(parts_.size()) - 1; }
    Rational coeff(std::size_t m_deg, std::size_t n_deg) const;

    // f(., 0)
    UniPoly at_n_zero() const { return parts_.empty() ? UniPoly() : parts_[0]; }
    Rational operator()(const Rational& m, const Rational& n) const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly scaled(const Rational& s) const;

    bool operator==(const BiPoly&) const = default;

    std::string to_string() const;

private:
    std::vector<UniPoly> parts_;
};

enum class Order { less, equal, greater };

std::string to_string(Order o);

// Lexicographic order on (Q[m])[n]: n-coefficients from the top degree down,
// each compared as a polynomial in m.
Order compare_lex(const BiPoly& f, const BiPoly& g);

// f <=_0 g  iff  f(.,0) < g(.,0), or f(.,0) = g(.,0) and f >= g.
Order compare_le0(const BiPoly& f, const BiPoly& g);

// Divide by the multiplicity alpha = (coefficient of t^dim) * dim!.
// For a BiPoly alpha is read off the restriction to n = 0.
UniPoly reduce(const UniPoly& p, int dim);
BiPoly reduce(const BiPoly& p, int dim);

} // namespace covmod
