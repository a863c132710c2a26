#include "covmod/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace covmod {

namespace {

void trim_rationals(std::vector<Rational>& v)
{
    while (!v.empty() && v.back() == 0)
        v.pop_back();
}

Rational factorial(int k)
{
    Rational f = 1;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return f;
}

Rational binomial(int n, int k)
{
    return factorial(n) / (factorial(k) * factorial(n - k));
}

Order from_ordering(std::strong_ordering o)
{
    if (o < 0)
        return Order::less;
    if (o > 0)
        return Order::greater;
    return Order::equal;
}

} // namespace

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim_rationals(coeffs_);
}

Rational UniPoly::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const
{
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = coeff(k) + o.coeff(k);
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& o) const
{
    return *this + o.scaled(-1);
}

UniPoly UniPoly::operator*(const UniPoly& o) const
{
    if (is_zero() || o.is_zero())
        return {};
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const Rational& s) const
{
    std::vector<Rational> out = coeffs_;
    for (auto& c : out)
        c *= s;
    return UniPoly(std::move(out));
}

std::string UniPoly::to_string(const char* var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeffs_[k];
        if (c == 0)
            continue;
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (c < 0)
            c = -c;
        if (k == 0 || c != 1) {
            os << covmod::to_string(c);
            if (k > 0)
                os << " ";
        }
        if (k >= 1)
            os << var;
        if (k >= 2)
            os << "^" << k;
        first = false;
    }
    return os.str();
}

std::strong_ordering compare(const UniPoly& f, const UniPoly& g)
{
    const int top = std::max(f.degree(), g.degree());
    for (int k = top; k >= 0; --k) {
        const Rational a = f.coeff(k), b = g.coeff(k);
        if (a < b)
            return std::strong_ordering::less;
        if (a > b)
            return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly::BiPoly(std::vector<UniPoly> by_n_degree) : parts_(std::move(by_n_degree))
{
    while (!parts_.empty() && parts_.back().is_zero())
        parts_.pop_back();
}

BiPoly BiPoly::from_table(const std::vector<std::vector<Rational>>& coeffs)
{
    std::vector<UniPoly> parts;
    parts.reserve(coeffs.size());
    for (const auto& row : coeffs)
        parts.emplace_back(row);
    return BiPoly(std::move(parts));
}

BiPoly BiPoly::of_sum(const UniPoly& p)
{
    // (m + n)^d = sum_k C(d, k) m^(d-k) n^k
    const int d = p.degree();
    if (d < 0)
        return {};
    std::vector<std::vector<Rational>> table(d + 1, std::vector<Rational>(d + 1));
    for (int deg = 0; deg <= d; ++deg)
        for (int k = 0; k <= deg; ++k)
            table[k][deg - k] += p.coeff(deg) * binomial(deg, k);
    return from_table(table);
}

Rational BiPoly::coeff(std::size_t m_deg, std::size_t n_deg) const
{
    return n_deg < parts_.size() ? parts_[n_deg].coeff(m_deg) : Rational(0);
}

Rational BiPoly::operator()(const Rational& m, const Rational& n) const
{
    Rational acc = 0;
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it)
        acc = acc * n + (*it)(m);
    return acc;
}

BiPoly BiPoly::operator+(const BiPoly& o) const
{
    std::vector<UniPoly> out(std::max(parts_.size(), o.parts_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) {
        UniPoly a = k < parts_.size() ? parts_[k] : UniPoly();
        UniPoly b = k < o.parts_.size() ? o.parts_[k] : UniPoly();
        out[k] = a + b;
    }
    return BiPoly(std::move(out));
}

BiPoly BiPoly::scaled(const Rational& s) const
{
    std::vector<UniPoly> out;
    out.reserve(parts_.size());
    for (const auto& p : parts_)
        out.push_back(p.scaled(s));
    return BiPoly(std::move(out));
}

std::string BiPoly::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = n_degree(); k >= 0; --k) {
        const UniPoly& p = parts_[k];
        for (int i = p.degree(); i >= 0; --i) {
            Rational c = p.coeff(i);
            if (c == 0)
                continue;
            if (first)
                os << (c < 0 ? "-" : "");
            else
                os << (c < 0 ? " - " : " + ");
            if (c < 0)
                c = -c;
            const bool monomial = i > 0 || k > 0;
            if (!monomial || c != 1)
                os << covmod::to_string(c) << (monomial ? " " : "");
            std::string sep;
            if (i > 0) {
                os << "m" << (i > 1 ? "^" + std::to_string(i) : "");
                sep = " ";
            }
            if (k > 0)
                os << sep << "n" << (k > 1 ? "^" + std::to_string(k) : "");
            first = false;
        }
    }
    return os.str();
}

std::string to_string(Order o)
{
    switch (o) {
    case Order::less: return "less";
    case Order::equal: return "equal";
    case Order::greater: return "greater";
    }
    return "equal";
}

Order compare_lex(const BiPoly& f, const BiPoly& g)
{
    const int top = std::max(f.n_degree(), g.n_degree());
    const UniPoly zero;
    for (int k = top; k >= 0; --k) {
        const UniPoly& a = k <= f.n_degree() ? f.by_n_degree()[k] : zero;
        const UniPoly& b = k <= g.n_degree() ? g.by_n_degree()[k] : zero;
        const auto c = compare(a, b);
        if (c != 0)
            return from_ordering(c);
    }
    return Order::equal;
}

Order compare_le0(const BiPoly& f, const BiPoly& g)
{
    const auto restricted = compare(f.at_n_zero(), g.at_n_zero());
    if (restricted != 0)
        return from_ordering(restricted);
    // Equal restrictions: the larger polynomial is the smaller one for <=_0.
    switch (compare_lex(f, g)) {
    case Order::less: return Order::greater;
    case Order::greater: return Order::less;
    case Order::equal: return Order::equal;
    }
    return Order::equal;
}

namespace {

Rational multiplicity(const UniPoly& p, int dim)
{
    if (dim < 0)
        throw InputError("reduce: dimension must be nonnegative");
    if (p.is_zero())
        throw InputError("reduce: polynomial must be nonzero");
    if (p.degree() > dim)
        throw InputError("reduce: polynomial of degree " + std::to_string(p.degree()) +
                         " exceeds the dimension " + std::to_string(dim));
    const Rational alpha = p.coeff(dim) * factorial(dim);
    if (alpha <= 0)
        throw InputError("reduce: multiplicity must be positive, got " + to_string(alpha));
    return alpha;
}

} // namespace

UniPoly reduce(const UniPoly& p, int dim)
{
    return p.scaled(Rational(1) / multiplicity(p, dim));
}

BiPoly reduce(const BiPoly& p, int dim)
{
    return p.scaled(Rational(1) / multiplicity(p.at_n_zero(), dim));
}

} // namespace covmod
