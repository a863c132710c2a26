#include "covmod/arith.hpp"

#include <cctype>

namespace covmod {

std::vector<Int> divisors(Int n)
{
    if (n <= 0)
        throw InputError("divisors: n must be positive");
    std::vector<Int> low, high;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            low.push_back(d);
            if (d != n / d)
                high.push_back(n / d);
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

bool is_prime_power(Int n)
{
    if (n < 2)
        return false;
    Int p = 2;
    while (p * p <= n && n % p != 0)
        ++p;
    if (n % p != 0)
        return true; // n itself is prime
    while (n % p == 0)
        n /= p;
    return n == 1;
}

Rational make_rational(Int num, Int den)
{
    if (den == 0)
        throw InputError("rational with zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

std::string to_string(const Rational& q)
{
    auto num = boost::multiprecision::numerator(q);
    auto den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole)
{
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size())
        throw InputError("malformed rational \"" + std::string(whole) + "\"");
    BigInt v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw InputError("malformed rational \"" + std::string(whole) + "\"");
        v = v * 10 + (s[i] - '0');
    }
    return neg ? BigInt(-v) : v;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0)
        throw InputError("rational with zero denominator: \"" + std::string(text) + "\"");
    return Rational(num, den);
}

bool is_integer(const Rational& q)
{
    return boost::multiprecision::denominator(q) == 1;
}

Int to_int(const Rational& q)
{
    if (!is_integer(q))
        throw InternalError("expected an integer, got " + to_string(q));
    BigInt n = boost::multiprecision::numerator(q);
    if (n > BigInt(std::numeric_limits<Int>::max()) || n < BigInt(std::numeric_limits<Int>::min()))
        throw InputError("integer overflow converting " + n.str());
    return static_cast<Int>(n);
}

BigInt floor_sqrt(const Rational& q)
{
    if (q < 0)
        throw InternalError("floor_sqrt of a negative rational");
    // floor(sqrt(p/d)) = floor(isqrt(p*d) / d) holds because
    // sqrt(p/d) = sqrt(p*d)/d and flooring the numerator first is monotone.
    BigInt p = boost::multiprecision::numerator(q);
    BigInt d = boost::multiprecision::denominator(q);
    BigInt s = boost::multiprecision::sqrt(BigInt(p * d));
    return s / d;
}

} // namespace covmod
