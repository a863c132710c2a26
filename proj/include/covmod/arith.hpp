#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "covmod/errors.hpp"

namespace covmod {

using Int = std::int64_t;
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Overflow-checked int64 arithmetic. Lattice quantities stay far below the
// limits for any sensible input; anything that overflows is rejected.
inline Int checked_add(Int a, Int b)
{
    Int out;
    if (__builtin_add_overflow(a, b, &out))
        throw InputError("integer overflow in addition");
    return out;
}

inline Int checked_sub(Int a, Int b)
{
    Int out;
    if (__builtin_sub_overflow(a, b, &out))
        throw InputError("integer overflow in subtraction");
    return out;
}

inline Int checked_mul(Int a, Int b)
{
    Int out;
    if (__builtin_mul_overflow(a, b, &out))
        throw InputError("integer overflow in multiplication");
    return out;
}

// Mathematical modulus, result in [0, d).
inline Int mod_floor(Int a, Int d)
{
    Int r = a % d;
    return r < 0 ? r + d : r;
}

inline Int gcd(Int a, Int b) { return std::gcd(a, b); }

inline Int lcm(Int a, Int b)
{
    if (a == 0 || b == 0)
        return 0;
    return checked_mul(a / std::gcd(a, b), b < 0 ? -b : b);
}

// Positive divisors in ascending order.
std::vector<Int> divisors(Int n);

bool is_prime_power(Int n);

Rational make_rational(Int num, Int den = 1);

// "p/q" with the denominator omitted when it is 1.
std::string to_string(const Rational& q);

// Accepts "p", "p/q", "-p/q"; throws InputError otherwise.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

// Requires is_integer(q) and int64 range.
Int to_int(const Rational& q);

// Floor of sqrt for a nonnegative rational.
BigInt floor_sqrt(const Rational& q);

} // namespace covmod
