#pragma once

#include <gmpxx.h>

#include <string>
#include <tuple>
#include <vector>

namespace qstab {

using Int = mpz_class;
using Rat = mpq_class;

/// Returns (g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g.
std::tuple<Int, Int, Int> gcdext(const Int& a, const Int& b);

/// Floor division for any sign of the divisor (b != 0).
Int floor_div(const Int& a, const Int& b);

Int lcm(const Int& a, const Int& b);

/// Smallest positive d with d*v integral.
Int common_denominator(const std::vector<Rat>& v);

bool is_prime(const Int& p);

/// Part of n coprime to p (p prime, n != 0), as a positive integer.
Int prime_to_part(const Int& n, const Int& p);

/// p-adic valuation of a nonzero integer.
long valuation(const Int& n, const Int& p);

/// Primes dividing |n| (n != 0) in increasing order, by trial division.
std::vector<Int> prime_divisors(Int n);

/// Rational rendered as "a" or "a/b".
std::string to_string(const Rat& q);

}  // namespace qstab
