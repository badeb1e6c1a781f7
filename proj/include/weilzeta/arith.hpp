#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace weilzeta {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Deterministic primality test for 64-bit inputs (Miller-Rabin with a
/// witness set that is exact below 2^64).
bool is_prime(std::uint64_t n);

/// Prime factorization by trial division, ascending, with multiplicity.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

BigInt ipow(const BigInt& base, unsigned long exp);
Rational rpow(const Rational& base, long exp);

/// Exponent of the prime l in n (n != 0).
unsigned long valuation(const BigInt& n, unsigned long l);

/// base^exp, or 0 if the result would exceed `limit`.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

inline Rational canonical(Rational r) {
    r.canonicalize();
    return r;
}

}  // namespace weilzeta
