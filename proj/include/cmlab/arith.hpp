#pragma once

// Exact integer/rational helpers shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cmlab {

using Integer = mpz_class;
using Rational = mpq_class;
using i64 = std::int64_t;
using i128 = __int128;

/// Thrown when a caller violates a documented precondition (bad prime,
/// ramified place, mismatched supports, ...). The CLI maps it to exit 2.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

bool is_prime(i64 n);
i64 next_prime(i64 n);

/// Trial-division factorization of |n|; n != 0.
std::vector<std::pair<Integer, int>> factor(const Integer& n);
std::vector<i64> prime_divisors(i64 n);

/// p-adic valuation; n != 0.
int valuation(const Integer& n, const Integer& p);
int valuation(i64 n, i64 p);
int valuation(const Rational& x, const Integer& p);

i64 mod(i64 a, i64 m);
i64 mod_pow(i64 base, i64 e, i64 m);
i64 mod_inverse(i64 a, i64 m);
i64 ipow(i64 base, int e);

/// Kronecker symbol (a | n) for n >= 1.
int kronecker(i64 a, i64 n);

i64 isqrt(i64 n);
i128 isqrt128(i128 n);
bool is_square(const Integer& n);
Integer isqrt(const Integer& n);

/// Exact square root of a nonnegative rational square; throws otherwise.
Rational rational_sqrt(const Rational& x);

Rational abs(const Rational& x);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// Decimal rendering with a fixed number of significant digits.
std::string to_decimal(const Rational& x, int significant = 12);

i64 to_i64(const Integer& x);

}  // namespace cmlab
