#pragma once

// Rational quaternion algebras (a, b): i^2 = a, j^2 = b, ij = k = -ji.

#include "cmlab/arith.hpp"

#include <array>
#include <iosfwd>
#include <vector>

namespace cmlab::qalg {

/// A place of Q: a prime, or 0 for the real place.
using Place = i64;
inline constexpr Place kInfinity = 0;

/// Coordinates in the basis 1, i, j, k.
struct Quat {
    std::array<Rational, 4> c{Rational(0), Rational(0), Rational(0), Rational(0)};

    Quat() = default;
    Quat(Rational x0, Rational x1, Rational x2, Rational x3) : c{std::move(x0), std::move(x1), std::move(x2), std::move(x3)} {}
    static Quat scalar(const Rational& r) { return Quat(r, 0, 0, 0); }

    const Rational& operator[](int k) const { return c[k]; }
    Rational& operator[](int k) { return c[k]; }

    Quat operator+(const Quat& o) const;
    Quat operator-(const Quat& o) const;
    Quat operator-() const;
    Quat operator*(const Rational& s) const;
    Quat operator/(const Rational& s) const;
    bool operator==(const Quat& o) const { return c == o.c; }
    bool operator!=(const Quat& o) const { return !(*this == o); }
    bool operator<(const Quat& o) const;
    bool is_zero() const;
};

std::ostream& operator<<(std::ostream& os, const Quat& x);

/// Hilbert symbol (a, b)_v in {+1, -1}. a, b nonzero.
int hilbert_symbol(const Rational& a, const Rational& b, Place v);

class QuaternionAlgebra {
public:
    QuaternionAlgebra(Rational a, Rational b);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    Quat mul(const Quat& x, const Quat& y) const;
    Quat conj(const Quat& x) const;
    Rational nr(const Quat& x) const;
    Rational tr(const Quat& x) const;
    /// Throws std::domain_error("zero divisor") when nr(x) = 0.
    Quat inverse(const Quat& x) const;

    /// Places where the algebra ramifies, sorted with the real place (0) first.
    const std::vector<Place>& ramification() const { return ram_; }
    bool is_definite() const { return a_ < 0 && b_ < 0; }
    bool is_split() const { return ram_.empty(); }
    bool ramifies_at(Place v) const;
    /// Product of the finite ramified primes.
    Integer discriminant() const;

    bool operator==(const QuaternionAlgebra& o) const { return a_ == o.a_ && b_ == o.b_; }

private:
    Rational a_, b_;
    std::vector<Place> ram_;
};

/// Places with hilbert_symbol = -1.
std::vector<Place> ramification_set(const QuaternionAlgebra& alg);

/// The definite algebra of prime discriminant q used throughout:
/// (-1,-1) for q = 2, (-1,-q) for q = 3 mod 4, (-2,-q) for q = 5 mod 8,
/// (-q,-r) with r = 3 mod 4 a prime inert in Q(sqrt(-q)) for q = 1 mod 8.
QuaternionAlgebra definite_algebra(i64 q);

}  // namespace cmlab::qalg
