#include "cmlab/qalg.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace cmlab::qalg {

Quat Quat::operator+(const Quat& o) const { return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]}; }
Quat Quat::operator-(const Quat& o) const { return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]}; }
Quat Quat::operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }
Quat Quat::operator*(const Rational& s) const { return {c[0] * s, c[1] * s, c[2] * s, c[3] * s}; }
Quat Quat::operator/(const Rational& s) const { return {c[0] / s, c[1] / s, c[2] / s, c[3] / s}; }

bool Quat::operator<(const Quat& o) const {
    return std::lexicographical_compare(c.begin(), c.end(), o.c.begin(), o.c.end());
}

bool Quat::is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }

std::ostream& operator<<(std::ostream& os, const Quat& x) {
    return os << "(" << to_string(x[0]) << ", " << to_string(x[1]) << ", " << to_string(x[2]) << ", "
              << to_string(x[3]) << ")";
}

namespace {

// Same square class, integral: n/d ~ n*d.
Integer integral_representative(const Rational& x) { return x.get_num() * x.get_den(); }

int legendre(const Integer& u, const Integer& p) { return mpz_legendre(u.get_mpz_t(), p.get_mpz_t()); }

int odd_hilbert(const Integer& a, const Integer& b, const Integer& p) {
    int alpha = valuation(a, p), beta = valuation(b, p);
    Integer pa, pb;
    mpz_pow_ui(pa.get_mpz_t(), p.get_mpz_t(), alpha);
    mpz_pow_ui(pb.get_mpz_t(), p.get_mpz_t(), beta);
    Integer u = a / pa, v = b / pb;
    int sign = 1;
    if ((alpha * beta) % 2 == 1 && p % 4 == 3) sign = -sign;
    if (beta % 2 == 1) sign *= legendre(u, p);
    if (alpha % 2 == 1) sign *= legendre(v, p);
    return sign;
}

int two_adic_hilbert(const Integer& a, const Integer& b) {
    int alpha = valuation(a, Integer(2)), beta = valuation(b, Integer(2));
    Integer u = a >> alpha, v = b >> beta;
    auto mod8 = [](const Integer& x) {
        Integer r = x % 8;
        if (r < 0) r += 8;
        return static_cast<int>(r.get_si());
    };
    int u8 = mod8(u), v8 = mod8(v);
    auto eps = [](int t) { return ((t - 1) / 2) % 2; };
    auto omega = [](int t) { return ((t * t - 1) / 8) % 2; };
    int e = eps(u8) * eps(v8) + alpha * omega(v8) + beta * omega(u8);
    return e % 2 == 0 ? 1 : -1;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, Place v) {
    if (a == 0 || b == 0) throw ValidationError("hilbert_symbol: arguments must be nonzero");
    if (v == kInfinity) return (a < 0 && b < 0) ? -1 : 1;
    if (!is_prime(v)) throw ValidationError("hilbert_symbol: place must be a prime or infinity");
    Integer ia = integral_representative(a), ib = integral_representative(b);
    if (v == 2) return two_adic_hilbert(ia, ib);
    return odd_hilbert(ia, ib, Integer(static_cast<long>(v)));
}

std::vector<Place> ramification_set(const QuaternionAlgebra& alg) { return alg.ramification(); }

QuaternionAlgebra::QuaternionAlgebra(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_ == 0 || b_ == 0) throw ValidationError("quaternion algebra needs nonzero structure constants");
    std::set<i64> candidates{2};
    Integer ab = integral_representative(a_) * integral_representative(b_);
    for (const auto& [p, e] : factor(ab)) candidates.insert(to_i64(p));
    if (hilbert_symbol(a_, b_, kInfinity) == -1) ram_.push_back(kInfinity);
    for (i64 p : candidates) {
        if (hilbert_symbol(a_, b_, p) == -1) ram_.push_back(p);
    }
}

Quat QuaternionAlgebra::mul(const Quat& x, const Quat& y) const {
    const Rational ab = a_ * b_;
    return {x[0] * y[0] + a_ * x[1] * y[1] + b_ * x[2] * y[2] - ab * x[3] * y[3],
            x[0] * y[1] + x[1] * y[0] - b_ * x[2] * y[3] + b_ * x[3] * y[2],
            x[0] * y[2] + x[2] * y[0] + a_ * x[1] * y[3] - a_ * x[3] * y[1],
            x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1]};
}

Quat QuaternionAlgebra::conj(const Quat& x) const { return {x[0], -x[1], -x[2], -x[3]}; }

Rational QuaternionAlgebra::nr(const Quat& x) const {
    return x[0] * x[0] - a_ * x[1] * x[1] - b_ * x[2] * x[2] + a_ * b_ * x[3] * x[3];
}

Rational QuaternionAlgebra::tr(const Quat& x) const { return 2 * x[0]; }

Quat QuaternionAlgebra::inverse(const Quat& x) const {
    Rational n = nr(x);
    if (n == 0) throw std::domain_error("zero divisor: element of reduced norm 0 has no inverse");
    return conj(x) / n;
}

bool QuaternionAlgebra::ramifies_at(Place v) const { return std::find(ram_.begin(), ram_.end(), v) != ram_.end(); }

Integer QuaternionAlgebra::discriminant() const {
    Integer d = 1;
    for (Place v : ram_)
        if (v != kInfinity) d *= static_cast<long>(v);
    return d;
}

QuaternionAlgebra definite_algebra(i64 q) {
    if (!is_prime(q)) throw ValidationError("unsupported discriminant: " + std::to_string(q) + " is not prime");
    auto make = [&]() -> QuaternionAlgebra {
        if (q == 2) return {-1, -1};
        if (q % 4 == 3) return {-1, Rational(-q)};
        if (q % 8 == 5) return {-2, Rational(-q)};
        for (i64 r = 3;; r = next_prime(r)) {
            if (r % 4 == 3 && kronecker(q, r) == -1) return {Rational(-q), Rational(-r)};
        }
    };
    QuaternionAlgebra alg = make();
    if (alg.ramification() != std::vector<Place>{kInfinity, q})
        throw std::logic_error("definite_algebra: presentation does not ramify exactly at {q, oo}");
    return alg;
}

}  // namespace cmlab::qalg
