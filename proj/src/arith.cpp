#include "cmlab/arith.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <tuple>

namespace cmlab {

bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (i64 d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

i64 next_prime(i64 n) {
    i64 m = n + 1;
    while (!is_prime(m)) ++m;
    return m;
}

std::vector<std::pair<Integer, int>> factor(const Integer& n) {
    if (n == 0) throw ValidationError("factor: zero has no factorization");
    Integer m = abs(n);
    std::vector<std::pair<Integer, int>> out;
    for (Integer d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
        if (m % d == 0) {
            int e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

std::vector<i64> prime_divisors(i64 n) {
    std::vector<i64> out;
    for (const auto& [p, e] : factor(Integer(static_cast<long>(n)))) out.push_back(p.get_si());
    return out;
}

int valuation(const Integer& n, const Integer& p) {
    if (n == 0) throw ValidationError("valuation of zero");
    Integer m = n;
    int v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

int valuation(i64 n, i64 p) {
    if (n == 0) throw ValidationError("valuation of zero");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

int valuation(const Rational& x, const Integer& p) {
    return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 mod_pow(i64 base, i64 e, i64 m) {
    i128 result = 1 % m;
    i128 b = mod(base, m);
    while (e > 0) {
        if (e & 1) result = result * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return static_cast<i64>(result);
}

i64 mod_inverse(i64 a, i64 m) {
    i64 g = m, x = 0, x1 = 1, a1 = mod(a, m);
    while (a1 != 0) {
        i64 q = g / a1;
        std::tie(g, a1) = std::make_pair(a1, g - q * a1);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) throw std::domain_error("mod_inverse: not invertible");
    return mod(x, m);
}

i64 ipow(i64 base, int e) {
    i64 r = 1;
    for (int k = 0; k < e; ++k) r *= base;
    return r;
}

int kronecker(i64 a, i64 n) {
    if (n <= 0) throw ValidationError("kronecker: n must be positive");
    int result = 1;
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        i64 r = mod(a, 8);
        if (r == 3 || r == 5) result = -result;
    }
    // Jacobi symbol for odd n
    a = mod(a, n);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

i64 isqrt(i64 n) {
    if (n < 0) return -1;
    i64 r = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

i128 isqrt128(i128 n) {
    if (n < 0) return -1;
    i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

Integer isqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Rational rational_sqrt(const Rational& x) {
    if (x < 0 || !is_square(x.get_num()) || !is_square(x.get_den()))
        throw std::domain_error("rational_sqrt: not a rational square: " + to_string(x));
    Rational r(isqrt(x.get_num()), isqrt(x.get_den()));
    r.canonicalize();
    return r;
}

Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_decimal(const Rational& x, int significant) {
    // mpf with generous precision, then printf-style %.*g
    mpf_class f(0, 256);
    f = x;
    char buf[128];
    gmp_snprintf(buf, sizeof buf, "%.*Fg", significant, f.get_mpf_t());
    return buf;
}

i64 to_i64(const Integer& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + x.get_str());
    return x.get_si();
}

}  // namespace cmlab
