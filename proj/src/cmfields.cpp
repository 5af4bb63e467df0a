#include "cmlab/cmfields.hpp"

#include <numeric>
#include <string>

namespace cmlab::cmfields {

bool is_fundamental(i64 d) {
    if (d == 0 || d == 1) return false;
    auto squarefree = [](i64 n) {
        n = n < 0 ? -n : n;
        for (const auto& [p, e] : factor(Integer(static_cast<long>(n))))
            if (e > 1) return false;
        return true;
    };
    const i64 r = mod(d, 4);
    if (r == 1) return squarefree(d);
    if (r != 0) return false;
    const i64 m = d / 4;
    const i64 rm = mod(m, 4);
    return (rm == 2 || rm == 3) && squarefree(m);
}

i64 field_discriminant(i64 d) {
    if (is_fundamental(d)) return d;
    const i64 r = mod(d, 4);
    if ((r == 2 || r == 3) && is_fundamental(4 * d)) return 4 * d;
    throw ValidationError(std::to_string(d) + " does not determine a quadratic field discriminant");
}

ImagQuadOrder make_order(i64 dK, i64 c) {
    if (dK >= 0) throw ValidationError("not imaginary quadratic: discriminant " + std::to_string(dK) + " >= 0");
    if (!is_fundamental(dK)) throw ValidationError(std::to_string(dK) + " is not a fundamental discriminant");
    if (c < 1) throw ValidationError("conductor must be positive");
    return {dK, c};
}

ImagQuadOrder order_of_discriminant(i64 D) {
    if (D >= 0) throw ValidationError("not imaginary quadratic: discriminant " + std::to_string(D) + " >= 0");
    if (mod(D, 4) != 0 && mod(D, 4) != 1) throw ValidationError("discriminant must be 0 or 1 mod 4");
    for (i64 c = isqrt(-D); c >= 1; --c) {
        if (D % (c * c) != 0) continue;
        if (is_fundamental(D / (c * c))) return {D / (c * c), c};
    }
    throw ValidationError("no fundamental part found for " + std::to_string(D));
}

namespace {

// Dirichlet: h(d) = -(w / 2|d|) sum_{0 < a < |d|} (d|a) a for fundamental d < 0.
i64 fundamental_class_number(i64 dK) {
    const i64 n = -dK;
    i64 s = 0;
    for (i64 a = 1; a < n; ++a) s += kronecker(dK, a) * a;
    const i64 w = unit_count(dK);
    return -(w * s) / (2 * n);
}

}  // namespace

i64 class_number(i64 D) {
    if (D >= 0 || (mod(D, 4) != 0 && mod(D, 4) != 1)) throw ValidationError("class_number: invalid discriminant");
    const auto o = order_of_discriminant(D);
    if (o.c == 1) return fundamental_class_number(o.dK);
    // h(O_c) = h(O_K) c / [O_K^x : O_c^x] prod_{l | c} (1 - (dK|l) / l)
    i64 num = fundamental_class_number(o.dK) * o.c, den = unit_count(o.dK) / 2;
    i64 r = o.c;
    for (i64 l = 2; l <= r; ++l) {
        if (r % l != 0) continue;
        while (r % l == 0) r /= l;
        num *= l - kronecker(o.dK, l);
        den *= l;
    }
    return num / den;
}

i64 class_number(const ImagQuadOrder& o) { return class_number(o.discriminant()); }

i64 unit_count(i64 D) {
    if (D == -3) return 6;
    if (D == -4) return 4;
    return 2;
}

int splitting_type(i64 dK, i64 p) { return kronecker(dK, p); }

std::vector<ImagQuadOrder> conductor_tower(i64 dK, i64 c0, i64 p, int n_max) {
    if (!is_prime(p)) throw ValidationError("conductor_tower: p must be prime");
    if (c0 < 1) throw ValidationError("conductor_tower: c0 must be positive");
    if (c0 % p == 0) throw ValidationError("conductor_tower: base conductor must be prime to p");
    if (n_max < 0) throw ValidationError("conductor_tower: n_max must be nonnegative");
    std::vector<ImagQuadOrder> out;
    i64 c = c0;
    for (int n = 0; n <= n_max; ++n, c *= p) out.push_back(make_order(dK, c));
    return out;
}

}  // namespace cmlab::cmfields
