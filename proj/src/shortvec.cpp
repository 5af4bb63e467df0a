#include "cmlab/shortvec.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cmlab::shortvec {

namespace {

using Real = long double;

// Q(x) = sum_i d[i] * (x_i + sum_{j>i} mu[i][j] x_j)^2
struct Factor {
    int n = 0;
    std::vector<Real> d;
    std::vector<std::vector<Real>> mu;
};

Factor factorize(const Gram& g) {
    const int n = static_cast<int>(g.size());
    Factor f;
    f.n = n;
    f.d.assign(n, 0);
    f.mu.assign(n, std::vector<Real>(n, 0));
    std::vector<std::vector<Real>> a(n, std::vector<Real>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = static_cast<Real>(g[i][j]);
    for (int i = 0; i < n; ++i) {
        f.d[i] = a[i][i];
        if (f.d[i] <= 0) throw std::domain_error("quadratic form is not positive definite");
        for (int j = i + 1; j < n; ++j) f.mu[i][j] = a[i][j] / f.d[i];
        for (int j = i + 1; j < n; ++j)
            for (int k = j; k < n; ++k) a[j][k] -= f.mu[i][j] * f.mu[i][k] * f.d[i];
        for (int j = i + 1; j < n; ++j)
            for (int k = i + 1; k < j; ++k) a[j][k] = a[k][j];
    }
    return f;
}

constexpr Real kSlack = 1e-7L;

struct Walker {
    const Gram& g;
    const Factor& f;
    Real bound;
    Vec x;

    template <typename Leaf>
    void descend(int k, Real remaining, Leaf&& leaf) {
        Real c = 0;
        for (int j = k + 1; j < f.n; ++j) c -= f.mu[k][j] * static_cast<Real>(x[j]);
        if (remaining < 0) remaining = 0;
        Real r = std::sqrt(remaining / f.d[k]) + kSlack * (1 + std::sqrt(bound));
        i64 lo = static_cast<i64>(std::ceil(c - r)), hi = static_cast<i64>(std::floor(c + r));
        for (i64 v = lo; v <= hi; ++v) {
            x[k] = v;
            Real t = (static_cast<Real>(v) - c);
            Real rest = remaining - f.d[k] * t * t;
            if (rest < -kSlack * (1 + bound)) continue;
            if (k == 0)
                leaf(x);
            else
                descend(k - 1, rest, leaf);
        }
        x[k] = 0;
    }
};

// Innermost coordinate solved exactly: G00 x0^2 + 2 B x0 + C = target.
template <typename Emit>
void solve_innermost(const Gram& g, Vec& x, i64 target, Emit&& emit) {
    const int n = static_cast<int>(g.size());
    i128 b = 0, c = 0;
    for (int j = 1; j < n; ++j) b += static_cast<i128>(g[0][j]) * x[j];
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) c += static_cast<i128>(g[i][j]) * x[i] * x[j];
    const i128 a = g[0][0];
    const i128 disc = b * b - a * (c - target);
    if (disc < 0) return;
    const i128 s = isqrt128(disc);
    if (s * s != disc) return;
    for (i128 num : {-b - s, -b + s}) {
        if (num % a == 0) {
            x[0] = static_cast<i64>(num / a);
            emit(x);
        }
        if (s == 0) break;
    }
    x[0] = 0;
}

}  // namespace

i128 evaluate(const Gram& g, const Vec& x) {
    i128 s = 0;
    const int n = static_cast<int>(g.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += static_cast<i128>(g[i][j]) * x[i] * x[j];
    return s;
}

std::vector<Vec> enumerate_reference(const Gram& g, i64 bound) {
    Factor f = factorize(g);
    Walker w{g, f, static_cast<Real>(bound), Vec(g.size(), 0)};
    std::vector<Vec> out;
    w.descend(f.n - 1, static_cast<Real>(bound), [&](const Vec& x) {
        i128 q = evaluate(g, x);
        if (q > 0 && q <= bound) out.push_back(x);
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vec> vectors_of_norm_reference(const Gram& g, i64 target) {
    std::vector<Vec> out;
    for (auto& v : enumerate_reference(g, target))
        if (evaluate(g, v) == target) out.push_back(std::move(v));
    return out;
}

std::vector<Vec> vectors_of_norm(const Gram& g, i64 target, int jobs) {
    if (target <= 0) throw std::domain_error("vectors_of_norm: target must be positive");
    const int n = static_cast<int>(g.size());
    Factor f = factorize(g);
    const Real bound = static_cast<Real>(target);

    if (n == 1) {
        std::vector<Vec> out;
        Vec x(1, 0);
        solve_innermost(g, x, target, [&](const Vec& v) { out.push_back(v); });
        std::sort(out.begin(), out.end());
        return out;
    }

    const int top = n - 1;
    const Real rtop = std::sqrt(bound / f.d[top]) + kSlack * (1 + std::sqrt(bound));
    const i64 lo = static_cast<i64>(std::ceil(-rtop)), hi = static_cast<i64>(std::floor(rtop));

    std::vector<Vec> out;
#ifdef _OPENMP
    const int threads = jobs <= 0 ? omp_get_max_threads() : jobs;
#pragma omp parallel num_threads(threads)
#endif
    {
        std::vector<Vec> local;
        Walker w{g, f, bound, Vec(n, 0)};
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1)
#endif
        for (i64 v = lo; v <= hi; ++v) {
            w.x.assign(n, 0);
            w.x[top] = v;
            Real t = static_cast<Real>(v);
            Real rest = bound - f.d[top] * t * t;
            if (rest < -kSlack * (1 + bound)) continue;
            auto leaf = [&](int k, Real remaining, auto&& self) -> void {
                if (k == 0) {
                    solve_innermost(g, w.x, target, [&](const Vec& x) { local.push_back(x); });
                    return;
                }
                Real c = 0;
                for (int j = k + 1; j < n; ++j) c -= f.mu[k][j] * static_cast<Real>(w.x[j]);
                if (remaining < 0) remaining = 0;
                Real r = std::sqrt(remaining / f.d[k]) + kSlack * (1 + std::sqrt(bound));
                i64 a = static_cast<i64>(std::ceil(c - r)), b = static_cast<i64>(std::floor(c + r));
                for (i64 u = a; u <= b; ++u) {
                    w.x[k] = u;
                    Real s = static_cast<Real>(u) - c;
                    Real next = remaining - f.d[k] * s * s;
                    if (next < -kSlack * (1 + bound)) continue;
                    self(k - 1, next, self);
                }
                w.x[k] = 0;
            };
            leaf(top - 1, rest, leaf);
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        out.insert(out.end(), local.begin(), local.end());
    }
    (void)jobs;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Vec Reduced::to_original(const Vec& y) const {
    const std::size_t n = y.size();
    Vec x(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x[j] += y[i] * transform[i][j];
    return x;
}

Reduced lll_reduce(const BigGram& g0) {
    const int n = static_cast<int>(g0.size());
    BigGram g = g0;
    std::vector<std::vector<Integer>> u(n, std::vector<Integer>(n, 0));
    for (int i = 0; i < n; ++i) u[i][i] = 1;

    // b_k -= q b_j, applied to the Gram matrix and the transform
    auto reduce_row = [&](int k, int j, const Integer& q) {
        for (int c = 0; c < n; ++c) u[k][c] -= q * u[j][c];
        for (int c = 0; c < n; ++c) g[k][c] -= q * g[j][c];
        for (int r = 0; r < n; ++r) g[r][k] -= q * g[r][j];
    };
    auto swap_rows = [&](int a, int b) {
        std::swap(u[a], u[b]);
        std::swap(g[a], g[b]);
        for (int r = 0; r < n; ++r) std::swap(g[r][a], g[r][b]);
    };
    auto gram_schmidt = [&](std::vector<std::vector<Real>>& mu, std::vector<Real>& bstar) {
        mu.assign(n, std::vector<Real>(n, 0));
        bstar.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < i; ++j) {
                Real s = g[i][j].get_d();
                for (int k = 0; k < j; ++k) s -= mu[j][k] * mu[i][k] * bstar[k];
                mu[i][j] = s / bstar[j];
            }
            Real s = g[i][i].get_d();
            for (int k = 0; k < i; ++k) s -= mu[i][k] * mu[i][k] * bstar[k];
            bstar[i] = s;
        }
    };

    const Real delta = 0.99L;
    std::vector<std::vector<Real>> mu;
    std::vector<Real> bstar;
    int k = 1;
    int guard = 0;
    while (k < n) {
        if (++guard > 100000) throw std::runtime_error("lll_reduce: no convergence");
        gram_schmidt(mu, bstar);
        for (int j = k - 1; j >= 0; --j) {
            Real q = std::nearbyint(mu[k][j]);
            if (q != 0) {
                reduce_row(k, j, Integer(static_cast<double>(q)));
                gram_schmidt(mu, bstar);
            }
        }
        if (bstar[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
            swap_rows(k, k - 1);
            k = std::max(k - 1, 1);
        } else {
            ++k;
        }
    }

    Reduced r;
    r.gram.assign(n, Vec(n, 0));
    r.transform.assign(n, Vec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            r.gram[i][j] = to_i64(g[i][j]);
            r.transform[i][j] = to_i64(u[i][j]);
        }
    return r;
}

std::vector<Vec> vectors_of_norm(const BigGram& g, i64 target, int jobs) {
    Reduced r = lll_reduce(g);
    std::vector<Vec> out;
    for (const auto& y : vectors_of_norm(r.gram, target, jobs)) out.push_back(r.to_original(y));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vec> enumerate(const BigGram& g, i64 bound) {
    Reduced r = lll_reduce(g);
    std::vector<Vec> out;
    for (const auto& y : enumerate_reference(r.gram, bound)) out.push_back(r.to_original(y));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<i64> theta_series(const BigGram& g, int max_half) {
    Reduced r = lll_reduce(g);
    std::vector<i64> theta(max_half + 1, 0);
    theta[0] = 1;
    for (const auto& v : enumerate_reference(r.gram, 2 * static_cast<i64>(max_half))) {
        i128 q = evaluate(r.gram, v);
        if (q % 2 == 0) ++theta[static_cast<std::size_t>(q / 2)];
    }
    return theta;
}

}  // namespace cmlab::shortvec
