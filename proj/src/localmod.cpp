#include "cmlab/localmod.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace cmlab::localmod {

namespace {

Rational p_power(i64 p, i64 n) {
    Rational r = 1;
    for (i64 i = 0; i < (n < 0 ? -n : n); ++i) r *= p;
    if (n < 0) r = 1 / r;
    return r;
}

// v_p of a nonzero rational
i64 vp(const Rational& x, i64 p) { return valuation(x, Integer(static_cast<long>(p))); }

i64 least_nonresidue(i64 p) {
    for (i64 e = 2; e < p; ++e)
        if (kronecker(e, p) == -1) return e;
    throw std::logic_error("no quadratic nonresidue");
}

Matrix zeros(std::size_t n) { return Matrix(n, std::vector<i64>(n, 0)); }

Matrix mat_mul(const Matrix& a, const Matrix& b, i64 m) {
    const std::size_t n = a.size(), l = b.size(), c = b.empty() ? 0 : b[0].size();
    Matrix z(n, std::vector<i64>(c, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < l; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < c; ++j) z[i][j] = (z[i][j] + a[i][t] * b[t][j]) % m;
        }
    return z;
}

Matrix mat_scale(const Matrix& a, i64 s, i64 m) {
    Matrix z = a;
    for (auto& r : z)
        for (auto& v : r) v = mod(v * s, m);
    return z;
}

Matrix mat_add(const Matrix& a, const Matrix& b, i64 m) {
    Matrix z = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) z[i][j] = mod(a[i][j] + b[i][j], m);
    return z;
}

Matrix identity(std::size_t n) {
    Matrix z = zeros(n);
    for (std::size_t i = 0; i < n; ++i) z[i][i] = 1;
    return z;
}

bool same(const Matrix& a, const Matrix& b, i64 m) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (mod(a[i][j] - b[i][j], m) != 0) return false;
    return true;
}

// Matrix of x -> f(x) on coordinate columns.
template <typename F>
Matrix action_matrix(std::size_t n, F&& f) {
    Matrix m = zeros(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<i64> e(n, 0);
        e[j] = 1;
        auto col = f(e);
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
    }
    return m;
}

int rank_mod_p(Matrix a, i64 p) {
    for (auto& r : a)
        for (auto& v : r) v = mod(v, p);
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    int rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        const i64 inv = mod_inverse(a[r][c], p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            const i64 f = a[i][c] * inv % p;
            for (std::size_t j = c; j < cols; ++j) a[i][j] = mod(a[i][j] - f * a[r][j], p);
        }
        ++r;
        ++rank;
    }
    return rank;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
    Matrix z = a;
    for (std::size_t i = 0; i < a.size(); ++i) z[i].insert(z[i].end(), b[i].begin(), b[i].end());
    return z;
}

}  // namespace

// ---------------------------------------------------------------- tree

bool BTVertex::operator<(const BTVertex& o) const {
    if (p != o.p) return p < o.p;
    if (n != o.n) return n < o.n;
    return u < o.u;
}

std::string BTVertex::label() const { return std::to_string(n) + ":" + to_string(u); }

BTVertex bt_root(i64 p) { return bt_vertex(p, 0, 0); }

BTVertex bt_vertex(i64 p, i64 n, const Rational& u) {
    if (!is_prime(p)) throw ValidationError("tree: p must be prime");
    Integer den = u.get_den();
    while (den % p == 0) den /= p;
    if (den != 1) throw ValidationError("tree: u must have a p-power denominator");
    const Rational pn = p_power(p, n);
    Rational q = u / pn;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    Rational r = u - Rational(fl) * pn;
    r.canonicalize();
    return BTVertex{p, n, r};
}

std::vector<BTVertex> bt_neighbors(const BTVertex& v) {
    std::vector<BTVertex> out;
    const Rational pn = p_power(v.p, v.n);
    for (i64 t = 0; t < v.p; ++t) out.push_back(bt_vertex(v.p, v.n + 1, v.u + pn * t));
    out.push_back(bt_vertex(v.p, v.n - 1, v.u));
    return out;
}

i64 bt_distance(const BTVertex& v, const BTVertex& w) {
    if (v.p != w.p) throw ValidationError("bt_distance: vertices of different trees");
    // g_v^{-1} g_w = [[p^(nw - nv), (uw - uv) p^(-nv)], [0, 1]]
    const i64 det = w.n - v.n;
    i64 least = std::min<i64>(det, 0);
    const Rational off = w.u - v.u;
    if (off != 0) least = std::min(least, vp(off, v.p) - v.n);
    return det - 2 * least;
}

TreePatch dual_graph_patch(i64 p, int radius) {
    if (radius < 0) throw ValidationError("radius must be nonnegative");
    if (radius > 6) throw ValidationError("radius too large (at most 6)");
    if (!is_prime(p)) throw ValidationError("tree: p must be prime");
    Rational count = 1 + Rational(p + 1) * (p_power(p, radius) - 1) / (p - 1);
    if (count > 2000000) throw ValidationError("radius too large for p = " + std::to_string(p));
    TreePatch t;
    t.p = p;
    t.radius = radius;
    std::set<BTVertex> seen;
    t.vertices.push_back(bt_root(p));
    t.depth.push_back(0);
    seen.insert(t.vertices[0]);
    for (std::size_t head = 0; head < t.vertices.size(); ++head) {
        if (t.depth[head] == radius) continue;
        for (const auto& w : bt_neighbors(t.vertices[head])) {
            if (seen.count(w)) continue;
            seen.insert(w);
            t.vertices.push_back(w);
            t.depth.push_back(t.depth[head] + 1);
            t.edges.emplace_back(head, t.vertices.size() - 1);
        }
    }
    return t;
}

// ------------------------------------------------------- local order

LocalQuatOrder::LocalQuatOrder(i64 p, int k) : p_(p), k_(k) {
    if (!is_prime(p)) throw ValidationError("local order: p must be prime");
    if (p == 2) throw ValidationError("wild ramification unsupported (p = 2)");
    if (k < 1) throw ValidationError("local order: precision must be positive");
    mod_ = ipow(p, k);
    eps_ = least_nonresidue(p);
}

LocalQuatOrder::W LocalQuatOrder::wmul(const W& x, const W& y) const {
    const i64 m = mod_;
    return {mod((x[0] * y[0] + eps_ * (x[1] * y[1] % m)) % m, m), mod((x[0] * y[1] + x[1] * y[0]) % m, m)};
}

LocalQuatOrder::W LocalQuatOrder::sigma(const W& x) const { return {x[0], mod(-x[1], mod_)}; }

LocalQuatOrder::W LocalQuatOrder::wnorm(const W& x) const { return wmul(x, sigma(x)); }

LocalQuatOrder::Elem LocalQuatOrder::mul(const Elem& x, const Elem& y) const {
    const W a1{x[0], x[1]}, b1{x[2], x[3]}, a2{y[0], y[1]}, b2{y[2], y[3]};
    W s = wmul(a1, a2), t = wmul(sigma(b1), b2);
    W u = wmul(sigma(a1), b2), v = wmul(b1, a2);
    return {mod(s[0] + p_ * t[0], mod_), mod(s[1] + p_ * t[1], mod_), mod(u[0] + v[0], mod_), mod(u[1] + v[1], mod_)};
}

LocalQuatOrder::Elem LocalQuatOrder::add(const Elem& x, const Elem& y) const {
    Elem z;
    for (int i = 0; i < 4; ++i) z[i] = mod(x[i] + y[i], mod_);
    return z;
}

LocalQuatOrder::Elem LocalQuatOrder::scale(const Elem& x, i64 s) const {
    Elem z;
    for (int i = 0; i < 4; ++i) z[i] = mod(x[i] * mod(s, mod_) % mod_, mod_);
    return z;
}

// ------------------------------------------------------- bimodules

std::string validate(const LocalBimodule& m) {
    const i64 md = m.modulus;
    const std::size_t n = m.rank;
    for (const Matrix* a : {&m.left_zeta, &m.left_pi, &m.right_zeta, &m.right_pi})
        if (a->size() != n) return "action matrix of wrong size";
    const i64 eps = least_nonresidue(m.p);
    const Matrix id = identity(n);
    for (const Matrix* l : {&m.left_zeta, &m.left_pi})
        for (const Matrix* r : {&m.right_zeta, &m.right_pi})
            if (!same(mat_mul(*l, *r, md), mat_mul(*r, *l, md), md)) return "left and right actions do not commute";
    for (const auto& [z, pi] : {std::pair{&m.left_zeta, &m.left_pi}, std::pair{&m.right_zeta, &m.right_pi}}) {
        if (!same(mat_mul(*z, *z, md), mat_scale(id, eps, md), md)) return "zeta^2 != eps";
        if (!same(mat_mul(*pi, *pi, md), mat_scale(id, m.p, md), md)) return "Pi^2 != p";
        if (!same(mat_mul(*pi, *z, md), mat_scale(mat_mul(*z, *pi, md), -1, md), md)) return "Pi zeta != sigma(zeta) Pi";
    }
    return "";
}

LocalBimodule regular_bimodule(i64 p, int k) {
    LocalQuatOrder o(p, k);
    LocalBimodule m{p, k, o.modulus(), 4, {}, {}, {}, {}};
    auto elem = [](const std::vector<i64>& v) { return LocalQuatOrder::Elem{v[0], v[1], v[2], v[3]}; };
    auto vec = [](const LocalQuatOrder::Elem& e) { return std::vector<i64>(e.begin(), e.end()); };
    m.left_zeta = action_matrix(4, [&](const std::vector<i64>& v) { return vec(o.mul(LocalQuatOrder::zeta(), elem(v))); });
    m.left_pi = action_matrix(4, [&](const std::vector<i64>& v) { return vec(o.mul(LocalQuatOrder::pi(), elem(v))); });
    m.right_zeta = action_matrix(4, [&](const std::vector<i64>& v) { return vec(o.mul(elem(v), LocalQuatOrder::zeta())); });
    m.right_pi = action_matrix(4, [&](const std::vector<i64>& v) { return vec(o.mul(elem(v), LocalQuatOrder::pi())); });
    return m;
}

LocalBimodule ideal_bimodule(i64 p, int k) {
    // basis Pi, Pi t, p, p t; products are taken one digit deeper so that
    // the p, p t coordinates are known mod p^k after dividing by p
    LocalQuatOrder o(p, k + 1);
    const i64 md = ipow(p, k);
    LocalBimodule m{p, k, md, 4, {}, {}, {}, {}};
    auto to_o = [&](const std::vector<i64>& v) { return LocalQuatOrder::Elem{mod(p * v[2], o.modulus()), mod(p * v[3], o.modulus()), v[0], v[1]}; };
    auto from_o = [&](const LocalQuatOrder::Elem& e) {
        if (e[0] % p != 0 || e[1] % p != 0) throw std::logic_error("ideal_bimodule: product left the ideal");
        return std::vector<i64>{mod(e[2], md), mod(e[3], md), mod(e[0] / p, md), mod(e[1] / p, md)};
    };
    m.left_zeta = action_matrix(4, [&](const std::vector<i64>& v) { return from_o(o.mul(LocalQuatOrder::zeta(), to_o(v))); });
    m.left_pi = action_matrix(4, [&](const std::vector<i64>& v) { return from_o(o.mul(LocalQuatOrder::pi(), to_o(v))); });
    m.right_zeta = action_matrix(4, [&](const std::vector<i64>& v) { return from_o(o.mul(to_o(v), LocalQuatOrder::zeta())); });
    m.right_pi = action_matrix(4, [&](const std::vector<i64>& v) { return from_o(o.mul(to_o(v), LocalQuatOrder::pi())); });
    return m;
}

LocalBimodule direct_sum(const LocalBimodule& x, const LocalBimodule& y) {
    if (x.p != y.p || x.k != y.k) throw ValidationError("direct_sum: mismatched p or precision");
    const std::size_t n = x.rank + y.rank;
    auto block = [&](const Matrix& a, const Matrix& b) {
        Matrix z = zeros(n);
        for (std::size_t i = 0; i < x.rank; ++i)
            for (std::size_t j = 0; j < x.rank; ++j) z[i][j] = a[i][j];
        for (std::size_t i = 0; i < y.rank; ++i)
            for (std::size_t j = 0; j < y.rank; ++j) z[x.rank + i][x.rank + j] = b[i][j];
        return z;
    };
    return LocalBimodule{x.p, x.k, x.modulus, n, block(x.left_zeta, y.left_zeta), block(x.left_pi, y.left_pi),
                         block(x.right_zeta, y.right_zeta), block(x.right_pi, y.right_pi)};
}

LocalBimodule twisted_pair(i64 p, int k) {
    LocalQuatOrder o(p, k);
    LocalBimodule m{p, k, o.modulus(), 8, {}, {}, {}, {}};
    using E = LocalQuatOrder::Elem;
    auto split = [](const std::vector<i64>& v) {
        return std::pair<E, E>{E{v[0], v[1], v[2], v[3]}, E{v[4], v[5], v[6], v[7]}};
    };
    auto join = [](const E& a, const E& b) { return std::vector<i64>{a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3]}; };
    const E zeta = LocalQuatOrder::zeta();
    const E szeta = o.scale(zeta, -1);
    m.left_zeta = action_matrix(8, [&](const std::vector<i64>& v) {
        auto [a, b] = split(v);
        return join(o.mul(zeta, a), o.mul(zeta, b));
    });
    m.left_pi = action_matrix(8, [&](const std::vector<i64>& v) {
        auto [a, b] = split(v);
        return join(o.mul(LocalQuatOrder::pi(), a), o.mul(LocalQuatOrder::pi(), b));
    });
    m.right_zeta = action_matrix(8, [&](const std::vector<i64>& v) {
        auto [a, b] = split(v);
        return join(o.mul(a, zeta), o.mul(b, szeta));
    });
    m.right_pi = action_matrix(8, [&](const std::vector<i64>& v) {
        auto [a, b] = split(v);
        return join(o.scale(b, p), a);
    });
    return m;
}

LocalBimodule change_basis(const LocalBimodule& m, const Matrix& p_mat, const Matrix& p_inv) {
    const i64 md = m.modulus;
    if (!same(mat_mul(p_mat, p_inv, md), identity(m.rank), md)) throw ValidationError("change_basis: matrices are not inverse");
    auto conj = [&](const Matrix& a) { return mat_mul(mat_mul(p_inv, a, md), p_mat, md); };
    return LocalBimodule{m.p, m.k, md, m.rank, conj(m.left_zeta), conj(m.left_pi), conj(m.right_zeta), conj(m.right_pi)};
}

int image_length(const Matrix& a0, i64 p, int k) {
    const i64 md = ipow(p, k);
    Matrix a = a0;
    for (auto& r : a)
        for (auto& v : r) v = mod(v, md);
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    auto val = [&](i64 x) { return x == 0 ? k : valuation(x, p); };
    int length = 0;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        int best = k;
        std::size_t bi = t, bj = t;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                int v = val(a[i][j]);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (best >= k) break;
        std::swap(a[t], a[bi]);
        for (auto& r : a) std::swap(r[t], r[bj]);
        const i64 pe = ipow(p, best);
        const i64 unit_inv = mod_inverse((a[t][t] / pe) % md, md);
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (a[i][t] == 0) continue;
            const i64 f = static_cast<i64>(static_cast<i128>(a[i][t] / pe) * unit_inv % md);
            for (std::size_t j = t; j < cols; ++j) a[i][j] = mod(static_cast<i64>((a[i][j] - static_cast<i128>(f) * a[t][j]) % md), md);
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0) continue;
            const i64 f = static_cast<i64>(static_cast<i128>(a[t][j] / pe) * unit_inv % md);
            for (std::size_t i = t; i < rows; ++i) a[i][j] = mod(static_cast<i64>((a[i][j] - static_cast<i128>(f) * a[i][t]) % md), md);
        }
        length += k - best;
    }
    return length;
}

bool is_admissible(const LocalBimodule& m) {
    const int la = image_length(m.left_pi, m.p, m.k);
    const int lb = image_length(m.right_pi, m.p, m.k);
    const int lab = image_length(hcat(m.left_pi, m.right_pi), m.p, m.k);
    return la == lb && lb == lab;
}

std::pair<int, int> bimodule_type(const LocalBimodule& m) {
    if (auto err = validate(m); !err.empty()) throw ValidationError("invalid bimodule: " + err);
    if (!is_admissible(m)) throw ValidationError("bimodule is not admissible");
    const int n = static_cast<int>(m.rank);
    const Matrix minus = mat_add(m.left_zeta, mat_scale(m.right_zeta, -1, m.modulus), m.modulus);
    const Matrix plus = mat_add(m.left_zeta, m.right_zeta, m.modulus);
    const int ker_minus = n - rank_mod_p(hcat(m.right_pi, minus), m.p);
    const int ker_plus = n - rank_mod_p(hcat(m.right_pi, plus), m.p);
    if (ker_minus % 2 != 0 || ker_plus % 2 != 0) throw std::logic_error("bimodule_type: odd residue multiplicity");
    return {ker_minus / 2, ker_plus / 2};
}

LocalBimodule cm_reduction_bimodule(i64 p, RamifiedChoice choice, int k) {
    if (p == 2) throw ValidationError("wild ramification unsupported (p = 2)");
    LocalQuatOrder o(p, k);
    using E = LocalQuatOrder::Elem;
    using W = LocalQuatOrder::W;
    const i64 md = o.modulus();
    W uprime{1, 0};
    if (choice == RamifiedChoice::SqrtPU) {
        bool found = false;
        for (i64 x = 0; x < p && !found; ++x)
            for (i64 y = 0; y < p && !found; ++y) {
                W w{x, y};
                if (kronecker(o.wnorm(w)[0], p) == -1) {
                    uprime = w;
                    found = true;
                }
            }
    }
    const i64 nu = o.wnorm(uprime)[0];
    const W uinv = [&] {
        W s = o.sigma(uprime);
        const i64 ni = mod_inverse(mod(nu, md), md);
        return W{mod(s[0] * ni, md), mod(s[1] * ni, md)};
    }();
    const E varpi = o.make({0, 0}, uprime);
    const E basis_left[2] = {LocalQuatOrder::one(), LocalQuatOrder::zeta()};

    auto f_elem = [](const std::vector<i64>& v, int slot) { return E{v[4 * slot], v[4 * slot + 1], v[4 * slot + 2], v[4 * slot + 3]}; };
    // kappa = alpha + beta varpi acting on f
    auto kappa_times = [&](i64 alpha, i64 beta, const E& f) { return o.add(o.scale(f, alpha), o.scale(o.mul(varpi, f), beta)); };

    LocalBimodule m{p, k, md, 8, {}, {}, {}, {}};
    auto left = [&](const E& z) {
        return action_matrix(8, [&](const std::vector<i64>& v) {
            E out0{}, out1{};
            for (int e = 0; e < 2; ++e) {
                const E f = f_elem(v, e);
                const E ze = o.mul(z, basis_left[e]);
                const W a{ze[0], ze[1]}, b{ze[2], ze[3]};
                const W w = o.wmul(b, uinv);
                const i64 a1 = a[0], a2 = a[1], b1 = w[0], b2 = mod(-w[1], md);
                out0 = o.add(out0, kappa_times(a1, b1, f));
                out1 = o.add(out1, kappa_times(a2, b2, f));
            }
            return std::vector<i64>{out0[0], out0[1], out0[2], out0[3], out1[0], out1[1], out1[2], out1[3]};
        });
    };
    auto right = [&](const E& z) {
        return action_matrix(8, [&](const std::vector<i64>& v) {
            const E g0 = o.mul(f_elem(v, 0), z), g1 = o.mul(f_elem(v, 1), z);
            return std::vector<i64>{g0[0], g0[1], g0[2], g0[3], g1[0], g1[1], g1[2], g1[3]};
        });
    };
    m.left_zeta = left(LocalQuatOrder::zeta());
    m.left_pi = left(LocalQuatOrder::pi());
    m.right_zeta = right(LocalQuatOrder::zeta());
    m.right_pi = right(LocalQuatOrder::pi());
    if (auto err = validate(m); !err.empty()) throw std::logic_error("cm_reduction_bimodule: " + err);
    return m;
}

BimoduleReport classify_cm_reduction(i64 p, RamifiedChoice choice, int k) {
    auto run = [&](int prec) {
        auto m = cm_reduction_bimodule(p, choice, prec);
        BimoduleReport r{p, prec, is_admissible(m), {0, 0}};
        if (r.admissible) r.type = bimodule_type(m);
        return r;
    };
    BimoduleReport a = run(k), b = run(k + 2);
    if (a.admissible != b.admissible || a.type != b.type)
        throw std::logic_error("bimodule classification changed between precision k and k+2");
    return a;
}

}  // namespace cmlab::localmod
