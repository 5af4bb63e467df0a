#include "cmlab/lattices.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace cmlab::lattices {

namespace {

bool integral(const Rational& x) { return x.get_den() == 1; }

Integer as_integer(const Rational& x, const char* what) {
    if (!integral(x)) throw std::domain_error(std::string(what) + ": expected an integer, got " + to_string(x));
    return x.get_num();
}

// Lattice {x in L : A x = 0 mod p}, for the linear forms A (rows, mod p)
// in L-coordinates.
Lattice kernel_lattice(const std::vector<Quat>& basis, std::vector<Vec4> rows, i64 p) {
    for (auto& r : rows)
        for (auto& v : r) v = mod(v, p);
    // reduced row echelon form mod p
    std::vector<int> pivot_cols;
    std::size_t r = 0;
    for (int col = 0; col < 4 && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        const i64 inv = mod_inverse(rows[r][col], p);
        for (auto& v : rows[r]) v = mod(v * inv, p);
        for (std::size_t s = 0; s < rows.size(); ++s) {
            if (s == r || rows[s][col] == 0) continue;
            const i64 f = rows[s][col];
            for (int c = 0; c < 4; ++c) rows[s][c] = mod(rows[s][c] - f * rows[r][c], p);
        }
        pivot_cols.push_back(col);
        ++r;
    }
    std::vector<Quat> gens;
    for (const auto& b : basis) gens.push_back(b * Rational(p));
    for (int free = 0; free < 4; ++free) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
        Vec4 v{};
        v[free] = 1;
        for (std::size_t s = 0; s < pivot_cols.size(); ++s) v[pivot_cols[s]] = mod(-rows[s][free], p);
        Quat x;
        for (int m = 0; m < 4; ++m) x = x + basis[m] * Rational(v[m]);
        gens.push_back(x);
    }
    return Lattice::from_generators(gens);
}

Vec4 mul_coords(const StructureConstants& sc, const Vec4& x, const Vec4& y, i64 m) {
    Vec4 z{};
    for (int a = 0; a < 4; ++a) {
        if (x[a] == 0) continue;
        for (int b = 0; b < 4; ++b) {
            if (y[b] == 0) continue;
            const i128 xy = static_cast<i128>(x[a]) * y[b] % m;
            for (int c = 0; c < 4; ++c) z[c] = static_cast<i64>((z[c] + xy * sc.mult[a][b][c]) % m);
        }
    }
    for (auto& v : z) v = mod(v, m);
    return z;
}

}  // namespace

Integer reduced_discriminant(const QuaternionAlgebra& alg, const Lattice& order) {
    Rational r = 4 * abs(alg.a() * alg.b()) * order.covolume();
    return as_integer(r, "reduced discriminant");
}

bool is_order(const QuaternionAlgebra& alg, const Lattice& l) {
    if (l.rank() != 4) return false;
    if (!l.contains(Quat::scalar(1))) return false;
    auto basis = l.basis();
    for (const auto& x : basis) {
        if (!integral(alg.tr(x)) || !integral(alg.nr(x))) return false;
        for (const auto& y : basis) {
            if (!integral(alg.tr(alg.mul(x, alg.conj(y))))) return false;
            if (!l.contains(alg.mul(x, y))) return false;
        }
    }
    return true;
}

Order::Order(QuaternionAlgebra alg, Lattice lattice, i64 level, std::shared_ptr<const Order> parent)
    : alg_(std::move(alg)), lat_(std::move(lattice)), level_(level), parent_(std::move(parent)) {
    if (!is_order(alg_, lat_)) throw std::domain_error("lattice is not an order");
    rdisc_ = lattices::reduced_discriminant(alg_, lat_);
    if (rdisc_ != alg_.discriminant() * level_)
        throw std::domain_error("order discriminant " + to_string(rdisc_) + " does not match disc(B) * level");
    auto b = basis();
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) sc_.mult[x][y] = coordinates(alg_.mul(b[x], b[y]));
    sc_.one = coordinates(Quat::scalar(1));
    sc_.norm_gram.assign(4, shortvec::Vec(4, 0));
    for (int x = 0; x < 4; ++x) {
        sc_.conj[x] = coordinates(alg_.conj(b[x]));
        sc_.trace[x] = to_i64(as_integer(alg_.tr(b[x]), "trace"));
        for (int y = 0; y < 4; ++y)
            sc_.norm_gram[x][y] = to_i64(as_integer(alg_.tr(alg_.mul(b[x], alg_.conj(b[y]))), "norm form"));
    }
}

Vec4 Order::coordinates(const Quat& x) const {
    auto c = lat_.coordinates(x);
    if (!c) throw std::domain_error("element not in order");
    return {to_i64((*c)[0]), to_i64((*c)[1]), to_i64((*c)[2]), to_i64((*c)[3])};
}

Quat Order::element(const Vec4& c) const {
    auto b = basis();
    Quat x;
    for (int m = 0; m < 4; ++m) x = x + b[m] * Rational(c[m]);
    return x;
}

shortvec::BigGram RightIdeal::gram() const {
    const auto& alg = order->algebra();
    auto b = lattice.basis();
    shortvec::BigGram g(4, std::vector<Integer>(4));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) g[x][y] = as_integer(alg.tr(alg.mul(b[x], alg.conj(b[y]))) / norm, "ideal norm form");
    return g;
}

RightIdeal make_right_ideal(const Lattice& l, OrderPtr order) {
    Rational n = rational_sqrt(l.covolume() / order->lattice().covolume());
    return RightIdeal{l, std::move(order), n};
}

RightIdeal unit_ideal(OrderPtr order) {
    Lattice l = order->lattice();
    return RightIdeal{l, std::move(order), Rational(1)};
}

Lattice left_order(const RightIdeal& i) { return lat::left_order(i.order->algebra(), i.lattice); }

Lattice saturate(const QuaternionAlgebra& alg, const Lattice& start) {
    const Integer target = alg.discriminant();
    Lattice o = start;
    for (;;) {
        Integer d = reduced_discriminant(alg, o);
        if (d == target) return o;
        Integer excess = d / target;
        bool grown = false;
        for (const auto& [ell_big, e] : factor(excess)) {
            const i64 ell = to_i64(ell_big);
            auto basis = o.basis();
            for (i64 code = 1; code < ipow(ell, 4) && !grown; ++code) {
                i64 t = code;
                Quat y;
                for (int m = 0; m < 4; ++m, t /= ell) y = y + basis[m] * Rational(t % ell);
                Quat z = y / Rational(ell);
                if (!integral(alg.tr(z)) || !integral(alg.nr(z))) continue;
                std::vector<Quat> gens = basis;
                gens.push_back(z);
                Lattice cand = Lattice::from_generators(gens);
                bool ok = true;
                for (int it = 0; it < 16 && ok; ++it) {
                    Lattice next = lat::sum(cand, lat::product(alg, cand, cand));
                    for (const auto& x : next.basis())
                        if (!integral(alg.tr(x)) || !integral(alg.nr(x))) ok = false;
                    if (next == cand) break;
                    cand = next;
                }
                if (ok && is_order(alg, cand)) {
                    o = cand;
                    grown = true;
                }
            }
            if (grown) break;
        }
        if (!grown) throw std::logic_error("saturate: no integral overorder found");
    }
}

OrderPtr maximal_order(const QuaternionAlgebra& alg) {
    if (!alg.is_definite()) throw ValidationError("class set infinite/unsupported: indefinite algebra");
    const Integer disc = alg.discriminant();
    if (!disc.fits_slong_p() || !is_prime(disc.get_si()))
        throw ValidationError("unsupported discriminant: " + to_string(disc) + " is not prime");
    const i64 q = disc.get_si();
    const Rational& a = alg.a();
    const Rational& b = alg.b();
    std::vector<Quat> gens;
    if (q == 2 && a == -1 && b == -1) {
        gens = {Quat(1, 0, 0, 0), Quat(0, 1, 0, 0), Quat(0, 0, 1, 0), Quat(Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2))};
    } else if (q % 4 == 3 && a == -1 && b == -q) {
        gens = {Quat(1, 0, 0, 0), Quat(0, 1, 0, 0), Quat(Rational(1, 2), 0, Rational(1, 2), 0), Quat(0, Rational(1, 2), 0, Rational(1, 2))};
    } else if (q % 8 == 5 && a == -2 && b == -q) {
        gens = {Quat(1, 0, 0, 0), Quat(Rational(1, 2), 0, Rational(1, 2), Rational(1, 2)),
                Quat(0, Rational(1, 4), Rational(1, 2), Rational(1, 4)), Quat(0, 0, 0, 1)};
    } else if (q % 8 == 1 && a == -q && b < 0 && integral(b)) {
        const i64 r = to_i64(-b.get_num());
        i64 c = 0;
        while ((c * c % r * (q % r) + 1) % r != 0) ++c;
        gens = {Quat(Rational(1, 2), 0, Rational(1, 2), 0), Quat(0, Rational(1, 2), 0, Rational(1, 2)),
                Quat(0, 0, Rational(1, r), Rational(c, r)), Quat(0, 0, 0, 1)};
    }
    Lattice l;
    if (!gens.empty()) l = Lattice::from_generators(gens);
    if (gens.empty() || !is_order(alg, l) || reduced_discriminant(alg, l) != q) {
        Lattice standard = Lattice::from_generators({Quat(1, 0, 0, 0), Quat(0, 1, 0, 0), Quat(0, 0, 1, 0), Quat(0, 0, 0, 1)});
        if (!is_order(alg, standard)) throw ValidationError("structure constants must be integral");
        l = saturate(alg, standard);
    }
    return std::make_shared<const Order>(alg, l, 1);
}

OrderPtr maximal_order(i64 q) { return maximal_order(qalg::definite_algebra(q)); }

Mat2 Splitting::image(const Vec4& coords) const {
    Mat2 z{};
    for (int m = 0; m < 4; ++m)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                z[a][b] = static_cast<i64>((z[a][b] + static_cast<i128>(mod(coords[m], modulus)) * basis_images[m][a][b]) % modulus);
    return z;
}

Splitting local_splitting(const Order& order, i64 p, int k) {
    if (!is_prime(p)) throw ValidationError("local_splitting: p must be prime");
    if (k < 1) throw ValidationError("local_splitting: precision must be positive");
    if (order.algebra().ramifies_at(p)) throw ValidationError("no splitting at ramified prime " + std::to_string(p));
    if (order.reduced_discriminant() % p == 0)
        throw ValidationError("local_splitting: order is not maximal at " + std::to_string(p));
    const auto& sc = order.structure();
    const i64 modulus = ipow(p, k);

    auto nr_exact = [&](const Vec4& x) {
        i128 s = 0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) s += static_cast<i128>(sc.norm_gram[a][b]) * x[a] * x[b];
        return s / 2;
    };
    std::optional<Vec4> e0;
    for (i64 code = 0; code < ipow(p, 4) && !e0; ++code) {
        Vec4 x{};
        i64 t = code;
        for (int m = 0; m < 4; ++m, t /= p) x[m] = t % p;
        i64 tr = 0;
        for (int m = 0; m < 4; ++m) tr += sc.trace[m] * x[m];
        if (mod(tr, p) != 1) continue;
        if (nr_exact(x) % p != 0) continue;
        e0 = x;
    }
    if (!e0) throw std::logic_error("local_splitting: no idempotent mod p");

    Vec4 e = *e0;
    for (int it = 0; it < 128; ++it) {
        Vec4 e2 = mul_coords(sc, e, e, modulus);
        Vec4 e3 = mul_coords(sc, e2, e, modulus);
        Vec4 next{};
        for (int m = 0; m < 4; ++m) next[m] = mod(3 * e2[m] - 2 * e3[m], modulus);
        if (next == e) break;
        e = next;
    }
    if (mul_coords(sc, e, e, modulus) != e) throw std::logic_error("local_splitting: idempotent lift failed");

    std::array<Vec4, 4> v;
    for (int m = 0; m < 4; ++m) {
        Vec4 bm{};
        bm[m] = 1;
        v[m] = mul_coords(sc, bm, e, modulus);
    }
    int m1 = -1, m2 = -1, r1 = -1, r2 = -1;
    for (int a = 0; a < 4 && m1 < 0; ++a)
        for (int b = a + 1; b < 4 && m1 < 0; ++b)
            for (int x = 0; x < 4 && m1 < 0; ++x)
                for (int y = x + 1; y < 4 && m1 < 0; ++y) {
                    i64 det = mod(v[a][x] * v[b][y] - v[b][x] * v[a][y], p);
                    if (det != 0) {
                        m1 = a;
                        m2 = b;
                        r1 = x;
                        r2 = y;
                    }
                }
    if (m1 < 0) throw std::logic_error("local_splitting: O e is not of rank 2");
    const Vec4 &v1 = v[m1], &v2 = v[m2];
    const i64 det = mod(static_cast<i64>((static_cast<i128>(v1[r1]) * v2[r2] - static_cast<i128>(v2[r1]) * v1[r2]) % modulus), modulus);
    const i64 dinv = mod_inverse(det, modulus);

    // coordinates (alpha, beta) of w = alpha v1 + beta v2
    auto solve = [&](const Vec4& w) {
        i128 al = (static_cast<i128>(w[r1]) * v2[r2] - static_cast<i128>(w[r2]) * v2[r1]) % modulus;
        i128 be = (static_cast<i128>(v1[r1]) * w[r2] - static_cast<i128>(v1[r2]) * w[r1]) % modulus;
        i64 alpha = mod(static_cast<i64>(al % modulus * dinv % modulus), modulus);
        i64 beta = mod(static_cast<i64>(be % modulus * dinv % modulus), modulus);
        for (int c = 0; c < 4; ++c)
            if (mod(static_cast<i64>((static_cast<i128>(alpha) * v1[c] + static_cast<i128>(beta) * v2[c] - w[c]) % modulus), modulus) != 0)
                throw std::logic_error("local_splitting: inconsistent left action");
        return std::pair<i64, i64>{alpha, beta};
    };

    Splitting s;
    s.p = p;
    s.k = k;
    s.modulus = modulus;
    for (int m = 0; m < 4; ++m) {
        Vec4 bm{};
        bm[m] = 1;
        auto [a1, b1] = solve(mul_coords(sc, bm, v1, modulus));
        auto [a2, b2] = solve(mul_coords(sc, bm, v2, modulus));
        s.basis_images[m] = Mat2{{{a1, a2}, {b1, b2}}};
    }
    auto image_of = [&](const Quat& x) {
        auto rc = order.lattice().rational_coordinates(x);
        Vec4 c{};
        for (int m = 0; m < 4; ++m) {
            const Integer& den = rc[m].get_den();
            if (den % p == 0) throw std::domain_error("local_splitting: element not p-integral in the order");
            Integer num = rc[m].get_num() % modulus;
            i64 d = to_i64(den % modulus);
            c[m] = mod(static_cast<i64>(static_cast<i128>(to_i64(num)) * mod_inverse(d, modulus) % modulus), modulus);
        }
        return s.image(c);
    };
    s.i_image = image_of(Quat(0, 1, 0, 0));
    s.j_image = image_of(Quat(0, 0, 1, 0));
    return s;
}

OrderPtr eichler_order(OrderPtr maximal_ptr, i64 p) {
    const Order& maximal = *maximal_ptr;
    if (!is_prime(p)) throw ValidationError("eichler_order: level must be prime");
    if (maximal.reduced_discriminant() % p == 0)
        throw ValidationError("eichler_order: level " + std::to_string(p) + " divides the discriminant");
    if (maximal.level() != 1) throw ValidationError("eichler_order: expected a maximal order");
    Splitting s = local_splitting(maximal, p, 1);
    Vec4 row{};
    for (int m = 0; m < 4; ++m) row[m] = s.basis_images[m][1][0];
    Lattice l = kernel_lattice(maximal.basis(), {row}, p);
    return std::make_shared<const Order>(maximal.algebra(), l, p, maximal_ptr);
}

RightIdeal connecting_ideal(OrderPtr maximal, i64 p) {
    Splitting s = local_splitting(*maximal, p, 1);
    Vec4 r1{}, r2{};
    for (int m = 0; m < 4; ++m) {
        r1[m] = s.basis_images[m][1][0];
        r2[m] = s.basis_images[m][1][1];
    }
    Lattice l = kernel_lattice(maximal->basis(), {r1, r2}, p);
    return make_right_ideal(l, std::move(maximal));
}

std::vector<RightIdeal> neighbors(const RightIdeal& i, i64 l) {
    if (!is_prime(l) || i.order->reduced_discriminant() % l == 0)
        throw ValidationError("neighbors: l must be a prime not dividing the discriminant");
    const auto& alg = i.order->algebra();
    auto g = i.gram();
    const i64 m2 = 2 * l;
    std::vector<std::vector<i64>> gm(4, std::vector<i64>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            Integer r = g[a][b] % m2;
            gm[a][b] = mod(r.get_si(), m2);
        }
    auto ib = i.lattice.basis();
    auto ob = i.order->basis();
    std::vector<Quat> scaled;
    for (const auto& b : ib) scaled.push_back(b * Rational(l));

    std::vector<Lattice> found;
    for (i64 code = 1; code < ipow(l, 4); ++code) {
        Vec4 c{};
        i64 t = code;
        for (int m = 0; m < 4; ++m, t /= l) c[m] = t % l;
        int lead = 3;
        while (c[lead] == 0) --lead;
        if (c[lead] != 1) continue;  // one representative per line
        i64 q = 0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) q = (q + gm[a][b] * c[a] % m2 * c[b]) % m2;
        if (q % m2 != 0) continue;  // nr(x)/nr(I) = q/2 must vanish mod l
        Quat x;
        for (int m = 0; m < 4; ++m) x = x + ib[m] * Rational(c[m]);
        std::vector<Quat> gens = scaled;
        for (const auto& b : ob) gens.push_back(alg.mul(x, b));
        Lattice j = Lattice::from_generators(gens);
        if (j.covolume() != i.lattice.covolume() * Rational(l * l)) continue;
        if (std::find(found.begin(), found.end(), j) == found.end()) found.push_back(j);
    }
    std::sort(found.begin(), found.end());
    std::vector<RightIdeal> out;
    for (const auto& j : found) out.push_back(RightIdeal{j, i.order, i.norm * l});
    return out;
}

std::optional<Quat> isomorphism(const RightIdeal& i, const RightIdeal& j) {
    if (i.order->lattice() != j.order->lattice()) throw ValidationError("isomorphism: ideals have different right orders");
    const auto& alg = i.order->algebra();
    Lattice prod = lat::product(alg, j.lattice, lat::conjugate(alg, i.lattice));
    auto b = prod.basis();
    const Rational scale = i.norm * j.norm;
    shortvec::BigGram g(4, std::vector<Integer>(4));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) g[x][y] = as_integer(alg.tr(alg.mul(b[x], alg.conj(b[y]))) / scale, "product norm form");
    for (const auto& v : shortvec::vectors_of_norm(g, 2)) {
        Quat y;
        for (int m = 0; m < 4; ++m) y = y + b[m] * Rational(v[m]);
        Quat cand = y / i.norm;
        if (lat::left_multiply(alg, cand, i.lattice) == j.lattice) return cand;
    }
    return std::nullopt;
}

bool is_isomorphic(const RightIdeal& i, const RightIdeal& j) { return isomorphism(i, j).has_value(); }

std::vector<i64> theta(const RightIdeal& i, int max_half) { return shortvec::theta_series(i.gram(), max_half); }

std::vector<Quat> unit_group(const QuaternionAlgebra& alg, const Lattice& order) {
    auto b = order.basis();
    shortvec::BigGram g(4, std::vector<Integer>(4));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) g[x][y] = as_integer(alg.tr(alg.mul(b[x], alg.conj(b[y]))), "order norm form");
    std::vector<Quat> out;
    for (const auto& v : shortvec::vectors_of_norm(g, 2)) {
        Quat u;
        for (int m = 0; m < 4; ++m) u = u + b[m] * Rational(v[m]);
        out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

i64 unit_weight(const QuaternionAlgebra& alg, const Lattice& order) {
    return static_cast<i64>(unit_group(alg, order).size()) / 2;
}

i64 unit_weight(const Order& order) { return unit_weight(order.algebra(), order.lattice()); }

std::size_t ClassSet::classify(const RightIdeal& i) const {
    auto th = theta(i);
    for (std::size_t c = 0; c < ideals.size(); ++c) {
        if (thetas[c] != th) continue;
        if (is_isomorphic(ideals[c], i)) return c;
    }
    throw std::logic_error("classify: ideal matches no class representative");
}

ClassSet right_ideal_classes(OrderPtr order, i64 l) {
    if (!order->algebra().is_definite()) throw ValidationError("class set infinite/unsupported: indefinite algebra");
    const Integer& d = order->reduced_discriminant();
    if (l == 0) {
        l = 2;
        while (d % l == 0) l = next_prime(l);
    }
    if (!is_prime(l) || d % l == 0) throw ValidationError("neighbour prime must be a prime not dividing the discriminant");

    ClassSet cs;
    cs.order = order;
    cs.neighbour_prime = l;
    cs.ideals.push_back(unit_ideal(order));
    cs.thetas.push_back(theta(cs.ideals.back()));
    for (std::size_t head = 0; head < cs.ideals.size(); ++head) {
        for (auto& j : neighbors(cs.ideals[head], l)) {
            auto th = theta(j);
            bool known = false;
            for (std::size_t c = 0; c < cs.ideals.size() && !known; ++c)
                if (cs.thetas[c] == th && is_isomorphic(cs.ideals[c], j)) known = true;
            if (!known) {
                cs.ideals.push_back(std::move(j));
                cs.thetas.push_back(std::move(th));
            }
        }
    }
    for (const auto& i : cs.ideals) {
        Lattice lo = left_order(i);
        cs.weights.push_back(unit_weight(order->algebra(), lo));
        cs.left_orders.push_back(std::move(lo));
    }
    return cs;
}

std::vector<std::vector<i64>> brandt_matrix(const ClassSet& classes, i64 n) {
    if (n < 1) throw ValidationError("brandt_matrix: n must be positive");
    const Integer& d = classes.order->reduced_discriminant();
    Integer g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), Integer(static_cast<long>(n)).get_mpz_t());
    if (g != 1) throw ValidationError("bad level: gcd(n, disc) = " + to_string(g));
    const auto& alg = classes.order->algebra();
    const std::size_t h = classes.size();
    std::vector<std::vector<i64>> out(h, std::vector<i64>(h, 0));
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t j = 0; j < h; ++j) {
            const auto& ii = classes.ideals[i];
            const auto& jj = classes.ideals[j];
            Lattice prod = lat::product(alg, ii.lattice, lat::conjugate(alg, jj.lattice));
            auto b = prod.basis();
            const Rational scale = ii.norm * jj.norm;
            shortvec::BigGram gram(4, std::vector<Integer>(4));
            for (int x = 0; x < 4; ++x)
                for (int y = 0; y < 4; ++y) gram[x][y] = as_integer(alg.tr(alg.mul(b[x], alg.conj(b[y]))) / scale, "brandt norm form");
            const i64 count = static_cast<i64>(shortvec::vectors_of_norm(gram, 2 * n).size());
            const i64 units = 2 * classes.weights[j];
            if (count % units != 0) throw std::logic_error("brandt_matrix: count not divisible by the unit group order");
            out[i][j] = count / units;
        }
    }
    return out;
}

Rational mass(const ClassSet& classes) {
    Rational m = 0;
    for (i64 w : classes.weights) m += Rational(1, w);
    m.canonicalize();
    return m;
}

Rational eichler_mass(i64 q, i64 level) {
    Rational m(q - 1, 12);
    if (level != 1) m *= Rational(level + 1);
    m.canonicalize();
    return m;
}

}  // namespace cmlab::lattices
