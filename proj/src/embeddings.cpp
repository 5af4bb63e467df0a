#include "cmlab/embeddings.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cmlab::embeddings {

namespace {

Vec4 mul(const lattices::StructureConstants& sc, const Vec4& x, const Vec4& y) {
    Vec4 z{};
    for (int a = 0; a < 4; ++a) {
        if (x[a] == 0) continue;
        for (int b = 0; b < 4; ++b) {
            if (y[b] == 0) continue;
            const i64 xy = x[a] * y[b];
            for (int c = 0; c < 4; ++c) z[c] += xy * sc.mult[a][b][c];
        }
    }
    return z;
}

Vec4 conj(const lattices::StructureConstants& sc, const Vec4& x) {
    Vec4 z{};
    for (int a = 0; a < 4; ++a)
        for (int c = 0; c < 4; ++c) z[c] += x[a] * sc.conj[a][c];
    return z;
}

Integer minors_gcd(const std::array<Integer, 4>& u, const std::array<Integer, 4>& v) {
    Integer g = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            Integer m = u[a] * v[b] - u[b] * v[a];
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
        }
    return g;
}

Integer saturation_in(const lat::Lattice& m, const Quat& x) {
    auto one = m.coordinates(Quat::scalar(1));
    auto cx = m.coordinates(x);
    if (!one || !cx) throw std::logic_error("saturation_in: element outside the order");
    return minors_gcd({(*one)[0], (*one)[1], (*one)[2], (*one)[3]}, {(*cx)[0], (*cx)[1], (*cx)[2], (*cx)[3]});
}

}  // namespace

std::pair<i64, i64> generator_trace_norm(i64 D) {
    if (D >= 0) throw ValidationError("not imaginary quadratic: D = " + std::to_string(D));
    return {D, (D * D - D) / 4};
}

Integer saturation_index(const Order& order, const Vec4& x) {
    const auto& one = order.structure().one;
    std::array<Integer, 4> u, v;
    for (int m = 0; m < 4; ++m) {
        u[m] = static_cast<long>(one[m]);
        v[m] = static_cast<long>(x[m]);
    }
    return minors_gcd(u, v);
}

std::vector<Vec4> embedding_elements(const Order& order, i64 D, int jobs) {
    generator_trace_norm(D);
    const auto& sc = order.structure();
    // Gross lattice {2x - tr(x)} in order coordinates
    std::vector<lat::IntVec> rows;
    for (int m = 0; m < 4; ++m) {
        lat::IntVec r;
        for (int c = 0; c < 4; ++c) r[c] = static_cast<long>(2 * (m == c ? 1 : 0) - sc.trace[m] * sc.one[c]);
        rows.push_back(r);
    }
    rows = lat::hermite_normal_form(rows);
    if (rows.size() != 3) throw std::logic_error("embedding_elements: trace-zero lattice is not of rank 3");
    shortvec::BigGram g(3, std::vector<Integer>(3, 0));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int s = 0; s < 4; ++s)
                for (int t = 0; t < 4; ++t) g[a][b] += rows[a][s] * sc.norm_gram[s][t] * rows[b][t];

    std::vector<Vec4> out;
    for (const auto& v : shortvec::vectors_of_norm(g, -2 * D, jobs)) {
        Vec4 x{};
        bool ok = true;
        for (int c = 0; c < 4 && ok; ++c) {
            Integer y = 0;
            for (int a = 0; a < 3; ++a) y += rows[a][c] * static_cast<long>(v[a]);
            Integer num = y + static_cast<long>(D * sc.one[c]);
            if (num % 2 != 0) ok = false;
            else x[c] = to_i64(num / 2);
        }
        if (ok) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GrossPoint> optimal_embeddings(const Order& order, const cmfields::ImagQuadOrder& cm, int jobs) {
    const i64 D = cm.discriminant();
    const auto& sc = order.structure();
    std::vector<Vec4> sols;
    for (const auto& x : embedding_elements(order, D, jobs))
        if (saturation_index(order, x) == 1) sols.push_back(x);

    std::vector<Vec4> units;
    for (const auto& u : lattices::unit_group(order.algebra(), order.lattice())) units.push_back(order.coordinates(u));

    std::vector<char> seen(sols.size(), 0);
    auto locate = [&](const Vec4& x) -> std::size_t {
        auto it = std::lower_bound(sols.begin(), sols.end(), x);
        if (it == sols.end() || *it != x) throw std::logic_error("optimal_embeddings: unit conjugate left the solution set");
        return static_cast<std::size_t>(it - sols.begin());
    };
    std::vector<GrossPoint> out;
    for (std::size_t s = 0; s < sols.size(); ++s) {
        if (seen[s]) continue;
        for (const auto& u : units) seen[locate(mul(sc, mul(sc, u, sols[s]), conj(sc, u)))] = 1;
        GrossPoint gp;
        gp.coords = sols[s];
        gp.witness = order.element(sols[s]);
        gp.conductor = cm.c;
        out.push_back(gp);
    }
    return out;
}

GrossCounts gross_points(const ClassSet& classes, const cmfields::ImagQuadOrder& cm, int jobs) {
    const auto& base = *classes.order;
    const auto& alg = base.algebra();
    const i64 D = cm.discriminant();
    generator_trace_norm(D);
    GrossCounts gc;
    gc.D = D;
    gc.c = cm.c;

    const Integer disc = alg.discriminant();
    const i64 q = disc.fits_slong_p() ? disc.get_si() : 0;
    const i64 p = base.level();
    if (q > 1 && is_prime(q) && cm.c % q != 0 && kronecker(cm.dK, q) == -1) gc.orientation.halved_at_q = true;
    if (p > 1) {
        if (cm.c % p == 0) {
            if (!base.parent()) throw std::logic_error("gross_points: Eichler order without maximal parent");
            gc.orientation.typed_at_p = true;
        } else if (kronecker(cm.dK, p) == 1) {
            gc.orientation.supported = false;
            gc.orientation.note = "orientation at a split Eichler prime is not modelled; counts are unoriented";
        }
    }

    std::optional<lattices::RightIdeal> connecting;
    if (gc.orientation.typed_at_p) connecting = lattices::connecting_ideal(base.parent(), p);

    for (std::size_t i = 0; i < classes.size(); ++i) {
        Order r(alg, classes.left_orders[i], base.level());
        auto pts = optimal_embeddings(r, cm, jobs);
        for (auto& gp : pts) gp.class_index = i;
        const i64 orbits = static_cast<i64>(pts.size());
        gc.unoriented.push_back(orbits);

        std::vector<GrossPoint> kept;
        if (gc.orientation.typed_at_p) {
            const auto& ideal = classes.ideals[i].lattice;
            lat::Lattice m1 = lat::left_order(alg, lat::product(alg, ideal, base.parent()->lattice()));
            lat::Lattice m2 = lat::left_order(alg, lat::product(alg, ideal, connecting->lattice));
            for (auto& gp : pts) {
                const bool a = saturation_in(m1, gp.witness) % p == 0;
                const bool b = saturation_in(m2, gp.witness) % p == 0;
                if (a == b) throw std::logic_error("gross_points: witness is not of a single local type at p");
                if (a) kept.push_back(gp);
            }
        } else {
            kept = pts;
        }
        i64 m = static_cast<i64>(kept.size());
        if (gc.orientation.halved_at_q) {
            if (m % 2 != 0) throw std::logic_error("gross_points: odd count where conjugation pairs classes");
            m /= 2;
            // keep the orbit of {x, D - x} whose least witness is smaller
            std::vector<Vec4> units;
            for (const auto& u : lattices::unit_group(alg, r.lattice())) units.push_back(r.coordinates(u));
            const auto& sc = r.structure();
            std::vector<GrossPoint> half;
            for (auto& gp : kept) {
                Vec4 bar{};
                for (int c = 0; c < 4; ++c) bar[c] = D * sc.one[c] - gp.coords[c];
                Vec4 least = bar;
                for (const auto& u : units) least = std::min(least, mul(sc, mul(sc, u, bar), conj(sc, u)));
                if (least == gp.coords) throw std::logic_error("gross_points: conjugation fixes an orbit at an inert q");
                if (gp.coords < least) half.push_back(gp);
            }
            if (static_cast<i64>(half.size()) != m) throw std::logic_error("gross_points: conjugation pairing is not a perfect matching");
            kept = std::move(half);
        }
        gc.counts.push_back(m);
        gc.total += m;
        gc.points.push_back(std::move(kept));
    }
    return gc;
}

}  // namespace cmlab::embeddings
