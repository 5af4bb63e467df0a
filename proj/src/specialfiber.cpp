#include "cmlab/specialfiber.hpp"

#include "cmlab/cmfields.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cmlab::specialfiber {

WeightedMeasure normalize(const std::vector<i64>& weights, bool inverse) {
    WeightedMeasure m;
    Rational total = 0;
    for (i64 w : weights) {
        if (w <= 0) throw ValidationError("weights must be positive");
        Rational x = inverse ? Rational(1, w) : Rational(w);
        x.canonicalize();
        m.masses.push_back(x);
        total += x;
    }
    for (auto& x : m.masses) {
        x /= total;
        x.canonicalize();
    }
    return m;
}

std::vector<i64> SpecialFiberModel::component_weights() const {
    std::vector<i64> w = components.weights;
    w.insert(w.end(), components.weights.begin(), components.weights.end());
    return w;
}

std::vector<i64> SpecialFiberModel::degrees() const {
    std::vector<i64> d(num_components(), 0);
    for (const auto& e : edges) {
        ++d[vertex(e.even, 0)];
        ++d[vertex(e.odd, 1)];
    }
    return d;
}

bool SpecialFiberModel::connected() const {
    const std::size_t n = num_components();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : edges) parent[find(vertex(e.even, 0))] = find(vertex(e.odd, 1));
    for (std::size_t v = 1; v < n; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

i64 SpecialFiberModel::betti_number() const {
    return 1 - static_cast<i64>(num_components()) + static_cast<i64>(edges.size());
}

std::vector<std::array<std::size_t, 3>> SpecialFiberModel::edge_multiplicities() const {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> mult;
    for (const auto& e : edges) ++mult[{vertex(e.even, 0), vertex(e.odd, 1)}];
    std::vector<std::array<std::size_t, 3>> out;
    for (const auto& [k, v] : mult) out.push_back({k.first, k.second, v});
    return out;
}

void validate(i64 p, i64 q, i64 dK) {
    if (!is_prime(p)) throw ValidationError("p must be prime");
    if (!is_prime(q)) throw ValidationError("unsupported discriminant: q must be prime");
    if (p == q) throw ValidationError("v must be a single ramified prime with B' unramified at v (p = q)");
    if (!cmfields::is_fundamental(dK) || dK >= 0) throw ValidationError("dK must be a negative fundamental discriminant");
    if (kronecker(dK, p) == 1) throw ValidationError("split place not covered by the theorem: p splits in K");
    if (kronecker(dK, q) == 1) throw ValidationError("K does not embed in B': q splits in K");
}

SpecialFiberModel build_model(i64 p, i64 q, i64 dK) {
    validate(p, q, dK);
    SpecialFiberModel m;
    m.p = p;
    m.q = q;
    m.dK = dK;
    m.maximal = lattices::maximal_order(q);
    m.eichler = lattices::eichler_order(m.maximal, p);
    m.components = lattices::right_ideal_classes(m.maximal);
    m.singular = lattices::right_ideal_classes(m.eichler);
    const auto& alg = m.maximal->algebra();
    const auto j1 = lattices::connecting_ideal(m.maximal, p);
    for (std::size_t i = 0; i < m.singular.size(); ++i) {
        const auto& ideal = m.singular.ideals[i].lattice;
        auto even = lattices::make_right_ideal(lat::product(alg, ideal, m.maximal->lattice()), m.maximal);
        auto odd = lattices::make_right_ideal(lat::product(alg, ideal, j1.lattice), m.maximal);
        m.edges.push_back({i, m.components.classify(even), m.components.classify(odd)});
    }
    return m;
}

bool brandt_consistent(const SpecialFiberModel& m) {
    const std::size_t h = m.components.size();
    const auto b = lattices::brandt_matrix(m.components, m.p);
    for (int parity = 0; parity < 2; ++parity) {
        std::vector<std::vector<Rational>> acc(h, std::vector<Rational>(h, 0));
        for (const auto& e : m.edges) {
            const std::size_t from = parity == 0 ? e.even : e.odd;
            const std::size_t to = parity == 0 ? e.odd : e.even;
            Rational r(m.components.weights[from], m.singular.weights[e.singular]);
            r.canonicalize();
            acc[from][to] += r;
        }
        for (std::size_t j = 0; j < h; ++j)
            for (std::size_t k = 0; k < h; ++k)
                if (acc[j][k] != b[j][k]) return false;
    }
    return true;
}

Measures measures(const SpecialFiberModel& m) {
    Measures out;
    out.ram = normalize(m.singular.weights, false);
    out.ram_inv = normalize(m.singular.weights, true);
    out.in = normalize(m.component_weights(), false);
    out.in_inv = normalize(m.component_weights(), true);
    return out;
}

}  // namespace cmlab::specialfiber
