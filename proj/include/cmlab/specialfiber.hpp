#pragma once

// Finite model of the special fiber at a prime p where the indefinite
// algebra of discriminant pq ramifies: components are two parity copies of
// Cl(O) for the maximal order O of the definite algebra B' of discriminant q,
// singular points are Cl(E) for the Eichler order E of level p in O.

#include "cmlab/lattices.hpp"

#include <string>
#include <vector>

namespace cmlab::specialfiber {

using lattices::ClassSet;

struct WeightedMeasure {
    std::vector<Rational> masses;
    std::size_t size() const { return masses.size(); }
};

/// Masses w_i / sum w (inverse = false) or (1/w_i) / sum 1/w (inverse = true).
WeightedMeasure normalize(const std::vector<i64>& weights, bool inverse);

struct Edge {
    std::size_t singular = 0;  // index into Cl(E)
    std::size_t even = 0;      // component (even, 0)
    std::size_t odd = 0;       // component (odd, 1)
};

struct SpecialFiberModel {
    i64 p = 0, q = 0, dK = 0;
    lattices::OrderPtr maximal, eichler;
    ClassSet singular;    // Cl(E)
    ClassSet components;  // Cl(O), doubled by parity
    std::vector<Edge> edges;

    std::size_t num_components() const { return 2 * components.size(); }
    /// Vertex id of component j with parity 0/1.
    std::size_t vertex(std::size_t j, int parity) const { return parity * components.size() + j; }
    std::vector<i64> component_weights() const;
    std::vector<i64> degrees() const;
    bool connected() const;
    i64 betti_number() const;
    /// [even vertex, odd vertex, multiplicity], sorted.
    std::vector<std::array<std::size_t, 3>> edge_multiplicities() const;
};

/// Gates: p, q prime, p != q, p and q non-split in K = Q(sqrt dK).
void validate(i64 p, i64 q, i64 dK);

SpecialFiberModel build_model(i64 p, i64 q, i64 dK);

/// For every component j and parity: sum over incident edges i of w_j / w_i
/// arranged by the opposite endpoint equals row j of B(p) on Cl(O).
bool brandt_consistent(const SpecialFiberModel& m);

struct Measures {
    WeightedMeasure ram, ram_inv, in, in_inv;
};

Measures measures(const SpecialFiberModel& m);

}  // namespace cmlab::specialfiber
