#pragma once

// Optimal embeddings O_c -> R and Gross points.
//
// An embedding is recorded by the image x of w_D = (D + sqrt D)/2, so
// tr(x) = D and nr(x) = (D^2 - D)/4. Embeddings are counted modulo
// conjugation by R^x.

#include "cmlab/cmfields.hpp"
#include "cmlab/lattices.hpp"

#include <string>
#include <vector>

namespace cmlab::embeddings {

using lattices::ClassSet;
using lattices::Order;
using lattices::Vec4;
using qalg::Quat;

struct GrossPoint {
    std::size_t class_index = 0;
    Quat witness;  // lexicographically least in its orbit (order coordinates)
    Vec4 coords{};
    i64 conductor = 1;
};

/// tr and nr of w_D.
std::pair<i64, i64> generator_trace_norm(i64 D);

/// Saturation index of Z + Z x inside the order (1 means optimal).
Integer saturation_index(const Order& order, const Vec4& x);

/// All x in the order with the trace and norm of w_D, in order coordinates,
/// sorted. Non-optimal ones included.
std::vector<Vec4> embedding_elements(const Order& order, i64 D, int jobs = 1);

/// One witness per unit-conjugacy class of optimal embeddings.
std::vector<GrossPoint> optimal_embeddings(const Order& order, const cmfields::ImagQuadOrder& cm, int jobs = 1);

/// Which local orientation classes the counts keep.
struct Orientation {
    bool halved_at_q = false;    // q inert in K: one of the two conjugate classes
    bool typed_at_p = false;     // p | c at the Eichler prime: type A only
    bool supported = true;       // false: split Eichler prime with p not dividing c
    std::string note;
};

struct GrossCounts {
    i64 D = 0;
    i64 c = 1;
    std::vector<i64> unoriented;  // orbit counts per class
    std::vector<i64> counts;      // oriented counts per class (one Pic(O_c)-torsor)
    i64 total = 0;                // sum of counts
    Orientation orientation;
    std::vector<std::vector<GrossPoint>> points;  // kept witnesses per class
};

/// Counts m_i over the class set, using the left orders of the
/// representatives. jobs bounds the per-class parallelism.
GrossCounts gross_points(const ClassSet& classes, const cmfields::ImagQuadOrder& cm, int jobs = 1);

}  // namespace cmlab::embeddings
