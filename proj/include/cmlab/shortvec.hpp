#pragma once

// Lattice-point enumeration for positive-definite integral quadratic forms
// Q(x) = x^T G x. Bounds are taken from a floating LDL^T factorization with
// a safety margin; every reported vector is checked in exact arithmetic.
//
// Two implementations are kept:
//   *_reference  plain recursive Fincke-Pohst over the whole ellipsoid,
//                serial, used as the test oracle;
//   vectors_of_norm  the production kernel: solves the innermost coordinate
//                exactly and splits the outermost coordinate across OpenMP
//                threads.

#include "cmlab/arith.hpp"

#include <vector>

namespace cmlab::shortvec {

using Gram = std::vector<std::vector<i64>>;
using Vec = std::vector<i64>;

/// Exact Q(x) = x^T G x.
i128 evaluate(const Gram& g, const Vec& x);

/// All x != 0 with Q(x) <= bound, lexicographically sorted.
std::vector<Vec> enumerate_reference(const Gram& g, i64 bound);

/// All x with Q(x) == target (target > 0), lexicographically sorted.
std::vector<Vec> vectors_of_norm_reference(const Gram& g, i64 target);

/// Same contract as vectors_of_norm_reference. jobs <= 0 means the OpenMP
/// default; jobs == 1 runs the kernel serially.
std::vector<Vec> vectors_of_norm(const Gram& g, i64 target, int jobs = 1);

/// Gram matrix with arbitrary-precision entries, as produced by the
/// lattice layer before reduction.
using BigGram = std::vector<std::vector<Integer>>;

/// LLL-reduced form: gram = U * G * U^T; a vector y in reduced
/// coordinates corresponds to x = U^T y in the original ones.
struct Reduced {
    Gram gram;
    std::vector<Vec> transform;
    Vec to_original(const Vec& y) const;
};

Reduced lll_reduce(const BigGram& g);

/// vectors_of_norm on an LLL-reduced copy of g, returned in the original
/// coordinates (sorted).
std::vector<Vec> vectors_of_norm(const BigGram& g, i64 target, int jobs = 1);
std::vector<Vec> enumerate(const BigGram& g, i64 bound);

/// Number of vectors with Q(x) == 2t for t = 0..max_half (theta series of an
/// even form, coefficient t counts vectors with Q = 2t).
std::vector<i64> theta_series(const BigGram& g, int max_half);

}  // namespace cmlab::shortvec
