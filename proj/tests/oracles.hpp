#pragma once

// Brute-force reference computations used by the tests. None of these call
// the library routine they are compared against.

#include "cmlab/lattices.hpp"
#include "cmlab/localmod.hpp"

#include <vector>

namespace oracle {

using cmlab::i64;
using cmlab::Rational;

/// Solubility of a x^2 + b y^2 = z^2 over Q_p by a search for a primitive
/// solution mod p^k that Hensel-lifts (k = 3 for odd p, 5 for p = 2, after
/// reducing a, b to squarefree integers). p = 0 is the real place.
int hilbert_symbol(i64 a, i64 b, i64 p);

/// Reduced primitive forms (a, b, c), |b| <= a <= c, b >= 0 on the
/// boundary, counted by a box search over a, b.
i64 reduced_form_count(i64 D);

/// h(O_K) c prod_{l | c} (1 - (dK|l)/l) / [O_K^x : O_c^x].
i64 conductor_class_number(i64 dK, i64 c);

/// (q - 1)(p + 1)/12 with p = 1 for a maximal order.
Rational eichler_mass(i64 q, i64 level);

/// Elements of reduced norm 1 in the lattice, found by scanning the box
/// |x_m| <= 1 in 1, i, j, k coordinates with step 1/denominator.
i64 unit_count(const cmlab::qalg::QuaternionAlgebra& alg, const cmlab::lat::Lattice& order);

/// Number of unit-conjugacy classes of optimal embeddings of Z_l[w_D] into
/// O_l for the order given by its structure constants: solutions mod l^k
/// that lift to l^(k+2), up to conjugation by units mod l^k.
/// Exhaustive, so meant for l <= 7.
i64 local_embedding_number(const cmlab::lattices::StructureConstants& sc, i64 D, i64 l);

/// Eichler symbol of the order of discriminant D at l: 1 when l divides
/// the conductor, else the Kronecker symbol.
i64 eichler_symbol(i64 D, i64 l);

/// Closed-form local embedding number: 1 - {D/l} at a prime ramified in
/// the algebra, 1 + {D/l} at an Eichler prime of level exactly l.
i64 local_embedding_formula(i64 D, i64 l, bool ramified_in_algebra);

/// Index-n sublattices of Z^2 by listing Hermite forms [[a, b], [0, d]].
i64 sublattice_count(i64 n);

/// Tree distances from v to every vertex of the radius-r ball around v.
std::vector<std::pair<cmlab::localmod::BTVertex, i64>> bfs_ball(const cmlab::localmod::BTVertex& v, int r);

}  // namespace oracle
