#pragma once

// Z-lattices inside a quaternion algebra, stored as (1/den) * rowspan(H)
// with H in row Hermite normal form. Equal lattices have equal
// representations, so == and < are canonical.

#include "cmlab/qalg.hpp"

#include <array>
#include <optional>
#include <vector>

namespace cmlab::lat {

using qalg::Quat;
using qalg::QuaternionAlgebra;
using IntVec = std::array<Integer, 4>;

/// Row Hermite normal form: upper echelon, positive pivots, entries above
/// each pivot reduced into [0, pivot). Zero rows are dropped.
std::vector<IntVec> hermite_normal_form(std::vector<IntVec> rows);

class Lattice {
public:
    Lattice() = default;
    static Lattice from_generators(const std::vector<Quat>& gens);

    int rank() const { return static_cast<int>(rows_.size()); }
    const Integer& denominator() const { return den_; }
    const std::vector<IntVec>& hnf() const { return rows_; }
    std::vector<Quat> basis() const;

    bool contains(const Quat& x) const;
    /// Integer coordinates of x in basis(), if x lies in the lattice.
    std::optional<std::vector<Integer>> coordinates(const Quat& x) const;
    /// Rational coordinates of x in basis() (full rank only).
    std::array<Rational, 4> rational_coordinates(const Quat& x) const;

    /// |det| of the basis in 1,i,j,k coordinates (full rank only).
    Rational covolume() const;

    bool operator==(const Lattice& o) const { return den_ == o.den_ && rows_ == o.rows_; }
    bool operator!=(const Lattice& o) const { return !(*this == o); }
    /// Lexicographic on (denominator, HNF entries).
    bool operator<(const Lattice& o) const;

private:
    Integer den_{1};
    std::vector<IntVec> rows_;
    std::vector<int> pivots_;
};

Lattice sum(const Lattice& x, const Lattice& y);
/// Full-rank lattices only.
Lattice intersection(const Lattice& x, const Lattice& y);
Lattice product(const QuaternionAlgebra& alg, const Lattice& x, const Lattice& y);
Lattice conjugate(const QuaternionAlgebra& alg, const Lattice& x);
Lattice scale(const Lattice& x, const Rational& s);
Lattice left_multiply(const QuaternionAlgebra& alg, const Quat& a, const Lattice& x);
Lattice right_multiply(const QuaternionAlgebra& alg, const Lattice& x, const Quat& a);
bool is_subset(const Lattice& x, const Lattice& y);
/// [y : x] for x contained in y, both full rank.
Rational index(const Lattice& x, const Lattice& y);

/// {z : z L ⊂ L} and {z : L z ⊂ L}.
Lattice left_order(const QuaternionAlgebra& alg, const Lattice& l);
Lattice right_order(const QuaternionAlgebra& alg, const Lattice& l);

/// Integer 4x4 matrix M with basis_x = M * basis_y (x ⊂ y).
std::vector<IntVec> inclusion_matrix(const Lattice& x, const Lattice& y);

}  // namespace cmlab::lat
