#pragma once

// Orders, right ideals and class sets in definite rational quaternion
// algebras; Eichler orders of prime level; Brandt matrices.

#include "cmlab/lattice.hpp"
#include "cmlab/shortvec.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace cmlab::lattices {

using lat::Lattice;
using qalg::Quat;
using qalg::QuaternionAlgebra;

using Vec4 = std::array<i64, 4>;
using Mat4 = std::array<Vec4, 4>;

/// Integer data of an order in its own basis e_0..e_3.
struct StructureConstants {
    std::array<Mat4, 4> mult{};  // e_a e_b = sum_c mult[a][b][c] e_c
    Vec4 one{};                  // coordinates of 1
    Mat4 conj{};                 // row a = coordinates of conj(e_a)
    Vec4 trace{};                // tr(e_a)
    shortvec::Gram norm_gram;    // x^T G x = 2 nr(x)
};

class Order {
public:
    /// Validates: full rank, contains 1, closed under multiplication,
    /// integral. Throws std::domain_error otherwise.
    Order(QuaternionAlgebra alg, Lattice lattice, i64 level, std::shared_ptr<const Order> parent = nullptr);

    const QuaternionAlgebra& algebra() const { return alg_; }
    const Lattice& lattice() const { return lat_; }
    std::vector<Quat> basis() const { return lat_.basis(); }
    /// disc(B) * level.
    const Integer& reduced_discriminant() const { return rdisc_; }
    i64 level() const { return level_; }
    const StructureConstants& structure() const { return sc_; }
    /// The maximal order this Eichler order was cut out of (null if maximal).
    const std::shared_ptr<const Order>& parent() const { return parent_; }

    /// Integer coordinates of x in basis(); throws if x is not in the order.
    Vec4 coordinates(const Quat& x) const;
    Quat element(const Vec4& c) const;

private:
    QuaternionAlgebra alg_;
    Lattice lat_;
    i64 level_;
    Integer rdisc_;
    StructureConstants sc_;
    std::shared_ptr<const Order> parent_;
};

using OrderPtr = std::shared_ptr<const Order>;

/// Reduced discriminant of an arbitrary order lattice, from its covolume.
Integer reduced_discriminant(const QuaternionAlgebra& alg, const Lattice& order);

/// True when the lattice contains 1, is closed under multiplication and
/// all its elements have integral reduced trace and norm.
bool is_order(const QuaternionAlgebra& alg, const Lattice& l);

struct RightIdeal {
    Lattice lattice;
    OrderPtr order;  // right order
    Rational norm;

    /// Gram matrix of Q(x) = 2 nr(x) / norm in the lattice basis.
    shortvec::BigGram gram() const;
};

RightIdeal make_right_ideal(const Lattice& l, OrderPtr order);
RightIdeal unit_ideal(OrderPtr order);
Lattice left_order(const RightIdeal& i);

struct ClassSet {
    OrderPtr order;
    i64 neighbour_prime = 0;
    std::vector<RightIdeal> ideals;
    std::vector<Lattice> left_orders;
    std::vector<i64> weights;

    std::size_t size() const { return ideals.size(); }
    /// Index of the class containing a right ideal of the same order.
    std::size_t classify(const RightIdeal& i) const;

    std::vector<std::vector<i64>> thetas;  // filter data, one per class
};

OrderPtr maximal_order(const QuaternionAlgebra& alg);
/// maximal_order(definite_algebra(q)).
OrderPtr maximal_order(i64 q);

/// Saturation from any order towards a maximal one at the primes where
/// the discriminant exceeds disc(B). Exposed for testing.
Lattice saturate(const QuaternionAlgebra& alg, const Lattice& order);

using Mat2 = std::array<std::array<i64, 2>, 2>;

struct Splitting {
    i64 p = 0;
    int k = 0;
    i64 modulus = 0;
    std::array<Mat2, 4> basis_images;  // images of the order basis
    Mat2 i_image, j_image;

    /// Image of an element given in order coordinates.
    Mat2 image(const Vec4& coords) const;
};

Splitting local_splitting(const Order& order, i64 p, int k);

OrderPtr eichler_order(OrderPtr maximal, i64 p);

/// Right ideal of the maximal order of norm p whose left order is the
/// second maximal order containing eichler_order(maximal, p).
RightIdeal connecting_ideal(OrderPtr maximal, i64 p);

/// Sublattices J of I of index l^2 which are right ideals (l prime to
/// the discriminant), deduplicated, in HNF order.
std::vector<RightIdeal> neighbors(const RightIdeal& i, i64 l);

/// Some b with b I = J, if one exists (same right order).
std::optional<Quat> isomorphism(const RightIdeal& i, const RightIdeal& j);
bool is_isomorphic(const RightIdeal& i, const RightIdeal& j);

std::vector<i64> theta(const RightIdeal& i, int max_half = 10);

/// Units of the order lattice (elements of reduced norm 1), sorted.
std::vector<Quat> unit_group(const QuaternionAlgebra& alg, const Lattice& order);
i64 unit_weight(const QuaternionAlgebra& alg, const Lattice& order);
i64 unit_weight(const Order& order);

/// l = 0 picks the smallest prime not dividing the reduced discriminant.
ClassSet right_ideal_classes(OrderPtr order, i64 l = 0);

/// B(n)_{ij} = #{y in I_i conj(I_j) : nr(y) = n nr(I_i) nr(I_j)} / (2 w_j).
std::vector<std::vector<i64>> brandt_matrix(const ClassSet& classes, i64 n);

Rational mass(const ClassSet& classes);
/// (q - 1)(p + 1)/12, with p = 1 for level 1.
Rational eichler_mass(i64 q, i64 level);

}  // namespace cmlab::lattices
