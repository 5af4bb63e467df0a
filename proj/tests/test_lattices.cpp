#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmlab/lattices.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace cmlab;
using namespace cmlab::lattices;

namespace {

using Matrix = std::vector<std::vector<i64>>;

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix c(n, std::vector<i64>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

Mat2 mat2_mul(const Mat2& a, const Mat2& b, i64 m) {
    Mat2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i][j] = mod(a[i][0] * b[0][j] + a[i][1] * b[1][j], m);
    return c;
}

Mat2 scalar2(i64 s, i64 m) { return {{{mod(s, m), 0}, {0, mod(s, m)}}}; }

bool contains_element(const OrderPtr& o, const Quat& x) { return o->lattice().contains(x); }

std::vector<i64> sorted(std::vector<i64> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("maximal orders of prime discriminant") {
    auto h = maximal_order(2);
    CHECK(contains_element(h, Quat(Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2))));
    auto o3 = maximal_order(3);
    CHECK(contains_element(o3, Quat(Rational(1, 2), 0, Rational(1, 2), 0)));
    CHECK(contains_element(o3, Quat(0, Rational(1, 2), 0, Rational(1, 2))));
    for (i64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 37, 41, 73, 97}) {
        auto o = maximal_order(q);
        CAPTURE(q);
        CHECK(is_order(o->algebra(), o->lattice()));
        CHECK(o->reduced_discriminant() == q);
        CHECK(reduced_discriminant(o->algebra(), o->lattice()) == q);
        // no integral overorder exists
        CHECK(saturate(o->algebra(), o->lattice()) == o->lattice());
    }
}

TEST_CASE("unit groups against a box search") {
    auto h = maximal_order(2);
    CHECK(unit_group(h->algebra(), h->lattice()).size() == 24);
    CHECK(oracle::unit_count(h->algebra(), h->lattice()) == 24);
    CHECK(unit_weight(*h) == 12);
    auto o3 = maximal_order(3);
    CHECK(oracle::unit_count(o3->algebra(), o3->lattice()) == 12);
    CHECK(unit_weight(*o3) == 6);
    auto small = lat::Lattice::from_generators({Quat::scalar(1), Quat(0, 2, 0, 0), Quat(0, 0, 2, 0), Quat(0, 0, 0, 2)});
    QuaternionAlgebra alg(-1, -1);
    REQUIRE(is_order(alg, small));
    CHECK(unit_weight(alg, small) == 1);
    for (i64 q : {5, 7, 11, 13}) {
        auto o = maximal_order(q);
        CHECK(static_cast<i64>(unit_group(o->algebra(), o->lattice()).size()) == oracle::unit_count(o->algebra(), o->lattice()));
    }
}

TEST_CASE("local splitting") {
    auto alg = QuaternionAlgebra(-1, -1);
    auto h = maximal_order(alg);
    auto s = local_splitting(*h, 5, 4);
    const i64 m = s.modulus;
    CHECK(m == 625);
    CHECK(mat2_mul(s.i_image, s.i_image, m) == scalar2(-1, m));
    CHECK(mat2_mul(s.j_image, s.j_image, m) == scalar2(-1, m));
    Mat2 ij = mat2_mul(s.i_image, s.j_image, m), ji = mat2_mul(s.j_image, s.i_image, m);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) CHECK(mod(ij[a][b] + ji[a][b], m) == 0);

    auto s6 = local_splitting(*h, 5, 6);
    for (int e = 0; e < 4; ++e)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) CHECK(mod(s6.basis_images[e][a][b], 625) == s.basis_images[e][a][b]);

    for (i64 q : {3, 5, 11, 17}) {
        auto o = maximal_order(q);
        for (i64 p : {2, 3, 7}) {
            if (p == q) continue;
            auto sp = local_splitting(*o, p, 3);
            const auto& sc = o->structure();
            for (int x = 0; x < 4; ++x)
                for (int y = 0; y < 4; ++y) {
                    Mat2 lhs = mat2_mul(sp.basis_images[x], sp.basis_images[y], sp.modulus);
                    CHECK(lhs == sp.image(sc.mult[x][y]));
                }
        }
    }
    CHECK_THROWS_AS(local_splitting(*maximal_order(11), 11, 2), ValidationError);
}

TEST_CASE("eichler orders") {
    auto o = maximal_order(2);
    auto e = eichler_order(o, 3);
    CHECK(e->reduced_discriminant() == 6);
    CHECK(e->level() == 3);
    CHECK(lat::is_subset(e->lattice(), o->lattice()));
    // lattice index equals the level: one entry of M_2(Z_p) is constrained mod p
    CHECK(lat::index(e->lattice(), o->lattice()) == 3);

    // no order strictly between E and (1/3) E with the same discriminant
    const auto basis = e->basis();
    int larger_same_level = 0;
    for (i64 t = 1; t < 81; ++t) {
        Quat x;
        i64 r = t;
        for (int m = 0; m < 4; ++m, r /= 3) x = x + basis[m] * Rational(r % 3, 3);
        auto l = lat::sum(e->lattice(), lat::Lattice::from_generators({x}));
        if (is_order(e->algebra(), l) && reduced_discriminant(e->algebra(), l) == 6) ++larger_same_level;
    }
    CHECK(larger_same_level == 0);

    auto j = connecting_ideal(o, 3);
    CHECK(j.norm == 3);
    auto o2 = left_order(j);
    CHECK(reduced_discriminant(o->algebra(), o2) == 2);
    CHECK(lat::intersection(o->lattice(), o2) == e->lattice());
    for (i64 q : {5, 11, 13})
        for (i64 p : {2, 3, 7}) {
            auto ep = eichler_order(maximal_order(q), p);
            CHECK(ep->reduced_discriminant() == q * p);
        }
    CHECK_THROWS_AS(eichler_order(maximal_order(11), 11), ValidationError);
}

TEST_CASE("class sets") {
    auto c2 = right_ideal_classes(maximal_order(2));
    CHECK(c2.size() == 1);
    CHECK(c2.weights == std::vector<i64>{12});
    CHECK(mass(c2) == Rational(1, 12));
    auto c3 = right_ideal_classes(maximal_order(3));
    CHECK(c3.size() == 1);
    CHECK(c3.weights == std::vector<i64>{6});
    auto c11 = right_ideal_classes(maximal_order(11));
    REQUIRE(c11.size() == 2);
    CHECK(sorted(c11.weights) == std::vector<i64>{2, 3});
    CHECK(mass(c11) == Rational(5, 6));
}

TEST_CASE("mass formula") {
    for (i64 q : {2, 3, 5, 7, 11, 13, 17, 23}) {
        auto cs = right_ideal_classes(maximal_order(q));
        CAPTURE(q);
        CHECK(mass(cs) == oracle::eichler_mass(q, 1));
        CHECK(eichler_mass(q, 1) == oracle::eichler_mass(q, 1));
        for (const auto& lo : cs.left_orders) CHECK(reduced_discriminant(cs.order->algebra(), lo) == q);
    }
    for (auto [q, p] : std::vector<std::pair<i64, i64>>{{2, 3}, {2, 5}, {3, 5}, {11, 2}, {5, 7}, {7, 3}}) {
        auto cs = right_ideal_classes(eichler_order(maximal_order(q), p));
        CAPTURE(q);
        CAPTURE(p);
        CHECK(mass(cs) == oracle::eichler_mass(q, p));
        for (const auto& lo : cs.left_orders) CHECK(reduced_discriminant(cs.order->algebra(), lo) == q * p);
    }
}

TEST_CASE("class set does not depend on the neighbour prime") {
    for (i64 q : {11, 13, 23}) {
        auto o = maximal_order(q);
        auto a = right_ideal_classes(o, 2), b = right_ideal_classes(o, 3);
        CHECK(a.size() == b.size());
        CHECK(sorted(a.weights) == sorted(b.weights));
    }
    auto e = eichler_order(maximal_order(2), 3);
    auto a = right_ideal_classes(e, 5), b = right_ideal_classes(e, 7);
    CHECK(a.size() == b.size());
    CHECK(sorted(a.weights) == sorted(b.weights));
}

TEST_CASE("representatives are pairwise non-isomorphic and classify consistently") {
    auto cs = right_ideal_classes(maximal_order(23));
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j) CHECK(is_isomorphic(cs.ideals[i], cs.ideals[j]) == (i == j));
    // x I is isomorphic to I
    const auto& alg = cs.order->algebra();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        auto moved = make_right_ideal(lat::left_multiply(alg, Quat(1, 2, 1, 0), cs.ideals[i].lattice), cs.order);
        CHECK(cs.classify(moved) == i);
        auto b = isomorphism(cs.ideals[i], moved);
        REQUIRE(b);
        CHECK(lat::left_multiply(alg, *b, cs.ideals[i].lattice) == moved.lattice);
    }
}

TEST_CASE("neighbours") {
    auto o = maximal_order(11);
    auto n2 = neighbors(unit_ideal(o), 2);
    CHECK(n2.size() == 3);
    for (const auto& j : n2) {
        CHECK(j.norm == 2);
        CHECK(lat::index(j.lattice, o->lattice()) == 4);
    }
    CHECK(neighbors(unit_ideal(o), 3).size() == 4);
}

TEST_CASE("brandt matrices") {
    auto cs = right_ideal_classes(maximal_order(11));
    const auto& w = cs.weights;
    auto b1 = brandt_matrix(cs, 1);
    CHECK(b1 == Matrix{{1, 0}, {0, 1}});
    for (i64 l : {2, 3, 5, 7}) {
        auto b = brandt_matrix(cs, l);
        for (std::size_t i = 0; i < b.size(); ++i) {
            i64 s = 0;
            for (auto v : b[i]) s += v;
            CHECK(s == oracle::sublattice_count(l));
            for (std::size_t j = 0; j < b.size(); ++j) CHECK(w[j] * b[i][j] == w[i] * b[j][i]);
        }
    }
    for (i64 m : {2, 3, 5})
        for (i64 n : {2, 3, 5}) {
            auto bm = brandt_matrix(cs, m), bn = brandt_matrix(cs, n);
            CHECK(mat_mul(bm, bn) == mat_mul(bn, bm));
            if (m != n) CHECK(mat_mul(bm, bn) == brandt_matrix(cs, m * n));
        }
    CHECK_THROWS_WITH(brandt_matrix(cs, 11), doctest::Contains("bad level"));

    auto cs23 = right_ideal_classes(maximal_order(23));
    auto b2 = brandt_matrix(cs23, 2), b3 = brandt_matrix(cs23, 3);
    CHECK(mat_mul(b2, b3) == brandt_matrix(cs23, 6));
}

TEST_CASE("theta series separate the two classes of discriminant 11") {
    auto cs = right_ideal_classes(maximal_order(11));
    CHECK(theta(cs.ideals[0]) != theta(cs.ideals[1]));
    CHECK(theta(cs.ideals[0])[0] == 1);
}
