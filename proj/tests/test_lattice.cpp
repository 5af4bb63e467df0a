#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmlab/lattice.hpp"

using namespace cmlab;
using namespace cmlab::lat;

namespace {

const Quat one = Quat::scalar(1), qi(0, 1, 0, 0), qj(0, 0, 1, 0), qk(0, 0, 0, 1);

Lattice standard() { return Lattice::from_generators({one, qi, qj, qk}); }

Lattice hurwitz() { return Lattice::from_generators({one, qi, qj, Quat(Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2))}); }

}  // namespace

TEST_CASE("hermite normal form") {
    std::vector<IntVec> rows{{4, 6, 0, 0}, {2, 3, 0, 0}, {0, 0, 5, 0}};
    auto h = hermite_normal_form(rows);
    REQUIRE(h.size() == 2);
    CHECK(h[0] == IntVec{2, 3, 0, 0});
    CHECK(h[1] == IntVec{0, 0, 5, 0});
}

TEST_CASE("representation is canonical") {
    auto a = Lattice::from_generators({one, qi, qj, qk, one + qi});
    auto b = Lattice::from_generators({qk, qj + qk, qi, one});
    CHECK(a == b);
    CHECK(a.covolume() == 1);
    CHECK(hurwitz().covolume() == Rational(1, 2));
    CHECK(hurwitz().denominator() == 2);
}

TEST_CASE("membership and coordinates") {
    auto h = hurwitz();
    Quat w(Rational(1, 2), Rational(-1, 2), Rational(1, 2), Rational(-1, 2));
    CHECK(h.contains(w));
    CHECK_FALSE(h.contains(Quat(Rational(1, 2), Rational(1, 2), 0, 0)));
    auto c = h.coordinates(w);
    REQUIRE(c);
    auto basis = h.basis();
    Quat back;
    for (int m = 0; m < 4; ++m) back = back + basis[m] * Rational((*c)[m]);
    CHECK(back == w);
}

TEST_CASE("sums, intersections and indices") {
    auto s = standard(), h = hurwitz();
    CHECK(is_subset(s, h));
    CHECK_FALSE(is_subset(h, s));
    CHECK(sum(s, h) == h);
    CHECK(intersection(s, h) == s);
    CHECK(index(s, h) == 2);
    CHECK(index(scale(h, 3), h) == 81);
}

TEST_CASE("products and orders") {
    QuaternionAlgebra alg(-1, -1);
    auto h = hurwitz();
    CHECK(product(alg, h, h) == h);
    CHECK(left_order(alg, h) == h);
    CHECK(right_order(alg, h) == h);
    CHECK(conjugate(alg, h) == h);
    // (1 + i) H is a two-sided ideal of norm 2
    auto p = left_multiply(alg, one + qi, h);
    CHECK(index(p, h) == 4);
    CHECK(p == right_multiply(alg, h, one + qi));
    CHECK(left_order(alg, p) == h);
    auto m = inclusion_matrix(p, h);
    CHECK(m.size() == 4);
}
