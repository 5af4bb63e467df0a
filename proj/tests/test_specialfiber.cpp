#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmlab/cmfields.hpp"
#include "cmlab/specialfiber.hpp"
#include "oracles.hpp"

using namespace cmlab;
using namespace cmlab::specialfiber;

namespace {

Rational total(const WeightedMeasure& m) {
    Rational s = 0;
    for (const auto& x : m.masses) s += x;
    return s;
}

}  // namespace

TEST_CASE("gates") {
    CHECK_NOTHROW(validate(5, 2, cmfields::field_discriminant(-5)));  // ramified
    CHECK_NOTHROW(validate(5, 2, -3));                                 // inert
    CHECK_THROWS_WITH(validate(5, 2, -11), doctest::Contains("p splits in K"));
    // 5 = (2 + i)(2 - i) splits in Q(i)
    CHECK_THROWS_WITH(validate(5, 2, -4), doctest::Contains("p splits in K"));
    CHECK_THROWS_WITH(validate(3, 3, -3), doctest::Contains("p = q"));
    CHECK_THROWS_WITH(validate(3, 7, -3), doctest::Contains("q splits in K"));
    CHECK_THROWS_AS(validate(4, 2, -3), ValidationError);
    CHECK_THROWS_AS(validate(3, 2, -12), ValidationError);
}

TEST_CASE("the (3, 2, -3) model") {
    auto m = build_model(3, 2, -3);
    CHECK(m.components.size() == 1);
    CHECK(m.num_components() == 2);
    CHECK(m.singular.size() == 1);
    CHECK(m.edges.size() == 1);
    auto deg = m.degrees();
    i64 s = 0;
    for (auto d : deg) s += d;
    CHECK(s == 2 * static_cast<i64>(m.edges.size()));
    CHECK(m.connected());
    CHECK(m.betti_number() == 0);
    auto mu = measures(m);
    CHECK(total(mu.ram) == 1);
    CHECK(total(mu.ram_inv) == 1);
    CHECK(total(mu.in) == 1);
    CHECK(total(mu.in_inv) == 1);
}

TEST_CASE("normalization") {
    auto u = normalize({4, 4, 4}, false);
    CHECK(u.masses == std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(1, 3)});
    CHECK(normalize({4, 4, 4}, true).masses == u.masses);
    CHECK(normalize({2, 3}, false).masses == std::vector<Rational>{Rational(2, 5), Rational(3, 5)});
    CHECK(normalize({2, 3}, true).masses == std::vector<Rational>{Rational(3, 5), Rational(2, 5)});
    CHECK_THROWS_AS(normalize({0, 1}, false), ValidationError);
}

TEST_CASE("graph invariants on several models") {
    for (auto [p, q, dK] : std::vector<std::tuple<i64, i64, i64>>{
             {3, 2, -3}, {3, 5, -3}, {3, 11, -3}, {5, 7, -15}, {5, 2, -20}, {5, 2, -3}, {7, 3, -7}, {3, 13, -24}, {5, 11, -15}}) {
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(dK);
        auto m = build_model(p, q, dK);
        CHECK(m.edges.size() == m.singular.size());
        for (const auto& e : m.edges) {
            CHECK(m.vertex(e.even, 0) < m.components.size());
            CHECK(m.vertex(e.odd, 1) >= m.components.size());
        }
        i64 s = 0;
        for (auto d : m.degrees()) s += d;
        CHECK(s == 2 * static_cast<i64>(m.edges.size()));
        CHECK(m.betti_number() == 1 - static_cast<i64>(m.num_components()) + static_cast<i64>(m.edges.size()));
        CHECK(m.betti_number() >= 0);
        CHECK(m.connected());
        CHECK(brandt_consistent(m));
        Rational level_mass = 0;
        for (auto w : m.singular.weights) level_mass += Rational(1, w);
        CHECK(level_mass == oracle::eichler_mass(q, p));
        auto mu = measures(m);
        for (std::size_t i = 0; i < m.singular.size(); ++i) {
            Rational expect(1, m.singular.weights[i]);
            expect /= level_mass;
            CHECK(mu.ram_inv.masses[i] == expect);
        }
        CHECK(total(mu.ram) == 1);
        CHECK(total(mu.in_inv) == 1);
    }
}

TEST_CASE("component weights repeat over parity") {
    auto m = build_model(3, 11, -3);
    auto w = m.component_weights();
    REQUIRE(w.size() == 4);
    CHECK(w[0] == w[2]);
    CHECK(w[1] == w[3]);
    auto em = m.edge_multiplicities();
    std::size_t total_mult = 0;
    for (const auto& e : em) total_mult += e[2];
    CHECK(total_mult == m.edges.size());
}
