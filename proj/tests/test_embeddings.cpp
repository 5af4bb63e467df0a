#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmlab/embeddings.hpp"
#include "oracles.hpp"

#include <set>

using namespace cmlab;
using namespace cmlab::embeddings;

namespace {

i64 sum(const std::vector<i64>& v) {
    i64 s = 0;
    for (auto x : v) s += x;
    return s;
}

ClassSet classes(i64 q, i64 level) {
    auto o = lattices::maximal_order(q);
    return lattices::right_ideal_classes(level == 1 ? o : lattices::eichler_order(o, level));
}

}  // namespace

TEST_CASE("generator convention") {
    CHECK(generator_trace_norm(-4) == std::pair<i64, i64>{-4, 5});
    CHECK(generator_trace_norm(-3) == std::pair<i64, i64>{-3, 3});
    CHECK_THROWS_AS(generator_trace_norm(5), ValidationError);
}

TEST_CASE("hurwitz order and D = -4") {
    auto h = lattices::maximal_order(2);
    const auto& alg = h->algebra();
    // x = i shifted to the convention w = (D + sqrt D)/2 = -2 + i
    Quat x(-2, 1, 0, 0);
    CHECK(alg.tr(x) == -4);
    CHECK(alg.nr(x) == 5);
    auto c = h->coordinates(x);
    CHECK(saturation_index(*h, c) == 1);
    auto elems = embedding_elements(*h, -4);
    CHECK(std::find(elems.begin(), elems.end(), c) != elems.end());
    // -2 + v for the six units v = +-i, +-j, +-k
    CHECK(elems.size() == 6);
    auto pts = optimal_embeddings(*h, cmfields::make_order(-4));
    CHECK(pts.size() == 1);
    // D = -16: 2i is in the order but Z[2i] is not optimal
    Quat y(-8, 2, 0, 0);
    CHECK(saturation_index(*h, h->coordinates(y)) == 2);
}

TEST_CASE("prime level: inert gives nothing, ramified gives h") {
    for (auto [q, p, dK] : std::vector<std::tuple<i64, i64, i64>>{{2, 3, -3}, {5, 3, -3}, {2, 5, -20}, {11, 5, -15}, {2, 7, -7}}) {
        auto cs = classes(q, p);
        auto cm = cmfields::make_order(dK);
        auto gc = gross_points(cs, cm);
        CAPTURE(q);
        CAPTURE(p);
        CAPTURE(dK);
        if (kronecker(dK, q) == 1) {
            CHECK(gc.total == 0);
        } else {
            CHECK(gc.total == cmfields::class_number(cm));
        }
    }
    for (auto [q, p, dK] : std::vector<std::tuple<i64, i64, i64>>{{2, 3, -4}, {2, 5, -3}, {11, 3, -4}}) {
        auto gc = gross_points(classes(q, p), cmfields::make_order(dK));
        CHECK(gc.total == 0);
        CHECK(sum(gc.unoriented) == 0);
    }
}

TEST_CASE("disc 11 and D = -11") {
    auto cs = classes(11, 1);
    auto gc = gross_points(cs, cmfields::make_order(-11));
    CHECK(gc.total == 1);
    CHECK(cmfields::class_number(-11) == 1);
    auto none = gross_points(cs, cmfields::make_order(-7));  // 11 splits in Q(sqrt -7)
    CHECK(none.total == 0);
    for (auto m : none.counts) CHECK(m == 0);
}

TEST_CASE("unoriented totals match h times the local embedding numbers") {
    struct Case {
        i64 q, p, dK, c;
    };
    for (auto cs_case : std::vector<Case>{{11, 1, -3, 1}, {11, 1, -4, 1}, {11, 1, -8, 1}, {11, 1, -11, 1}, {11, 1, -19, 1},
                                          {5, 1, -3, 2}, {7, 1, -4, 3}, {5, 3, -15, 1}, {5, 3, -3, 1}, {7, 5, -20, 1},
                                          {3, 5, -20, 1}, {13, 1, -3, 1}, {13, 3, -3, 2}}) {
        auto cs = classes(cs_case.q, cs_case.p);
        auto cm = cmfields::make_order(cs_case.dK, cs_case.c);
        const i64 D = cm.discriminant();
        i64 local = oracle::local_embedding_formula(D, cs_case.q, true);
        if (cs_case.p > 1) local *= oracle::local_embedding_formula(D, cs_case.p, false);
        auto gc = gross_points(cs, cm);
        CAPTURE(cs_case.q);
        CAPTURE(cs_case.p);
        CAPTURE(D);
        CHECK(sum(gc.unoriented) == cmfields::class_number(cm) * local);
        if (gc.orientation.supported && local > 0) CHECK(gc.total == cmfields::class_number(cm));
    }
}

TEST_CASE("exhaustive local embedding numbers agree with the closed form") {
    struct Case {
        i64 q, p, D, l;
    };
    for (auto c : std::vector<Case>{{2, 1, -3, 2}, {2, 1, -4, 2}, {2, 1, -7, 2}, {2, 1, -16, 2}, {3, 1, -3, 3}, {3, 1, -4, 3},
                                    {3, 1, -8, 3}, {3, 1, -27, 3}, {5, 1, -20, 5}, {5, 1, -3, 5}, {2, 3, -3, 3}, {2, 3, -27, 3},
                                    {2, 3, -36, 3}, {2, 3, -8, 3}, {3, 5, -20, 5}, {3, 5, -11, 5}, {3, 2, -7, 2}, {3, 2, -15, 2},
                                    {5, 7, -7, 7}, {5, 7, -3, 7}}) {
        auto m = lattices::maximal_order(c.q);
        auto o = c.p > 1 ? lattices::eichler_order(m, c.p) : m;
        CAPTURE(c.q);
        CAPTURE(c.p);
        CAPTURE(c.D);
        CHECK(oracle::local_embedding_number(o->structure(), c.D, c.l) == oracle::local_embedding_formula(c.D, c.l, c.l == c.q));
    }
}

TEST_CASE("local embedding numbers at the Eichler prime") {
    auto e = lattices::eichler_order(lattices::maximal_order(2), 3);
    CHECK(oracle::local_embedding_number(e->structure(), -3, 3) == 1);   // ramified
    CHECK(oracle::local_embedding_number(e->structure(), -4, 3) == 0);   // inert
    CHECK(oracle::local_embedding_number(e->structure(), -8, 3) == 2);   // split
    auto e5 = lattices::eichler_order(lattices::maximal_order(3), 5);
    CHECK(oracle::local_embedding_number(e5->structure(), -20, 5) == 1);
    CHECK(oracle::local_embedding_number(e5->structure(), -3, 5) == 0);
}

TEST_CASE("witnesses are least in their orbit and orbits are disjoint") {
    auto cs = classes(23, 1);
    auto cm = cmfields::make_order(-4, 3);
    const auto& alg = cs.order->algebra();
    i64 all_optimal = 0;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        lattices::Order r(alg, cs.left_orders[i], 1);
        auto pts = optimal_embeddings(r, cm);
        std::set<Vec4> seen;
        for (const auto& gp : pts) {
            for (const auto& u : lattices::unit_group(alg, r.lattice())) {
                auto conj = r.coordinates(alg.mul(alg.mul(u, gp.witness), alg.inverse(u)));
                CHECK_FALSE(conj < gp.coords);
                seen.insert(conj);
            }
        }
        std::set<Vec4> firsts;
        for (const auto& gp : pts) firsts.insert(gp.coords);
        CHECK(firsts.size() == pts.size());
        // orbit sizes add up to the number of optimal solutions
        i64 optimal = 0;
        for (const auto& x : embedding_elements(r, cm.discriminant()))
            if (saturation_index(r, x) == 1) ++optimal;
        CHECK(static_cast<i64>(seen.size()) == optimal);
        all_optimal += optimal;
    }
    CHECK(all_optimal > 0);
}

TEST_CASE("counts do not depend on the chosen representatives") {
    auto cs = classes(23, 1);
    auto cm = cmfields::make_order(-3, 2);
    auto base = gross_points(cs, cm);
    const auto& alg = cs.order->algebra();
    auto moved = cs;
    const Quat x(1, 1, 2, 0);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        moved.ideals[i] = lattices::make_right_ideal(lat::left_multiply(alg, x, cs.ideals[i].lattice), cs.order);
        moved.left_orders[i] = lattices::left_order(moved.ideals[i]);
    }
    auto again = gross_points(moved, cm);
    CHECK(base.total == cmfields::class_number(cm));
    CHECK(again.counts == base.counts);
    CHECK(again.unoriented == base.unoriented);
}

TEST_CASE("parallel enumeration matches serial") {
    auto cs = classes(37, 1);
    auto cm = cmfields::make_order(-3, 5);
    auto a = gross_points(cs, cm, 1), b = gross_points(cs, cm, 4);
    CHECK(a.counts == b.counts);
    CHECK(a.unoriented == b.unoriented);
}
