#include "doctest.h"
#include "test_support.hpp"
#include "tutte/tutte.hpp"

using namespace tutte;
using test_support::Rng;

namespace {

// Known closed form: T(K4) = x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3.
BiPoly k4_polynomial() {
    return BiPoly::monomial(1, 3, 0) + BiPoly::monomial(3, 2, 0) + BiPoly::monomial(2, 1, 0) +
           BiPoly::monomial(4, 1, 1) + BiPoly::monomial(2, 0, 1) + BiPoly::monomial(3, 0, 2) +
           BiPoly::monomial(1, 0, 3);
}

}  // namespace

TEST_SUITE_BEGIN("tutte");

TEST_CASE("all engines reproduce cycle polynomials") {
    for (std::size_t k = 2; k <= 6; ++k) {
        const MultiGraph g = test_support::cycle_graph(k);
        const BiPoly expected = cycle_poly(k);
        CHECK(tutte_spanning_sum(g) == expected);
        CHECK(tutte_deletion_contraction(g) == expected);
        CHECK(tutte_cactus(g) == expected);
    }
}

TEST_CASE("loops contribute y and bridges contribute x") {
    MultiGraph g(3);  // path of two bridges plus three loops
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 0);
    g.add_edge(1, 1);
    g.add_edge(1, 1);
    const BiPoly expected = BiPoly::monomial(1, 2, 3);  // x^2 y^3
    CHECK(tutte_spanning_sum(g) == expected);
    CHECK(tutte_deletion_contraction(g) == expected);
    CHECK(tutte_cactus(g) == expected);
    CHECK(tutte_polynomial(MultiGraph(1)) == BiPoly::one());
    CHECK(tutte_polynomial(MultiGraph(0)) == BiPoly::one());
}

TEST_CASE("complete graph on four vertices matches the known polynomial") {
    const MultiGraph k4 = test_support::complete_graph(4);
    const BiPoly expected = k4_polynomial();
    const BiPoly sum = tutte_spanning_sum(k4);
    const BiPoly dc = tutte_deletion_contraction(k4);
    CHECK(sum == expected);
    CHECK(dc == expected);
    CHECK(sum.eval_int(1, 1) == 16);   // spanning trees
    CHECK(sum.eval_int(2, 1) == 38);   // forests
    CHECK(sum.eval_int(1, 2) == 38);   // connected spanning subgraphs
    CHECK(sum.eval_int(2, 0) == 24);   // acyclic orientations
    CHECK(sum.eval_int(2, 2) == 64);   // 2^|E|
    CHECK_THROWS_AS(tutte_cactus(k4), MethodError);
}

TEST_CASE("resource guards reject oversized inputs") {
    MultiGraph wide(2);
    for (int i = 0; i < 27; ++i) wide.add_edge(0, 1);
    CHECK_THROWS_AS(tutte_spanning_sum(wide), GuardError);

    MultiGraph dense(2);
    for (int i = 0; i < 42; ++i) dense.add_edge(0, 1);  // nullity 41
    CHECK_THROWS_AS(tutte_deletion_contraction(dense), GuardError);

    TutteOptions tiny;
    tiny.dc_node_budget = 3;
    CHECK_THROWS_AS(tutte_deletion_contraction(test_support::complete_graph(4), tiny), GuardError);

    TutteOptions raised;
    raised.spanning_sum_max_edges = 27;
    CHECK(tutte_spanning_sum(wide, raised) ==
          tutte_deletion_contraction(wide));
}

TEST_CASE("method selection dispatches by graph shape") {
    const MultiGraph cactus = test_support::cycle_graph(4);
    CHECK(tutte_polynomial(cactus, TutteMethod::Auto) == tutte_cactus(cactus));
    const MultiGraph k4 = test_support::complete_graph(4);
    CHECK(tutte_polynomial(k4, TutteMethod::Auto) == tutte_deletion_contraction(k4));
    CHECK(tutte_polynomial(k4, TutteMethod::SpanningSum) == tutte_spanning_sum(k4));
    CHECK(method_from_name("dc") == TutteMethod::DeletionContraction);
    CHECK(method_from_name("cactus-product") == TutteMethod::CactusProduct);
    CHECK_FALSE(method_from_name("nonsense").has_value());
    CHECK(method_name(TutteMethod::SpanningSum) == "sum");
}

TEST_CASE("one-point joins multiply tutte polynomials") {
    const MultiGraph c3 = test_support::cycle_graph(3);
    const MultiGraph c4 = test_support::cycle_graph(4);
    const MultiGraph join = test_support::one_point_join(c3, 0, c4, 0);
    const BiPoly expected = cycle_poly(3) * cycle_poly(4);
    CHECK(tutte_cactus(join) == expected);
    CHECK(tutte_deletion_contraction(join) == expected);
    CHECK(tutte_spanning_sum(join) == expected);

    const MultiGraph k4 = test_support::complete_graph(4);
    const MultiGraph mixed = test_support::one_point_join(k4, 2, c3, 1);
    CHECK(tutte_deletion_contraction(mixed) == k4_polynomial() * cycle_poly(3));
}

TEST_CASE("engines agree on random cacti") {
    Rng rng(31);
    for (int i = 0; i < 10; ++i) {
        const MultiGraph g = test_support::random_cactus(rng, 16);
        const BiPoly cactus = tutte_cactus(g);
        CHECK(tutte_deletion_contraction(g) == cactus);
        CHECK(tutte_spanning_sum(g) == cactus);
    }
}

TEST_CASE("deletion-contraction identity holds edge by edge") {
    Rng rng(32);
    int checked = 0;
    for (int i = 0; i < 15; ++i) {
        const MultiGraph g = test_support::random_multigraph(rng, 5, 9);
        const BiPoly t = tutte_spanning_sum(g);
        for (const Edge& e : g.edges()) {
            if (e.is_loop()) continue;
            const BiPoly contracted = tutte_spanning_sum(g.contract_edge(e.id));
            const bool bridge = g.delete_edge(e.id).stats().components > g.stats().components;
            if (bridge) {
                CHECK(t == BiPoly::var_x() * contracted);
            } else {
                CHECK(t == tutte_spanning_sum(g.delete_edge(e.id)) + contracted);
            }
            ++checked;
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("disconnected graphs factor over components") {
    MultiGraph g(6);  // two disjoint triangles
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 3);
    const BiPoly expected = cycle_poly(3).pow(2);
    CHECK(tutte_spanning_sum(g) == expected);
    CHECK(tutte_deletion_contraction(g) == expected);
    CHECK(tutte_cactus(g) == expected);
}

TEST_CASE("long cycles stay within the recursion budget") {
    const MultiGraph g = test_support::cycle_graph(10000);
    CHECK(tutte_deletion_contraction(g) == cycle_poly(10000));
}

TEST_SUITE_END();
