#include <catch2/catch_amalgamated.hpp>

#include "hfactor/analysis.hpp"
#include "hfactor/designs.hpp"

using namespace hfactor;

namespace {

// resolvable-BIBD properties: every pair in exactly one block, and blocks
// grouped into parallel classes (the Round structure enforces the grouping,
// verify_tournament enforces the rest)
void check_resolvable(const Tournament& t, int v, int k) {
    REQUIRE(t.n == v);
    REQUIRE(t.shape == FactorShape::clique(k));
    REQUIRE(t.rounds_played() == (v - 1) / (k - 1));
    ValidityReport rep = verify_tournament(t);
    CAPTURE(rep.issues);
    REQUIRE(rep.valid);
    REQUIRE(rep.complete);
}

} // namespace

TEST_CASE("affine plane triple systems") {
    check_resolvable(kirkman_affine(2), 9, 3);
    check_resolvable(kirkman_affine(3), 27, 3);
    // degenerate single-line case
    Tournament t1 = kirkman_affine(1);
    CHECK(t1.n == 3);
    CHECK(t1.rounds_played() == 1);
}

TEST_CASE("resolvable design search") {
    DesignResult d9 = resolvable_design_search(9, 3);
    REQUIRE(d9.status == SearchStatus::Found);
    check_resolvable(d9.tournament, 9, 3);

    DesignResult d62 = resolvable_design_search(6, 2);
    REQUIRE(d62.status == SearchStatus::Found);
    check_resolvable(d62.tournament, 6, 2);  // 5 rounds: the complete matching schedule

    DesignResult d33 = resolvable_design_search(3, 3);
    REQUIRE(d33.status == SearchStatus::Found);
    CHECK(d33.tournament.rounds_played() == 1);

    CHECK_THROWS_AS(resolvable_design_search(8, 3), DivisibilityError);
    CHECK_THROWS_AS(resolvable_design_search(12, 3), DivisibilityError);  // (v-1) % (k-1) != 0
}

TEST_CASE("fifteen schoolgirls") {
    DesignResult d = resolvable_design_search(15, 3);
    REQUIRE(d.status == SearchStatus::Found);
    check_resolvable(d.tournament, 15, 3);
}

TEST_CASE("search budget is honored") {
    DesignResult d = resolvable_design_search(15, 3, 5);
    CHECK(d.status == SearchStatus::BudgetExceeded);
}

TEST_CASE("cycle decompositions of odd complete graphs") {
    for (auto [v, k] : std::vector<std::pair<int, int>>{{9, 3}, {9, 9}, {15, 5}, {15, 3}}) {
        DesignResult d = oberwolfach_solution_search(v, k);
        REQUIRE(d.status == SearchStatus::Found);
        const Tournament& t = d.tournament;
        REQUIRE(t.shape == FactorShape::cycle(k));
        REQUIRE(t.rounds_played() == (v - 1) / 2);
        ValidityReport rep = verify_tournament(t);
        CAPTURE(v, k, rep.issues);
        REQUIRE(rep.valid);
        REQUIRE(rep.complete);
    }
    CHECK_THROWS_AS(oberwolfach_solution_search(10, 5), ParityError);
    CHECK_THROWS_AS(oberwolfach_solution_search(9, 5), DivisibilityError);
}

TEST_CASE("bipartite cycle factorizations") {
    for (auto [h, k] : std::vector<std::pair<int, int>>{{6, 4}, {10, 4}, {6, 12}, {8, 8}}) {
        DesignResult d = bipartite_cycle_factorization(h, k);
        REQUIRE(d.status == SearchStatus::Found);
        const Tournament& t = d.tournament;
        REQUIRE(t.rounds_played() == h / 2);
        ValidityReport rep = verify_tournament(t);
        CAPTURE(h, k, rep.issues);
        REQUIRE(rep.valid);
        // exactly the h*h cross edges get used, nothing inside a side
        Graph g = feasibility_graph(t);
        for (int a = 0; a < h; ++a)
            for (int b = h; b < 2 * h; ++b) CHECK_FALSE(g.has_edge(a, b));
        CHECK(g.edge_count() == (long long)h * (h - 1));
    }
    CHECK_THROWS_AS(bipartite_cycle_factorization(6, 5), ParityError);
    CHECK_THROWS_AS(bipartite_cycle_factorization(5, 4), DivisibilityError);
}

TEST_CASE("design cache serves repeated requests") {
    const Tournament& a = cached_kirkman(9);
    const Tournament& b = cached_kirkman(9);
    CHECK(&a == &b);
    check_resolvable(a, 9, 3);
    CHECK_THROWS_AS(cached_kirkman(11), DivisibilityError);
}
