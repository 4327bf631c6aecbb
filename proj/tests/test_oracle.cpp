#include <catch2/catch_amalgamated.hpp>

#include "hfactor/analysis.hpp"
#include "hfactor/oracle.hpp"

using namespace hfactor;

TEST_CASE("matching depths at n=4 and n=6") {
    OracleResult r4 = oracle_depths(4, FactorShape::clique(2));
    CHECK(r4.min_depth == 3);
    CHECK(r4.max_depth == 3);

    OracleResult r6 = oracle_depths(6, FactorShape::clique(2));
    CHECK(r6.min_depth == 3);
    CHECK(r6.max_depth == 5);

    // witness is a genuinely stuck run of exactly min_depth rounds
    CHECK(r6.witness_min.rounds_played() == 3);
    CHECK(verify_tournament(r6.witness_min).valid);
    CHECK(find_factor(feasibility_graph(r6.witness_min), r6.shape).status ==
          SearchStatus::NotFound);
}

TEST_CASE("matching depths at n=8") {
    OracleResult r = oracle_depths(8, FactorShape::clique(2));
    CHECK(r.min_depth == 5);  // n/2 + 1: the corollary for 4 | n, and it is tight
    CHECK(r.max_depth == 7);  // a 1-factorization exists, so OPT = n - 1
    CHECK(verify_tournament(r.witness_min).valid);
}

TEST_CASE("clique and cycle depths at tiny sizes") {
    OracleResult k3 = oracle_depths(6, FactorShape::clique(3));
    CHECK(k3.min_depth == 1);
    CHECK(k3.max_depth == 1);

    OracleResult c3 = oracle_depths(6, FactorShape::cycle(3));
    CHECK(c3.min_depth == 1);
    CHECK(c3.max_depth == 1);

    OracleResult c4 = oracle_depths(8, FactorShape::cycle(4));
    CHECK(c4.min_depth == 3);
    CHECK(c4.max_depth == 3);

    OracleResult k4 = oracle_depths(8, FactorShape::clique(4));
    CHECK(k4.min_depth == 1);
    CHECK(k4.max_depth == 1);
}

TEST_CASE("oracle values bracket the theory") {
    for (auto [n, shape] : std::vector<std::pair<int, FactorShape>>{
             {4, FactorShape::clique(2)},
             {6, FactorShape::clique(2)},
             {8, FactorShape::clique(2)},
             {6, FactorShape::clique(3)},
             {9, FactorShape::clique(3)},
             {9, FactorShape::cycle(3)},
             {8, FactorShape::cycle(4)}}) {
        OracleResult r = oracle_depths(n, shape);
        BoundReport b = guarantee_bound(n, shape);
        CAPTURE(n, shape.name());
        CHECK(b.guarantee <= r.min_depth);
        CHECK(r.min_depth <= r.max_depth);
        CHECK(r.max_depth <= b.opt_upper);
    }
}

TEST_CASE("oracle is independent of enumeration order") {
    for (auto [n, shape] : std::vector<std::pair<int, FactorShape>>{
             {6, FactorShape::clique(2)}, {8, FactorShape::clique(2)}, {9, FactorShape::clique(3)}}) {
        OracleResult fwd = oracle_depths(n, shape, {0, false});
        OracleResult rev = oracle_depths(n, shape, {0, true});
        CHECK(fwd.min_depth == rev.min_depth);
        CHECK(fwd.max_depth == rev.max_depth);
    }
}

TEST_CASE("scale guard") {
    CHECK_THROWS_AS(oracle_depths(10, FactorShape::clique(2)), ScaleLimitError);
    CHECK_THROWS_AS(oracle_depths(12, FactorShape::cycle(4)), ScaleLimitError);
    // the limit is configurable
    OracleResult r = oracle_depths(9, FactorShape::clique(3), {9, false});
    CHECK(r.min_depth == 4);
    CHECK(r.max_depth == 4);
    CHECK_THROWS_AS(oracle_depths(10, FactorShape::clique(2), {8, false}), ScaleLimitError);
    CHECK_THROWS_AS(oracle_depths(9, FactorShape::clique(2)), DivisibilityError);
}

TEST_CASE("characterization sweeps at the critical round count") {
    auto m6 = exhaustive_characterization_check(6, FactorShape::clique(2));
    CHECK(m6.critical_rounds == 3);
    CHECK(m6.holds());
    CHECK(m6.stuck_states > 0);  // the two-triangle states exist

    auto m8 = exhaustive_characterization_check(8, FactorShape::clique(2));
    CHECK(m8.holds());
    CHECK(m8.stuck_states == 0);  // n/2 even: never stuck at n/2 rounds

    auto m4 = exhaustive_characterization_check(4, FactorShape::clique(2));
    CHECK(m4.holds());
    CHECK(m4.stuck_states == 0);

    auto t6 = exhaustive_characterization_check(6, FactorShape::clique(3));
    CHECK(t6.critical_rounds == 1);
    CHECK(t6.holds());
    CHECK(t6.stuck_states == t6.states_checked);  // one round always sticks at n = k(k-1)
}

TEST_CASE("sweep rejects cycle shapes and bad n") {
    CHECK_THROWS_AS(exhaustive_characterization_check(6, FactorShape::cycle(3)), WrongShapeError);
    CHECK_THROWS_AS(exhaustive_characterization_check(7, FactorShape::clique(2)),
                    DivisibilityError);
}
