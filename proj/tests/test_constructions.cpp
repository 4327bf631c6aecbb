#include <catch2/catch_amalgamated.hpp>

#include "hfactor/analysis.hpp"
#include "hfactor/constructions.hpp"

#include <set>

using namespace hfactor;

namespace {

bool not_extendable(const Tournament& t) {
    return find_factor(feasibility_graph(t), t.shape).status == SearchStatus::NotFound;
}

long long cross_edges_used(const Tournament& t, const VertexSplit& split) {
    std::set<int> a(split.side_a.begin(), split.side_a.end());
    long long used = 0;
    for (const Round& r : t.rounds)
        for (auto [u, v] : r.edges(t.shape))
            if (a.count(u) != a.count(v)) ++used;
    return used;
}

} // namespace

TEST_CASE("round robin circle method") {
    Tournament t2 = round_robin_circle(2);
    CHECK(t2.rounds_played() == 1);
    for (int n : {6, 8, 10}) {
        Tournament t = round_robin_circle(n);
        REQUIRE(t.rounds_played() == n - 1);
        ValidityReport rep = verify_tournament(t);
        CAPTURE(n, rep.issues);
        REQUIRE(rep.valid);
        CHECK(rep.complete);
        CHECK(feasibility_graph(t).edge_count() == 0);
    }
    CHECK_THROWS_AS(round_robin_circle(7), ParityError);
}

TEST_CASE("matching adversary sticks at n/2") {
    for (int n : {6, 10, 14}) {
        BuiltTournament bt = construct_matching_adversary(n);
        const Tournament& t = bt.tournament;
        REQUIRE(t.rounds_played() == n / 2);
        REQUIRE(verify_tournament(t).valid);
        CHECK(not_extendable(t));
        // feasibility graph is two disjoint half-cliques; equivalently the
        // complement is complete bipartite
        Graph g = feasibility_graph(t);
        CHECK(detail::is_two_disjoint_halves(g));
        CHECK(cross_edges_used(t, bt.split) == (long long)(n / 2) * (n / 2));
    }
    CHECK_THROWS_AS(construct_matching_adversary(8), ParityError);  // n/2 even: extendable
    CHECK_THROWS_AS(construct_matching_adversary(7), ParityError);
}

TEST_CASE("matching adversary outcome at n=6 is the two-triangle state") {
    Graph g = feasibility_graph(construct_matching_adversary(6).tournament);
    CHECK(g.edge_count() == 6);
    for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("shifting tournament") {
    std::vector<int> v6 = {0, 1, 2, 3, 4, 5};
    auto one = shifting_tournament(v6, 3, 1);
    REQUIRE(one.size() == 1);
    REQUIRE(one[0].blocks.size() == 2);

    std::vector<int> v15;
    for (int i = 20; i < 35; ++i) v15.push_back(i);  // arbitrary labels, not 0-based
    auto rounds = shifting_tournament(v15, 3, 4);
    REQUIRE(rounds.size() == 4);
    std::set<std::pair<int, int>> seen;
    for (const Round& r : rounds) {
        REQUIRE(r.blocks.size() == 5);
        for (auto e : r.edges(FactorShape::clique(3))) CHECK(seen.insert(e).second);
    }

    // 12 vertices, 4 columns: rows collide once the shift wraps
    std::vector<int> v12;
    for (int i = 0; i < 12; ++i) v12.push_back(i);
    CHECK_THROWS_AS(shifting_tournament(v12, 3, 5), EdgeReuseError);
    CHECK_THROWS_AS(shifting_tournament(v6, 4, 1), DivisibilityError);
}

TEST_CASE("clique adversary n=24 k=3") {
    BuiltTournament bt = construct_clique_adversary(24, 3);
    const Tournament& t = bt.tournament;
    REQUIRE(t.rounds_played() == 4);
    ValidityReport rep = verify_tournament(t);
    CAPTURE(rep.issues);
    REQUIRE(rep.valid);
    CHECK(not_extendable(t));
    REQUIRE(bt.split.side_a.size() == 9);  // n/k + 1
    CHECK(cross_edges_used(t, bt.split) == 0);
    // no feasible edge left inside A, so the complement restricted to A is
    // complete: the K_9 that blocks any further factor
    Graph g = feasibility_graph(t);
    for (std::size_t i = 0; i < bt.split.side_a.size(); ++i)
        for (std::size_t j = i + 1; j < bt.split.side_a.size(); ++j)
            CHECK_FALSE(g.has_edge(bt.split.side_a[i], bt.split.side_a[j]));
}

TEST_CASE("clique adversary smallest case n=6") {
    BuiltTournament bt = construct_clique_adversary(6, 3);
    CHECK(bt.tournament.rounds_played() == 1);
    CHECK(verify_tournament(bt.tournament).valid);
    CHECK(not_extendable(bt.tournament));
}

TEST_CASE("clique adversary preconditions") {
    CHECK_THROWS_AS(construct_clique_adversary(10, 2), PreconditionError);  // k=2 redirected
    CHECK_THROWS_AS(construct_clique_adversary(12, 3), PreconditionError);  // j=2 not 1 mod k
    CHECK_THROWS_AS(construct_clique_adversary(20, 3), DivisibilityError);
}

TEST_CASE("odd cycle adversary") {
    BuiltTournament small = construct_cycle_adversary_odd(3, 0);  // n=6
    CHECK(small.tournament.rounds_played() == 1);
    CHECK(verify_tournament(small.tournament).valid);
    CHECK(not_extendable(small.tournament));

    BuiltTournament bt = construct_cycle_adversary_odd(3, 1);  // n=24
    const Tournament& t = bt.tournament;
    REQUIRE(t.n == 24);
    REQUIRE(t.rounds_played() == 4);  // floor(26/4 - 24/12)
    CHECK(t.rounds_played() ==
          *guarantee_bound(24, FactorShape::cycle(3)).conditional_guarantee);
    ValidityReport rep = verify_tournament(t);
    CAPTURE(rep.issues);
    REQUIRE(rep.valid);
    CHECK(not_extendable(t));
    CHECK(bt.split.side_a.size() == 9);  // k^{i+1}
    CHECK(cross_edges_used(t, bt.split) == 0);

    CHECK_THROWS_AS(construct_cycle_adversary_odd(4, 1), ParityError);
    CHECK_THROWS_AS(construct_cycle_adversary_odd(3, -1), PreconditionError);
}

TEST_CASE("mod4 cycle adversary") {
    BuiltTournament bt = construct_cycle_adversary_mod4(4, 3);  // n=12
    const Tournament& t = bt.tournament;
    REQUIRE(t.n == 12);
    REQUIRE(t.rounds_played() == 3);  // floor(14/4)
    ValidityReport rep = verify_tournament(t);
    CAPTURE(rep.issues);
    REQUIRE(rep.valid);
    CHECK(not_extendable(t));
    // what remains is two disjoint K_6, and 6 is not divisible by 4
    CHECK(detail::is_two_disjoint_halves(feasibility_graph(t)));

    BuiltTournament bt20 = construct_cycle_adversary_mod4(4, 5);  // n=20
    CHECK(bt20.tournament.rounds_played() == 5);
    CHECK(verify_tournament(bt20.tournament).valid);
    CHECK(not_extendable(bt20.tournament));

    CHECK_THROWS_AS(construct_cycle_adversary_mod4(6, 3), ParityError);
    CHECK_THROWS_AS(construct_cycle_adversary_mod4(4, 2), ParityError);
}

TEST_CASE("mod2 cycle adversary n=54") {
    BuiltTournament bt = construct_cycle_adversary_mod2(6, 9);
    const Tournament& t = bt.tournament;
    REQUIRE(t.n == 54);
    REQUIRE(t.rounds_played() == 15);  // floor(56/4) + 1
    ValidityReport rep = verify_tournament(t);
    CAPTURE(rep.issues);
    REQUIRE(rep.valid);

    // after the penultimate round exactly n/k cross edges survive; after the
    // last, exactly one
    std::set<int> a(bt.split.side_a.begin(), bt.split.side_a.end());
    auto cross_left = [&](int rounds) {
        Tournament prefix = t;
        prefix.rounds.resize(rounds);
        Graph g = feasibility_graph(prefix);
        long long c = 0;
        for (auto [u, v] : g.edges())
            if (a.count(u) != a.count(v)) ++c;
        return c;
    };
    CHECK(cross_left(14) == 9);
    CHECK(cross_left(15) == 1);
    CHECK(not_extendable(t));

    CHECK_THROWS_AS(construct_cycle_adversary_mod2(8, 9), ParityError);
    CHECK_THROWS_AS(construct_cycle_adversary_mod2(6, 7), PreconditionError);
}

TEST_CASE("base doubling merges two half cycles into one") {
    // one base round of the mod2 builder turns each C_{k/2} block on the
    // index set into a C_k alternating between the two sides; check the
    // k=10 pattern on a 5-cycle fragment: a1 b2 a3 b4 a5 b1 a2 b3 a4 b5
    int h = 5;
    std::vector<int> idx = {0, 1, 2, 3, 4};
    std::vector<int> seq;
    for (int j = 0; j < 10; ++j) {
        int x = idx[j % 5];
        seq.push_back(j % 2 == 0 ? x : h + x);
    }
    std::vector<int> expect = {0, 6, 2, 8, 4, 5, 1, 7, 3, 9};
    CHECK(seq == expect);
    // every edge of the doubled cycle is a cross edge
    for (int j = 0; j < 10; ++j) CHECK(((seq[j] < h) != (seq[(j + 1) % 10] < h)));
}
