#include <catch2/catch_amalgamated.hpp>

#include <hfactor/factor_search.hpp>
#include <hfactor/graph.hpp>
#include <hfactor/shape.hpp>

#include <random>
#include <set>

using namespace hfactor;

namespace {

// Figure-style fixture: two disjoint triangles {0,1,2} and {3,4,5}.
Graph two_triangles() {
    Graph g(6);
    g.set_edge(0, 1);
    g.set_edge(1, 2);
    g.set_edge(0, 2);
    g.set_edge(3, 4);
    g.set_edge(4, 5);
    g.set_edge(3, 5);
    return g;
}

Round matching_round(std::initializer_list<std::pair<int, int>> pairs) {
    Round r;
    for (auto [u, v] : pairs) r.blocks.push_back(Block::clique({u, v}));
    r.canonicalize();
    return r;
}

// Brute-force perfect matching counter, independent of the search engine.
long long count_matchings_brute(const Graph& g) {
    int n = g.n();
    std::function<long long(std::set<int>)> rec = [&](std::set<int> left) -> long long {
        if (left.empty()) return 1;
        int v = *left.begin();
        left.erase(left.begin());
        long long total = 0;
        for (int u : left)
            if (g.has_edge(v, u)) {
                std::set<int> next = left;
                next.erase(u);
                total += rec(next);
            }
        return total;
    };
    std::set<int> all;
    for (int v = 0; v < n; ++v) all.insert(v);
    return rec(all);
}

} // namespace

TEST_CASE("complete graph edge counts") {
    CHECK(complete_graph(1).edge_count() == 0);
    CHECK(complete_graph(2).edge_count() == 1);
    CHECK(complete_graph(6).edge_count() == 15);
    CHECK_THROWS_AS(complete_graph(0), Error);
}

TEST_CASE("complement is an involution and degree-complementary") {
    Graph g = two_triangles();
    Graph c = complement(g);
    // complement of two disjoint triangles is K_{3,3}
    CHECK(c.edge_count() == 9);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) CHECK(c.has_edge(u, v));
    CHECK(complement(c) == g);

    CHECK(complement(complete_graph(6)).edge_count() == 0);
    CHECK(complement(Graph(4)) == complete_graph(4));

    std::mt19937 rng(7);
    Graph r(9);
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v)
            if (rng() % 2) r.set_edge(u, v);
    for (int v = 0; v < 9; ++v) CHECK(r.degree(v) + complement(r).degree(v) == 8);
}

TEST_CASE("remove_round deletes exactly the induced edges") {
    FactorShape m = FactorShape::clique(2);
    Graph g = complete_graph(6);
    Round red = matching_round({{0, 3}, {1, 4}, {2, 5}});
    Graph after = remove_round(g, m, red);
    CHECK(after.edge_count() == 12);
    for (int v = 0; v < 6; ++v) CHECK(after.degree(v) == 4);
    CHECK_THROWS_AS(remove_round(after, m, red), MissingEdgeError);

    // K_4 minus a C_4 on all four vertices leaves the two diagonals
    Graph k4 = complete_graph(4);
    Round c4;
    c4.blocks.push_back(Block::cycle({0, 1, 2, 3}));
    Graph rem = remove_round(k4, FactorShape::cycle(4), c4);
    CHECK(rem.edge_count() == 2);
    CHECK(rem.has_edge(0, 2));
    CHECK(rem.has_edge(1, 3));
}

TEST_CASE("min degree") {
    CHECK(min_degree(complete_graph(6)) == 5);
    CHECK(min_degree(two_triangles()) == 2);
    CHECK(min_degree(Graph(3)) == 0);
}

TEST_CASE("edge count bookkeeping for round removal") {
    // edge_count drops by (n/k) * e_H
    Graph g = complete_graph(6);
    FactorShape c3 = FactorShape::cycle(3);
    auto rounds = enumerate_factors(g, c3, 1);
    REQUIRE(!rounds.empty());
    Graph after = remove_round(g, c3, rounds[0]);
    CHECK(g.edge_count() - after.edge_count() == 2 * 3);
}

TEST_CASE("block canonicalization") {
    CHECK(Block::clique({3, 1, 2}).verts == std::vector<int>({1, 2, 3}));
    Block a = Block::cycle({2, 4, 1, 3});
    Block b = Block::cycle({1, 4, 2, 3});  // reflection of the same cycle? no: same cycle rotated
    CHECK(a.verts.front() == 1);
    CHECK(a.verts[1] <= a.verts.back());
    // rotations/reflections of one cycle agree
    Block c = Block::cycle({4, 1, 3, 2});
    CHECK(a == c);
    (void)b;
}

TEST_CASE("find_factor basics") {
    FactorShape c3 = FactorShape::clique(3);
    auto res = find_factor(complete_graph(6), c3);
    REQUIRE(res.status == SearchStatus::Found);
    std::string why;
    CHECK(is_valid_factor(complete_graph(6), c3, res.round, &why));

    // two triangles admit no perfect matching
    CHECK(find_factor(two_triangles(), FactorShape::clique(2)).status == SearchStatus::NotFound);

    // a single C_4 is its own cycle factor
    Graph c4(4);
    c4.set_edge(0, 1);
    c4.set_edge(1, 2);
    c4.set_edge(2, 3);
    c4.set_edge(0, 3);
    auto r = find_factor(c4, FactorShape::cycle(4));
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(r.round.blocks.size() == 1);
    CHECK(r.round.blocks[0].verts == std::vector<int>({0, 1, 2, 3}));

    CHECK_THROWS_AS(find_factor(complete_graph(5), FactorShape::clique(2)), DivisibilityError);
}

TEST_CASE("enumerate_factors counts") {
    CHECK(enumerate_factors(complete_graph(4), FactorShape::clique(2), 10).size() == 3);
    CHECK(enumerate_factors(complete_graph(6), FactorShape::clique(2), 100).size() == 15);
    CHECK(enumerate_factors(complete_graph(6), FactorShape::cycle(3), 100).size() == 10);
    // limit respected
    CHECK(enumerate_factors(complete_graph(6), FactorShape::clique(2), 7).size() == 7);
    // no duplicates under canonicalization
    auto rounds = enumerate_factors(complete_graph(8), FactorShape::cycle(4), 100000);
    std::set<Round> uniq(rounds.begin(), rounds.end());
    CHECK(uniq.size() == rounds.size());
}

TEST_CASE("search exactness against brute-force matching counts") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 6 + 2 * int(rng() % 3);  // 6, 8, 10
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3) g.set_edge(u, v);
        long long brute = count_matchings_brute(g);
        auto found = enumerate_factors(g, FactorShape::clique(2), 1000000);
        CHECK((long long)found.size() == brute);
        CHECK((find_factor(g, FactorShape::clique(2)).status == SearchStatus::Found) ==
              (brute > 0));
    }
}

TEST_CASE("degree shortcut consistency") {
    // clique case: min degree >= n - n/k + k - 1 forces a factor
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 2 + int(rng() % 2);
        int n = k * (2 + int(rng() % 3));
        Graph g = complete_graph(n);
        // delete random edges while respecting the degree threshold
        for (int tries = 0; tries < 3 * n; ++tries) {
            int u = int(rng() % n), v = int(rng() % n);
            if (u == v || !g.has_edge(u, v)) continue;
            if (g.degree(u) - 1 >= n - n / k + k - 1 && g.degree(v) - 1 >= n - n / k + k - 1)
                g.clear_edge(u, v);
        }
        if (min_degree(g) >= n - n / k + k - 1)
            CHECK(find_factor(g, FactorShape::clique(k)).status == SearchStatus::Found);
    }
    // cycle case: min degree >= ceil(2n/3) forces a cycle factor
    for (int trial = 0; trial < 100; ++trial) {
        int k = 3 + int(rng() % 3);
        int n = k * (2 + int(rng() % 2));
        int need = (2 * n + 2) / 3;
        Graph g = complete_graph(n);
        for (int tries = 0; tries < 3 * n; ++tries) {
            int u = int(rng() % n), v = int(rng() % n);
            if (u == v || !g.has_edge(u, v)) continue;
            if (g.degree(u) - 1 >= need && g.degree(v) - 1 >= need) g.clear_edge(u, v);
        }
        if (min_degree(g) >= need)
            CHECK(find_factor(g, FactorShape::cycle(k)).status == SearchStatus::Found);
    }
}

TEST_CASE("budget exhaustion is distinct from NotFound") {
    SearchOptions opts;
    opts.node_budget = 1;
    auto res = find_factor(complete_graph(12), FactorShape::clique(3), opts);
    CHECK(res.status == SearchStatus::BudgetExceeded);
}
