#ifndef HFACTOR_CONSTRUCTIONS_HPP
#define HFACTOR_CONSTRUCTIONS_HPP

#include "designs.hpp"
#include "factor_search.hpp"
#include "tournament.hpp"

#include <numeric>
#include <set>

namespace hfactor {

// Which vertices play the two roles in a two-sided adversary.  Builders
// without a meaningful split leave both sides empty.
struct VertexSplit {
    std::vector<int> side_a, side_b;
    bool trivial() const { return side_a.empty() && side_b.empty(); }
};

struct BuiltTournament {
    Tournament tournament;
    VertexSplit split;
};

// Classic circle method: vertex n-1 fixed, the rest rotate.  Complete
// one-factorization of K_n in n-1 rounds.
inline Tournament round_robin_circle(int n) {
    if (n < 2 || n % 2 != 0) throw ParityError("round_robin_circle: n must be even");
    Tournament t = Tournament::empty(n, FactorShape::clique(2));
    int m = n - 1;
    for (int r = 0; r < m; ++r) {
        Round round;
        round.blocks.push_back(Block::clique({n - 1, r}));
        for (int i = 1; i <= n / 2 - 1; ++i)
            round.blocks.push_back(Block::clique({(r + i) % m, (r - i + m) % m}));
        round.canonicalize();
        t = extend(t, round);
    }
    return t;
}

// Matching adversary: n/2 rounds of cross matchings between the two halves,
// after which the feasibility graph is two disjoint K_{n/2}.  Stuck exactly
// when n/2 is odd.
inline BuiltTournament construct_matching_adversary(int n) {
    if (n < 2 || n % 2 != 0) throw ParityError("matching adversary: n must be even");
    int h = n / 2;
    if (h % 2 != 1) throw ParityError("matching adversary: n/2 must be odd");
    Tournament t = Tournament::empty(n, FactorShape::clique(2));
    for (int r = 0; r < h; ++r) {
        Round round;
        for (int i = 0; i < h; ++i) round.blocks.push_back(Block::clique({h + i, (i + r) % h}));
        round.canonicalize();
        t = extend(t, round);
    }
    VertexSplit split;
    for (int v = 0; v < h; ++v) split.side_a.push_back(v);
    for (int v = h; v < n; ++v) split.side_b.push_back(v);
    return {std::move(t), std::move(split)};
}

// Table-shifting clique rounds on an arbitrary vertex list: write the
// vertices into a k x m table column by column; in each round column j is a
// block, and between rounds row i shifts right by i positions.  Throws
// EdgeReuseError as soon as a pair repeats.
inline std::vector<Round> shifting_tournament(const std::vector<int>& verts, int k, int rounds) {
    if (k < 2) throw PreconditionError("shifting_tournament: k must be at least 2");
    if (verts.size() % k != 0)
        throw DivisibilityError("shifting_tournament: k must divide the vertex count");
    int m = int(verts.size()) / k;
    std::set<std::pair<int, int>> used;
    std::vector<Round> out;
    for (int r = 0; r < rounds; ++r) {
        Round round;
        for (int j = 0; j < m; ++j) {
            std::vector<int> vs;
            for (int i = 0; i < k; ++i) {
                int col = ((j - (long long)i * r) % m + m) % m;
                vs.push_back(verts[std::size_t(col) * k + i]);
            }
            Block b = Block::clique(std::move(vs));
            for (auto [u, v] : b.edges(FactorShape::clique(k)))
                if (!used.insert({u, v}).second)
                    throw EdgeReuseError("shifting_tournament: pair reused in round " +
                                         std::to_string(r));
            round.blocks.push_back(std::move(b));
        }
        round.canonicalize();
        out.push_back(std::move(round));
    }
    return out;
}

// Clique adversary: a resolvable design on a slightly-too-large part A glued
// to shifted rounds on B.  After floor(n/(k(k-1))) rounds the complement
// contains K_{n/k+1} on A and the greedy run is stuck.
inline BuiltTournament construct_clique_adversary(int n, int k, long long budget = -1) {
    if (k == 2)
        throw PreconditionError("clique adversary: k=2 is the matching adversary, "
                                "use construct_matching_adversary");
    if (k < 3) throw PreconditionError("clique adversary: k must be at least 3");
    long long kk1 = (long long)k * (k - 1);
    if (n % kk1 != 0) throw DivisibilityError("clique adversary: need k(k-1) | n");
    long long j = n / kk1;
    if (j % k != 1)
        throw PreconditionError("clique adversary: need n/(k(k-1)) congruent to 1 mod k");
    if ((long long)n * (k - 2) < 2LL * k)
        throw PreconditionError("clique adversary: need n >= 2k/(k-2)");
    if (n < (long long)k * k - k) throw PreconditionError("clique adversary: need n >= k^2 - k");

    int ell = n / k + 1;  // |A|, size of the surviving clique in the complement
    int rounds = int(n / kk1);
    DesignResult design = k == 3 && (ell == 9 || ell == 27)
                              ? DesignResult{SearchStatus::Found, cached_kirkman(ell), 0}
                              : resolvable_design_search(ell, k, budget);
    if (design.status != SearchStatus::Found)
        throw SubDesignUnavailableError("clique adversary: no resolvable design on " +
                                        std::to_string(ell) + " points");

    std::vector<int> bverts;
    for (int v = ell; v < n; ++v) bverts.push_back(v);
    std::vector<Round> shifted = shifting_tournament(bverts, k, rounds);

    Tournament t = Tournament::empty(n, FactorShape::clique(k));
    for (int r = 0; r < rounds; ++r) {
        Round round = design.tournament.rounds[r];
        for (const auto& b : shifted[r].blocks) round.blocks.push_back(b);
        round.canonicalize();
        t = extend(t, round);
    }
    VertexSplit split;
    for (int v = 0; v < ell; ++v) split.side_a.push_back(v);
    split.side_b = bverts;
    return {std::move(t), std::move(split)};
}

namespace detail {

// Cycle-decomposition rounds on an arbitrary vertex list via a uniform
// Oberwolfach solution on |verts| points.
inline std::vector<Round> relabeled_oberwolfach(const std::vector<int>& verts, int k,
                                                long long budget = -1) {
    DesignResult ow = oberwolfach_solution_search(int(verts.size()), k, budget);
    if (ow.status != SearchStatus::Found)
        throw SubDesignUnavailableError("no cycle decomposition on " +
                                        std::to_string(verts.size()) + " points");
    std::vector<Round> out;
    for (const auto& r : ow.tournament.rounds) {
        Round mapped;
        for (const auto& b : r.blocks) {
            std::vector<int> vs;
            for (int v : b.verts) vs.push_back(verts[v]);
            mapped.blocks.push_back(Block::cycle(std::move(vs)));
        }
        mapped.canonicalize();
        out.push_back(std::move(mapped));
    }
    return out;
}

} // namespace detail

// Odd-cycle adversary: n = 2k * (k^{i+1}-1)/(k-1); independent cycle
// decompositions on A (k^{i+1} vertices) and B, truncated to (|A|-1)/2
// combined rounds.  No cross edge is ever deleted, and afterwards neither
// side has room for another cycle factor.
inline BuiltTournament construct_cycle_adversary_odd(int k, int i, long long budget = -1) {
    if (k < 3 || k % 2 != 1) throw ParityError("odd-cycle adversary: k must be odd, k >= 3");
    if (i < 0) throw PreconditionError("odd-cycle adversary: i must be nonnegative");
    long long size_a = 1;
    for (int j = 0; j <= i; ++j) size_a *= k;
    long long n = 0, p = 1;
    for (int j = 0; j <= i; ++j, p *= k) n += 2LL * k * p;
    long long size_b = n - size_a;
    if (n > 20000) throw ScaleLimitError("odd-cycle adversary: n too large");

    std::vector<int> averts, bverts;
    for (int v = 0; v < size_a; ++v) averts.push_back(v);
    for (int v = int(size_a); v < n; ++v) bverts.push_back(v);
    std::vector<Round> ar = detail::relabeled_oberwolfach(averts, k, budget);
    std::vector<Round> br = detail::relabeled_oberwolfach(bverts, k, budget);

    int rounds = int((size_a - 1) / 2);
    Tournament t = Tournament::empty(int(n), FactorShape::cycle(k));
    for (int r = 0; r < rounds; ++r) {
        Round round = ar[r];
        for (const auto& b : br[r].blocks) round.blocks.push_back(b);
        round.canonicalize();
        t = extend(t, round);
    }
    (void)size_b;
    return {std::move(t), VertexSplit{averts, bverts}};
}

// Even-cycle adversary for 4 | k: a C_k-factorization of K_{n/2,n/2} gives
// n/4 rounds that delete only cross edges; what remains is two cliques with
// no cross edges, hence no further factor.
inline BuiltTournament construct_cycle_adversary_mod4(int k, int i, long long budget = -1) {
    if (k < 4 || k % 4 != 0) throw ParityError("mod4 adversary: k must be divisible by 4");
    if (i < 1 || i % 2 != 1) throw ParityError("mod4 adversary: i must be odd");
    long long n = (long long)i * k;
    int h = int(n / 2);
    DesignResult fac = bipartite_cycle_factorization(h, k, budget);
    if (fac.status != SearchStatus::Found)
        throw SubDesignUnavailableError("mod4 adversary: no bipartite factorization");
    VertexSplit split;
    for (int v = 0; v < h; ++v) split.side_a.push_back(v);
    for (int v = h; v < n; ++v) split.side_b.push_back(v);
    return {fac.tournament, std::move(split)};
}

namespace detail {

// Induced subgraph on `verts` plus the reverse vertex map.
inline Graph induced(const Graph& g, const std::vector<int>& verts) {
    Graph sub(int(verts.size()));
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (g.has_edge(verts[a], verts[b])) sub.set_edge(int(a), int(b));
    return sub;
}

// Greedy-with-backtracking path a_from .. a_to through `interior` fresh
// vertices drawn from pool, every consecutive pair an edge of g.  Chosen
// vertices are appended to out; used vertices are consumed from pool.
inline bool pick_path(const Graph& g, int from, int to, int interior, std::vector<int>& pool,
                      std::vector<int>& out) {
    if (interior == 0) return g.has_edge(from, to);
    for (std::size_t i = 0; i < pool.size(); ++i) {
        int v = pool[i];
        if (!g.has_edge(from, v)) continue;
        pool.erase(pool.begin() + i);
        out.push_back(v);
        if (pick_path(g, v, to, interior - 1, pool, out)) return true;
        out.pop_back();
        pool.insert(pool.begin() + i, v);
    }
    return false;
}

} // namespace detail

// Even-cycle adversary for k congruent to 2 mod 4 (n = ik, i odd): three
// phases.  Doubled cycles from a C_{k/2}-decomposition of K_{n/2} burn all
// cross edges except a perfect matching; a first extension round mixes side
// edges with most of that matching; a final surgical round uses all but one
// of the surviving matching edges and cycle factors on the leftovers.  One
// cross edge survives as a bridge, so no further factor exists.
inline BuiltTournament construct_cycle_adversary_mod2(int k, int i, long long budget = -1) {
    if (k < 6 || k % 4 != 2) throw ParityError("mod2 adversary: k must be 2 mod 4, k >= 6");
    if (i % 2 != 1 || i < 9) throw PreconditionError("mod2 adversary: i must be odd, i >= 9");
    long long n = (long long)i * k;
    if (n > 4096) throw ScaleLimitError("mod2 adversary: n too large");
    int h = int(n / 2), m = k / 2;  // h odd, m odd
    auto a_of = [&](int x) { return x; };
    auto b_of = [&](int x) { return h + x; };

    DesignResult base = oberwolfach_solution_search(h, m, budget);
    if (base.status != SearchStatus::Found)
        throw SubDesignUnavailableError("mod2 adversary: no C_{k/2} decomposition on n/2 points");

    Tournament t = Tournament::empty(int(n), FactorShape::cycle(k));
    // phase 1: each C_m block (v_0..v_{m-1}) on one side becomes the doubled
    // C_k alternating sides while stepping through the block twice; only the
    // cross edges a_{v_j} b_{v_{j+1}} of the underlying cycle get used
    for (const auto& r : base.tournament.rounds) {
        Round round;
        for (const auto& blk : r.blocks) {
            std::vector<int> seq;
            for (int j = 0; j < 2 * m; ++j) {
                int x = blk.verts[j % m];
                seq.push_back(j % 2 == 0 ? a_of(x) : b_of(x));
            }
            round.blocks.push_back(Block::cycle(std::move(seq)));
        }
        round.canonicalize();
        t = extend(t, round);
    }
    // cross matching a_x b_x now remains; side edges are all intact

    // phase 2: chunk the index line into groups of m; inside each group
    // thread a C_k through matching edges 1..m-2 and a side detour at the
    // top, leaving one matching edge per group (local index m-1)
    {
        Round round;
        for (int g = 0; g < int(n) / k; ++g) {
            int s = g * m;  // local 1-based index t -> global index s + t - 1
            std::vector<int> seq;
            for (int l = 1; l <= m - 2; ++l) {
                int x = s + l - 1;
                if (l % 2 == 1) {
                    seq.push_back(a_of(x));
                    seq.push_back(b_of(x));
                } else {
                    seq.push_back(b_of(x));
                    seq.push_back(a_of(x));
                }
            }
            seq.push_back(b_of(s + m - 2));
            seq.push_back(b_of(s + m - 1));
            seq.push_back(a_of(s + m - 1));
            seq.push_back(a_of(s + m - 2));
            round.blocks.push_back(Block::cycle(std::move(seq)));
        }
        round.canonicalize();
        t = extend(t, round);
    }
    // survivors: matching edges at local index m-1 of each group
    std::vector<int> survivors;
    for (int g = 0; g < int(n) / k; ++g) survivors.push_back(g * m + m - 2);

    // phase 3: keep the last survivor; pair the others into (i-1)/2 cycles of
    // the form a_l - [A path] - a_r - b_r - [B path] - b_l - a_l, then cycle
    // factors on the untouched remainder of each side.  Interior budget per
    // cycle is k-4; the split between the two sides is chosen so that both
    // leftovers are divisible by k.
    {
        Graph g2 = feasibility_graph(t);
        int npairs = (i - 1) / 2;
        long long total_interior = (long long)npairs * (k - 4);
        long long target = ((h - (i - 1)) % k + k) % k;  // required used_A mod k
        long long used_a = -1;
        for (long long ua = target; ua <= total_interior; ua += k) {
            long long ub = total_interior - ua;
            if (h - (i - 1) - ua < 0 || h - (i - 1) - ub < 0) continue;
            if (ua > (long long)npairs * (k - 4) || ub > (long long)npairs * (k - 4)) continue;
            used_a = ua;
            break;
        }
        if (used_a < 0) throw StructureMismatchError("mod2 adversary: no interior split");

        // interior/leftover pools: everything except the paired survivors;
        // the kept survivor's endpoints are covered by the leftover factors
        std::vector<int> pool_a, pool_b;
        {
            std::set<int> surv(survivors.begin(), survivors.begin() + 2 * npairs);
            for (int x = 0; x < h; ++x)
                if (!surv.count(x)) {
                    pool_a.push_back(x);
                    pool_b.push_back(x);
                }
        }
        Round round;
        long long rem_a = used_a;
        for (int p = 0; p < npairs; ++p) {
            int l = survivors[2 * p], r = survivors[2 * p + 1];
            int xa = int(std::min<long long>(rem_a, k - 4));
            int xb = (k - 4) - xa;
            rem_a -= xa;
            std::vector<int> pa, pb;
            std::vector<int> apool;
            for (int x : pool_a) apool.push_back(a_of(x));
            std::vector<int> bpool;
            for (int x : pool_b) bpool.push_back(b_of(x));
            if (!detail::pick_path(g2, a_of(l), a_of(r), xa, apool, pa) ||
                !detail::pick_path(g2, b_of(r), b_of(l), xb, bpool, pb))
                throw StructureMismatchError("mod2 adversary: path threading failed");
            auto consume = [](std::vector<int>& pool, const std::vector<int>& used, int off) {
                for (int v : used)
                    pool.erase(std::find(pool.begin(), pool.end(), v - off));
            };
            consume(pool_a, pa, 0);
            consume(pool_b, pb, h);
            std::vector<int> seq{a_of(l)};
            for (int v : pa) seq.push_back(v);
            seq.push_back(a_of(r));
            seq.push_back(b_of(r));
            for (int v : pb) seq.push_back(v);
            seq.push_back(b_of(l));
            round.blocks.push_back(Block::cycle(std::move(seq)));
        }
        // leftover sides are k-divisible by construction; cover each with an
        // exact cycle-factor search on the induced feasibility graph
        for (int side = 0; side < 2; ++side) {
            const std::vector<int>& pool = side == 0 ? pool_a : pool_b;
            std::vector<int> verts;
            for (int x : pool) verts.push_back(side == 0 ? a_of(x) : b_of(x));
            if (verts.empty()) continue;
            FactorResult fr = find_factor(detail::induced(g2, verts), FactorShape::cycle(k));
            if (fr.status != SearchStatus::Found)
                throw StructureMismatchError("mod2 adversary: leftover side not coverable");
            for (const auto& blk : fr.round.blocks) {
                std::vector<int> vs;
                for (int v : blk.verts) vs.push_back(verts[v]);
                round.blocks.push_back(Block::cycle(std::move(vs)));
            }
        }
        round.canonicalize();
        t = extend(t, round);
    }
    VertexSplit split;
    for (int v = 0; v < h; ++v) split.side_a.push_back(v);
    for (int v = h; v < n; ++v) split.side_b.push_back(v);
    return {std::move(t), std::move(split)};
}

} // namespace hfactor

#endif
