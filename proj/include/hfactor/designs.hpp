#ifndef HFACTOR_DESIGNS_HPP
#define HFACTOR_DESIGNS_HPP

#include "factor_search.hpp"
#include "tournament.hpp"

#include <map>
#include <optional>

namespace hfactor {

struct DesignResult {
    SearchStatus status = SearchStatus::NotFound;
    Tournament tournament;
    long long nodes = 0;
};

namespace detail {

// A canonical first round: consecutive chunks of k vertices.  Fixing round 1
// this way is sound for searches over complete (or complete bipartite,
// chunk-aligned) graphs whose automorphisms act transitively on factors.
inline Round chunk_round(int n, FactorShape shape) {
    Round r;
    for (int j = 0; j < n; j += shape.k) {
        std::vector<int> vs(shape.k);
        for (int i = 0; i < shape.k; ++i) vs[i] = j + i;
        r.blocks.push_back(Block::canonical(shape, vs));
    }
    return r;
}

// Depth-first search for `rounds` pairwise edge-disjoint factors of g.
// Factors are tried in canonical order, so the result is deterministic.
inline bool complete_tournament_dfs(const Graph& g, FactorShape shape, int rounds,
                                    std::vector<Round>& acc, long long& tries,
                                    long long budget, bool& exceeded) {
    if (rounds == 0) return true;
    bool done = false;
    for_each_factor(g, shape, [&](const Round& r) {
        if (budget >= 0 && ++tries > budget) {
            exceeded = true;
            return false;
        }
        Graph next = remove_round(g, shape, r);
        acc.push_back(r);
        if (complete_tournament_dfs(next, shape, rounds - 1, acc, tries, budget, exceeded)) {
            done = true;
            return false;
        }
        acc.pop_back();
        return !exceeded;
    });
    return done;
}

inline DesignResult complete_tournament_search(int n, FactorShape shape, int rounds,
                                               long long budget) {
    Graph g = Graph::complete(n);
    Tournament t = Tournament::empty(n, shape);
    Round first = chunk_round(n, shape);
    g = remove_round(g, shape, first);
    t.rounds.push_back(first);
    std::vector<Round> acc;
    long long tries = 0;
    bool exceeded = false;
    DesignResult res;
    if (complete_tournament_dfs(g, shape, rounds - 1, acc, tries, budget, exceeded)) {
        for (auto& r : acc) t.rounds.push_back(std::move(r));
        res.status = SearchStatus::Found;
        res.tournament = std::move(t);
    } else {
        res.status = exceeded ? SearchStatus::BudgetExceeded : SearchStatus::NotFound;
    }
    res.nodes = tries;
    return res;
}

} // namespace detail

// Kirkman triple system on 3^m points from the affine geometry AG(m,3):
// blocks are the lines {x, x+d, x+2d}, rounds are the (3^m-1)/2 parallel
// classes of directions.  Deterministic, used as the bundled design cache.
inline Tournament kirkman_affine(int m) {
    if (m < 1 || m > 3) throw Error("kirkman_affine: m in 1..3");
    int v = 1;
    for (int i = 0; i < m; ++i) v *= 3;
    auto add = [&](int x, int d) {  // componentwise mod-3 addition
        int r = 0, p = 1;
        for (int i = 0; i < m; ++i) {
            r += ((x % 3 + d % 3) % 3) * p;
            x /= 3;
            d /= 3;
            p *= 3;
        }
        return r;
    };
    Tournament t = Tournament::empty(v, FactorShape::clique(3));
    std::vector<char> dir_seen(v, 0);
    for (int d = 1; d < v; ++d) {
        if (dir_seen[d]) continue;
        dir_seen[d] = dir_seen[add(d, d)] = 1;  // d and 2d give the same lines
        Round round;
        std::vector<char> used(v, 0);
        for (int x = 0; x < v; ++x) {
            if (used[x]) continue;
            int y = add(x, d), z = add(y, d);
            used[x] = used[y] = used[z] = 1;
            round.blocks.push_back(Block::clique({x, y, z}));
        }
        round.canonicalize();
        t.rounds.push_back(std::move(round));
    }
    return t;
}

// Exhaustive search for a resolvable (v,k,1) design, i.e. a complete clique
// tournament with (v-1)/(k-1) rounds.  Round 1 is fixed to the canonical
// chunk partition (sound up to relabeling).
inline DesignResult resolvable_design_search(int v, int k, long long budget = -1) {
    if (k < 2 || v % k != 0 || (v - 1) % (k - 1) != 0)
        throw DivisibilityError("resolvable_design_search: need k | v and k-1 | v-1");
    int rounds = (v - 1) / (k - 1);
    return detail::complete_tournament_search(v, FactorShape::clique(k), rounds, budget);
}

namespace detail {

// 1-rotational Oberwolfach search: vertices Z_{v-1} plus a fixed point, the
// starter round developed by +2 mod (v-1).  Each edge orbit under the even
// translations has exactly (v-1)/2 elements, so a starter that uses every
// orbit once develops into a complete tournament.
class RotationalStarter {
public:
    RotationalStarter(int v, int k) : v_(v), k_(k), m_(v - 1) {}

    std::optional<Tournament> search() {
        FactorShape shape = FactorShape::cycle(k_);
        Graph g = Graph::complete(v_);
        std::optional<Tournament> found;
        for_each_factor(g, shape, [&](const Round& starter) {
            if (!distinct_orbits(starter, shape)) return true;
            Tournament t = develop(starter, shape);
            found = std::move(t);
            return false;
        });
        return found;
    }

private:
    int v_, k_, m_;

    int orbit_key(int x, int y) const {
        if (x == m_ || y == m_) {  // fixed-point edge
            int a = x == m_ ? y : x;
            return a % 2;  // keys 0,1
        }
        int d = (y - x) % m_;
        if (d < 0) d += m_;
        int a = x;
        if (d > m_ / 2) {
            d = m_ - d;
            a = y;
        }
        if (d == m_ / 2) return 2 + (d - 1) * 2;  // single orbit
        return 2 + (d - 1) * 2 + (a % 2);
    }

    bool distinct_orbits(const Round& r, const FactorShape& shape) const {
        std::vector<char> used(2 * m_ + 2, 0);
        for (const auto& b : r.blocks)
            for (auto [x, y] : b.edges(shape)) {
                int key = orbit_key(x, y);
                if (used[key]) return false;
                used[key] = 1;
            }
        return true;
    }

    Tournament develop(const Round& starter, const FactorShape& shape) const {
        Tournament t = Tournament::empty(v_, shape);
        for (int step = 0; step < m_ / 2; ++step) {
            Round r;
            for (const auto& b : starter.blocks) {
                std::vector<int> vs;
                for (int x : b.verts) vs.push_back(x == m_ ? m_ : (x + 2 * step) % m_);
                r.blocks.push_back(Block::canonical(shape, vs));
            }
            r.canonicalize();
            t.rounds.push_back(std::move(r));
        }
        return t;
    }
};

} // namespace detail

inline const Tournament& cached_kirkman(int v);

// Constructive replacement for the odd-k Oberwolfach existence result: a
// complete cycle tournament with (v-1)/2 rounds, found by search.  Tries a
// 1-rotational starter first, then falls back to plain depth-first search.
inline DesignResult oberwolfach_solution_search(int v, int k, long long budget = -1) {
    if (k < 3) throw Error("oberwolfach_solution_search: k >= 3");
    if (v % 2 == 0 || k % 2 == 0)
        throw ParityError("oberwolfach_solution_search: v and k must be odd");
    if (v % k != 0) throw DivisibilityError("oberwolfach_solution_search: k must divide v");
    if (k == 3) {
        // C_3 = K_3: a Kirkman triple system solves it
        const Tournament& t = cached_kirkman(v);
        Tournament c = Tournament::empty(v, FactorShape::cycle(3));
        for (const auto& r : t.rounds) {
            Round rr;
            for (const auto& b : r.blocks) rr.blocks.push_back(Block::cycle(b.verts));
            rr.canonicalize();
            c.rounds.push_back(std::move(rr));
        }
        return DesignResult{SearchStatus::Found, std::move(c), 0};
    }
    if (v > 3) {
        detail::RotationalStarter rot(v, k);
        if (auto t = rot.search()) return DesignResult{SearchStatus::Found, std::move(*t), 0};
    }
    return detail::complete_tournament_search(v, FactorShape::cycle(k), (v - 1) / 2, budget);
}

// C_k-factorization of the complete bipartite graph K_{h,h} (A = 0..h-1,
// B = h..2h-1) into h/2 factors.  Existence per the equipartite Oberwolfach
// results; found by search with round 1 fixed.
inline DesignResult bipartite_cycle_factorization(int h, int k, long long budget = -1) {
    if (k % 2 != 0) throw ParityError("bipartite factorization needs even cycle length");
    if (h % 2 != 0 || (2 * h) % k != 0)
        throw DivisibilityError("bipartite_cycle_factorization: need even h and k | 2h");
    int n = 2 * h;
    Graph g(n);
    for (int a = 0; a < h; ++a)
        for (int b = h; b < n; ++b) g.set_edge(a, b);
    FactorShape shape = FactorShape::cycle(k);
    // canonical first round: cycle j alternates A chunk j and B chunk j
    Round first;
    for (int j = 0; j < h; j += k / 2) {
        std::vector<int> vs;
        for (int i = 0; i < k / 2; ++i) {
            vs.push_back(j + i);
            vs.push_back(h + j + ((i + 1) % (k / 2)));
        }
        first.blocks.push_back(Block::cycle(vs));
    }
    first.canonicalize();
    Tournament t = Tournament::empty(n, shape);
    std::string why;
    if (!is_valid_factor(g, shape, first, &why)) throw Error("bipartite seed invalid: " + why);
    g = remove_round(g, shape, first);
    t.rounds.push_back(first);
    std::vector<Round> acc;
    long long tries = 0;
    bool exceeded = false;
    DesignResult res;
    if (detail::complete_tournament_dfs(g, shape, h / 2 - 1, acc, tries, budget, exceeded)) {
        for (auto& r : acc) t.rounds.push_back(std::move(r));
        res.status = SearchStatus::Found;
        res.tournament = std::move(t);
    } else {
        res.status = exceeded ? SearchStatus::BudgetExceeded : SearchStatus::NotFound;
    }
    res.nodes = tries;
    return res;
}

// Bundled cache of verified designs, consulted by the adversary builders so
// construction stays deterministic and fast; falls back to search.
inline const Tournament& cached_kirkman(int v) {
    static std::map<int, Tournament> cache;
    auto it = cache.find(v);
    if (it != cache.end()) return it->second;
    Tournament t;
    if (v == 9)
        t = kirkman_affine(2);
    else if (v == 27)
        t = kirkman_affine(3);
    else {
        DesignResult d = resolvable_design_search(v, 3);
        if (d.status != SearchStatus::Found)
            throw SubDesignUnavailableError("no Kirkman system found for v=" + std::to_string(v));
        t = std::move(d.tournament);
    }
    return cache.emplace(v, std::move(t)).first->second;
}

} // namespace hfactor

#endif
