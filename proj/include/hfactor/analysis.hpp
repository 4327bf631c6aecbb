#ifndef HFACTOR_ANALYSIS_HPP
#define HFACTOR_ANALYSIS_HPP

#include "bounds.hpp"
#include "factor_search.hpp"
#include "tournament.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>

namespace hfactor {

struct ValidityReport {
    bool valid = true;
    bool complete = false;
    std::vector<std::string> issues;

    void flag(std::string s) {
        valid = false;
        issues.push_back(std::move(s));
    }
};

// Full structural check: every round a factor of K_n, rounds pairwise
// edge-disjoint, and for complete tournaments every pair covered exactly once.
// Violations are reported, not thrown.
inline ValidityReport verify_tournament(const Tournament& t) {
    ValidityReport rep;
    if (t.n < 1 || t.n % t.shape.k != 0) {
        rep.flag("k does not divide n");
        return rep;
    }
    Graph kn = Graph::complete(t.n);
    std::vector<int> pair_use(std::size_t(t.n) * t.n, 0);
    for (std::size_t ri = 0; ri < t.rounds.size(); ++ri) {
        std::string why;
        if (!is_valid_factor(kn, t.shape, t.rounds[ri], &why)) {
            rep.flag("round " + std::to_string(ri) + ": " + why);
            continue;
        }
        for (auto [u, v] : t.rounds[ri].edges(t.shape)) {
            int& c = pair_use[std::size_t(u) * t.n + v];
            if (++c > 1) rep.flag("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                  " reused in round " + std::to_string(ri));
        }
    }
    if (rep.valid) {
        long long used = 0;
        for (int u = 0; u < t.n; ++u)
            for (int v = u + 1; v < t.n; ++v) used += pair_use[std::size_t(u) * t.n + v];
        rep.complete = used == (long long)t.n * (t.n - 1) / 2;
        if (rep.complete) {
            // resolvable-design property 1: every pair in exactly one block
            for (int u = 0; u < t.n && rep.valid; ++u)
                for (int v = u + 1; v < t.n; ++v)
                    if (pair_use[std::size_t(u) * t.n + v] != 1) {
                        rep.flag("pair coverage violated");
                        break;
                    }
        }
    }
    return rep;
}

// Witness round or exact certificate that none exists.
inline std::optional<Round> check_extendable(const Tournament& t, SearchOptions opts = {}) {
    FactorResult res = find_factor(feasibility_graph(t), t.shape, opts);
    if (res.status == SearchStatus::BudgetExceeded)
        throw Error("check_extendable: budget exhausted before certificate");
    if (res.status == SearchStatus::Found) return res.round;
    return std::nullopt;
}

namespace detail {

// Is g the disjoint union of two complete graphs of size n/2?  Equivalent to
// the complement being K_{n/2,n/2}; specialized 2-coloring test, no general
// isomorphism machinery.
inline bool is_two_disjoint_halves(const Graph& g) {
    int n = g.n();
    if (n % 2 != 0) return false;
    std::vector<int> comp(n, -1);
    std::vector<int> sizes;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = int(sizes.size());
        std::vector<int> stack{s}, members;
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int u = 0; u < n; ++u)
                if (comp[u] < 0 && g.has_edge(v, u)) {
                    comp[u] = id;
                    stack.push_back(u);
                }
        }
        if (int(members.size()) != n / 2) return false;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (!g.has_edge(members[i], members[j])) return false;
        sizes.push_back(int(members.size()));
    }
    return sizes.size() == 2;
}

// Exact search for a clique of size `target` in g.
inline bool has_clique_of_size(const Graph& g, int target) {
    int n = g.n();
    std::vector<int> cand;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= target - 1) cand.push_back(v);
    std::vector<int> cur;
    std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
        if (int(cur.size()) == target) return true;
        for (std::size_t i = from; i < cand.size(); ++i) {
            if (int(cur.size()) + int(cand.size() - i) < target) return false;
            int v = cand[i];
            bool ok = true;
            for (int u : cur)
                if (!g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(v);
            if (rec(i + 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    return rec(0);
}

} // namespace detail

struct MatchingStuckVerdict {
    bool is_stuck = false;
    bool complement_is_knn = false;  // complement of feasibility graph = K_{n/2,n/2}
    bool n_half_odd = false;
    bool biconditional_holds() const { return is_stuck == (complement_is_knn && n_half_odd); }
};

// Stuck-state characterization for matchings after exactly n/2 rounds:
// not extendable iff the complement is K_{n/2,n/2} with n/2 odd.
inline MatchingStuckVerdict characterize_matching_stuck(const Tournament& t) {
    if (!(t.shape == FactorShape::clique(2)))
        throw WrongShapeError("characterize_matching_stuck: shape must be Clique(2)");
    if (t.rounds_played() != t.n / 2)
        throw WrongRoundCountError("characterize_matching_stuck: need exactly n/2 rounds");
    Graph g = feasibility_graph(t);
    MatchingStuckVerdict v;
    v.is_stuck = find_factor(g, t.shape).status == SearchStatus::NotFound;
    v.complement_is_knn = detail::is_two_disjoint_halves(g);
    v.n_half_odd = (t.n / 2) % 2 == 1;
    return v;
}

struct CliqueStuckVerdict {
    bool is_stuck = false;
    bool has_big_clique = false;  // K_{n/k+1} subgraph of the complement
    bool conditional = true;      // characterization is conjecture-dependent
    bool counterexample_candidate() const { return is_stuck && !has_big_clique; }
    bool biconditional_holds() const { return is_stuck == has_big_clique; }
};

// Conjecture-conditional characterization for cliques after exactly
// floor(n/(k(k-1))) rounds: a stuck state without K_{n/k+1} in the complement
// would be a counterexample to the equitable coloring conjecture.
inline CliqueStuckVerdict check_clique_stuck_characterization(const Tournament& t) {
    if (t.shape.kind != ShapeKind::Clique || t.shape.k < 3)
        throw WrongShapeError("check_clique_stuck_characterization: need Clique(k), k >= 3");
    long long k = t.shape.k;
    if (t.rounds_played() != t.n / (k * (k - 1)))
        throw WrongRoundCountError("need exactly floor(n/(k(k-1))) rounds");
    Graph g = feasibility_graph(t);
    CliqueStuckVerdict v;
    v.is_stuck = find_factor(g, t.shape).status == SearchStatus::NotFound;
    v.has_big_clique = detail::has_clique_of_size(g.complement(), t.n / t.shape.k + 1);
    return v;
}

// Merge equitable per-component colorings into one equitable m-coloring via
// the wrap-around assignment of large color classes.  Components are given as
// (graph, coloring) pairs; the result colors the concatenated vertex list.
inline std::vector<int> merge_component_colorings(
    const std::vector<std::pair<Graph, std::vector<int>>>& components, int m) {
    if (m < 1) throw Error("merge_component_colorings: m must be positive");
    long long total = 0;
    for (const auto& [g, col] : components) total += g.n();
    if (total % m != 0) throw DivisibilityError("total vertex count not divisible by m");
    long long per_class = total / m;

    // validate inputs and bucket vertices per (component, color)
    struct Comp {
        std::vector<std::vector<int>> classes;  // local vertex ids per color
        int large = 0;                          // number of large classes
        int floor_size = 0;
    };
    std::vector<Comp> comps;
    for (const auto& [g, col] : components) {
        if (int(col.size()) != g.n()) throw NotEquitableError("coloring size mismatch");
        Comp c;
        c.classes.assign(m, {});
        for (int v = 0; v < g.n(); ++v) {
            if (col[v] < 0 || col[v] >= m) throw NotEquitableError("color out of range");
            c.classes[col[v]].push_back(v);
        }
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v)
                if (g.has_edge(u, v) && col[u] == col[v])
                    throw NotEquitableError("coloring not proper");
        c.floor_size = g.n() / m;
        for (const auto& cls : c.classes) {
            if (int(cls.size()) != c.floor_size && int(cls.size()) != c.floor_size + 1)
                throw NotEquitableError("input coloring not equitable");
            if (int(cls.size()) == c.floor_size + 1) ++c.large;
        }
        if (c.large != g.n() % m) throw NotEquitableError("large class count inconsistent");
        // large classes first, so they land on consecutive new colors
        std::stable_sort(c.classes.begin(), c.classes.end(),
                         [](const auto& a, const auto& b) { return a.size() > b.size(); });
        comps.push_back(std::move(c));
    }

    std::vector<int> out;
    out.reserve(std::size_t(total));
    std::vector<long long> class_size(m, 0);
    std::vector<int> result(std::size_t(total), -1);
    long long offset = 0;
    int cursor = 0;
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const Comp& c = comps[ci];
        // large classes to colors cursor..cursor+large-1 (mod m), small
        // classes fill the remaining colors in order
        std::vector<int> color_of_class(m, -1);
        std::vector<char> taken(m, 0);
        for (int i = 0; i < c.large; ++i) {
            int col = (cursor + i) % m;
            color_of_class[i] = col;
            taken[col] = 1;
        }
        int next_free = 0;
        for (int i = c.large; i < m; ++i) {
            while (taken[next_free]) ++next_free;
            color_of_class[i] = next_free;
            taken[next_free] = 1;
        }
        for (int i = 0; i < m; ++i) {
            for (int v : c.classes[i]) result[offset + v] = color_of_class[i];
            class_size[color_of_class[i]] += (long long)c.classes[i].size();
        }
        cursor = (cursor + c.large) % m;
        offset += components[ci].first.n();
    }
    for (int col = 0; col < m; ++col)
        if (class_size[col] != per_class)
            throw Error("merge_component_colorings: internal imbalance");
    return result;
}

// After n/2 - 1 matching rounds the minimum degree is at least n/2, so a
// Hamiltonian cycle exists; its alternating edges give two extra rounds.
inline std::pair<Round, Round> extend_via_hamiltonian(const Tournament& t) {
    if (!(t.shape == FactorShape::clique(2)))
        throw WrongShapeError("extend_via_hamiltonian: shape must be Clique(2)");
    if (t.rounds_played() != t.n / 2 - 1)
        throw WrongRoundCountError("extend_via_hamiltonian: need exactly n/2 - 1 rounds");
    Graph g = feasibility_graph(t);
    FactorResult ham = find_factor(g, FactorShape::cycle(t.n));
    if (ham.status != SearchStatus::Found)
        throw Error("no Hamiltonian cycle: precondition violated");
    const auto& c = ham.round.blocks[0].verts;
    Round even, odd;
    for (int i = 0; i < t.n; i += 2) {
        even.blocks.push_back(Block::clique({c[i], c[i + 1]}));
        odd.blocks.push_back(Block::clique({c[i + 1], c[(i + 2) % t.n]}));
    }
    even.canonicalize();
    odd.canonicalize();
    return {even, odd};
}

// Replace the last round of a stuck clique tournament by a vertex-exchanged
// factor and extend once more, yielding guarantee+1 rounds.  Requires every
// obstruction component of the complement to be K_{n/k+1}; anything else is
// itself a counterexample candidate and is reported loudly.
inline Tournament repair_plus_one(const Tournament& t) {
    if (t.shape.kind != ShapeKind::Clique || t.shape.k < 3)
        throw WrongShapeError("repair_plus_one: need Clique(k), k >= 3");
    long long k = t.shape.k;
    if (t.n <= k * (k - 1)) throw PreconditionError("repair_plus_one: need n > k(k-1)");
    if (t.rounds_played() != t.n / (k * (k - 1)))
        throw WrongRoundCountError("repair_plus_one: need exactly floor(n/(k(k-1))) rounds");
    Graph g = feasibility_graph(t);
    if (find_factor(g, t.shape).status != SearchStatus::NotFound)
        throw PreconditionError("repair_plus_one: tournament is not stuck");

    // obstruction components: connected components of the complement equal to
    // K_{n/k+1}
    Graph gbar = g.complement();
    int n = t.n, ell = t.n / t.shape.k + 1;
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> members;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = int(members.size());
        std::vector<int> stack{s}, mem;
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            mem.push_back(v);
            for (int u = 0; u < n; ++u)
                if (comp[u] < 0 && gbar.has_edge(v, u)) {
                    comp[u] = id;
                    stack.push_back(u);
                }
        }
        std::sort(mem.begin(), mem.end());
        members.push_back(std::move(mem));
    }
    std::vector<int> big;  // component ids equal to K_ell
    for (std::size_t id = 0; id < members.size(); ++id) {
        const auto& mem = members[id];
        if (int(mem.size()) != ell) continue;
        bool complete = true;
        for (std::size_t i = 0; i < mem.size() && complete; ++i)
            for (std::size_t j = i + 1; j < mem.size(); ++j)
                if (!gbar.has_edge(mem[i], mem[j])) {
                    complete = false;
                    break;
                }
        if (complete) big.push_back(int(id));
    }
    if (big.empty())
        throw StructureMismatchError(
            "stuck tournament with no K_{n/k+1} component in the complement: "
            "counterexample candidate for the equitable coloring conjecture");

    Tournament shortened = t;
    Round last = shortened.rounds.back();
    shortened.rounds.pop_back();

    // pick one vertex per obstruction component, plus an outside vertex when
    // there is a single component; exchange along a cycle
    std::vector<int> chosen;
    for (int id : big) chosen.push_back(members[id][0]);
    if (chosen.size() == 1) {
        int outside = -1;
        for (int v = 0; v < n && outside < 0; ++v)
            if (comp[v] != big[0]) outside = v;
        if (outside < 0) throw StructureMismatchError("no vertex outside the component");
        chosen.push_back(outside);
    }
    std::map<int, int> replace;  // v_i takes the block of v_{i+1}
    for (std::size_t i = 0; i < chosen.size(); ++i)
        replace[chosen[(i + 1) % chosen.size()]] = chosen[i];
    Round exchanged;
    for (const auto& b : last.blocks) {
        std::vector<int> vs;
        for (int v : b.verts) {
            auto it = replace.find(v);
            vs.push_back(it == replace.end() ? v : it->second);
        }
        exchanged.blocks.push_back(Block::clique(std::move(vs)));
    }
    exchanged.canonicalize();

    // extend() re-verifies factor validity and edge-disjointness explicitly
    Tournament repaired = extend(shortened, exchanged);
    FactorResult extra = find_factor(feasibility_graph(repaired), t.shape);
    if (extra.status != SearchStatus::Found)
        throw StructureMismatchError("exchange did not unlock an extra round");
    return extend(repaired, extra.round);
}

} // namespace hfactor

#endif
