#ifndef HFACTOR_ORACLE_HPP
#define HFACTOR_ORACLE_HPP

#include "analysis.hpp"
#include "bounds.hpp"
#include "factor_search.hpp"
#include "tournament.hpp"

#include <unordered_map>
#include <unordered_set>

namespace hfactor {

struct OracleOptions {
    int max_vertices = 0;       // 0 = use the built-in per-shape desk limits
    bool reverse_order = false; // iterate factor choices in reverse (order-independence check)
};

struct OracleResult {
    int n = 0;
    FactorShape shape{ShapeKind::Clique, 2};
    int min_depth = 0;            // worst greedy outcome over all adversarial runs
    int max_depth = 0;            // best possible tournament length
    Tournament witness_min;       // a run achieving min_depth that is stuck
    long long states_explored = 0;
};

namespace detail {

struct GraphKeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= std::size_t(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

inline std::vector<std::uint64_t> graph_key(const Graph& g) {
    int words = (g.n() + 63) / 64;
    std::vector<std::uint64_t> key;
    key.reserve(std::size_t(g.n()) * words);
    for (int v = 0; v < g.n(); ++v)
        for (int w = 0; w < words; ++w) key.push_back(g.row(v)[w]);
    return key;
}

inline void oracle_scale_check(int n, FactorShape shape, const OracleOptions& opts) {
    int limit = opts.max_vertices;
    if (limit == 0) {
        if (shape == FactorShape::clique(2)) limit = 8;
        else if (shape == FactorShape::clique(3) || shape == FactorShape::cycle(3)) limit = 9;
        else limit = 8;
    }
    if (n > limit)
        throw ScaleLimitError("oracle: n=" + std::to_string(n) + " exceeds limit " +
                              std::to_string(limit) + " for " + shape.name());
}

// Memoized extremal depth over all reachable feasibility-graph states.
class DepthOracle {
public:
    DepthOracle(FactorShape shape, bool minimize, bool reverse)
        : shape_(shape), minimize_(minimize), reverse_(reverse) {}

    int depth(const Graph& g) {
        auto key = graph_key(g);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        ++states_;
        std::vector<Round> options;
        for_each_factor(g, shape_, [&](const Round& r) {
            options.push_back(r);
            return true;
        });
        int best = 0;
        bool first = true;
        if (reverse_) std::reverse(options.begin(), options.end());
        for (const Round& r : options) {
            int d = 1 + depth(remove_round(g, shape_, r));
            if (first || (minimize_ ? d < best : d > best)) best = d;
            first = false;
        }
        memo_.emplace(std::move(key), best);
        return best;
    }

    // a concrete run from g realizing the memoized extremal depth
    Tournament witness(const Graph& g, int n) {
        Tournament t = Tournament::empty(n, shape_);
        Graph cur = g;
        int want = depth(cur);
        while (want > 0) {
            bool advanced = false;
            for_each_factor(cur, shape_, [&](const Round& r) {
                Graph next = remove_round(cur, shape_, r);
                if (1 + depth(next) == want) {
                    t.rounds.push_back(r);
                    cur = std::move(next);
                    advanced = true;
                    return false;
                }
                return true;
            });
            if (!advanced) throw Error("oracle: witness reconstruction failed");
            want = depth(cur);
        }
        return t;
    }

    long long states() const { return states_; }

private:
    FactorShape shape_;
    bool minimize_, reverse_;
    std::unordered_map<std::vector<std::uint64_t>, int, GraphKeyHash> memo_;
    long long states_ = 0;
};

} // namespace detail

// Exhaustive ground truth: the worst depth any greedy run can be forced to,
// and the best achievable tournament length, over every play of the game on
// K_n.  Desk scale only.
inline OracleResult oracle_depths(int n, FactorShape shape, OracleOptions opts = {}) {
    if (n % shape.k != 0) throw DivisibilityError("oracle: k must divide n");
    detail::oracle_scale_check(n, shape, opts);
    Graph g = Graph::complete(n);
    OracleResult res;
    res.n = n;
    res.shape = shape;
    detail::DepthOracle mino(shape, true, opts.reverse_order);
    res.min_depth = mino.depth(g);
    res.witness_min = mino.witness(g, n);
    res.states_explored = mino.states();
    detail::DepthOracle maxo(shape, false, opts.reverse_order);
    res.max_depth = maxo.depth(g);
    res.states_explored += maxo.states();
    return res;
}

struct CharacterizationSweep {
    int n = 0;
    FactorShape shape{ShapeKind::Clique, 2};
    int critical_rounds = 0;
    long long states_checked = 0;
    long long stuck_states = 0;
    std::vector<Graph> counterexamples;  // feasibility graphs violating the biconditional
    bool holds() const { return counterexamples.empty(); }
};

// Enumerate every reachable feasibility graph at the critical round count and
// test the stuck-state characterization on each: matchings against the
// K_{n/2,n/2} criterion, cliques against the K_{n/k+1}-in-complement one.
inline CharacterizationSweep exhaustive_characterization_check(int n, FactorShape shape,
                                                               OracleOptions opts = {}) {
    if (shape.kind != ShapeKind::Clique)
        throw WrongShapeError("characterization sweep: clique shapes only");
    if (n % shape.k != 0) throw DivisibilityError("oracle: k must divide n");
    detail::oracle_scale_check(n, shape, opts);
    CharacterizationSweep sweep;
    sweep.n = n;
    sweep.shape = shape;
    long long k = shape.k;
    sweep.critical_rounds = k == 2 ? n / 2 : int(n / (k * (k - 1)));

    std::unordered_set<std::vector<std::uint64_t>, detail::GraphKeyHash> seen;
    std::function<void(const Graph&, int)> walk = [&](const Graph& g, int depth) {
        if (!seen.insert(detail::graph_key(g)).second) return;
        if (depth == sweep.critical_rounds) {
            ++sweep.states_checked;
            bool stuck = find_factor(g, shape).status == SearchStatus::NotFound;
            if (stuck) ++sweep.stuck_states;
            bool predicted;
            if (k == 2)
                predicted = detail::is_two_disjoint_halves(g) && (n / 2) % 2 == 1;
            else
                predicted = detail::has_clique_of_size(g.complement(), n / int(k) + 1);
            if (stuck != predicted) sweep.counterexamples.push_back(g);
            return;
        }
        for_each_factor(g, shape, [&](const Round& r) {
            walk(remove_round(g, shape, r), depth + 1);
            return true;
        });
    };
    walk(Graph::complete(n), 0);
    return sweep;
}

} // namespace hfactor

#endif
