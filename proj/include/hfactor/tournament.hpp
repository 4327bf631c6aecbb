#ifndef HFACTOR_TOURNAMENT_HPP
#define HFACTOR_TOURNAMENT_HPP

#include "factor_search.hpp"
#include "graph.hpp"
#include "shape.hpp"

namespace hfactor {

// Ordered list of pairwise edge-disjoint H-factors of K_n.
struct Tournament {
    FactorShape shape;
    int n = 0;
    std::vector<Round> rounds;

    static Tournament empty(int n, FactorShape shape) {
        if (n < 1) throw Error("Tournament: n must be positive");
        if (n % shape.k != 0) throw DivisibilityError("Tournament: k must divide n");
        return Tournament{shape, n, {}};
    }

    int rounds_played() const { return int(rounds.size()); }
};

// K_n minus every edge used by the rounds.
inline Graph feasibility_graph(const Tournament& t) {
    Graph g = Graph::complete(t.n);
    for (const auto& r : t.rounds) g = remove_round(g, t.shape, r);
    return g;
}

// Append a round; the round must be an H-factor of the current feasibility
// graph.  An already-used edge raises RoundConflictError.
inline Tournament extend(const Tournament& t, const Round& r, const Graph* feas = nullptr) {
    Graph g = feas ? *feas : feasibility_graph(t);
    std::string why;
    if (!is_valid_factor(g, t.shape, r, &why)) {
        if (why.rfind("missing edge", 0) == 0)
            throw RoundConflictError("extend: " + why + " (edge already used)");
        throw Error("extend: round is not a valid factor: " + why);
    }
    Tournament out = t;
    out.rounds.push_back(r);
    return out;
}

} // namespace hfactor

#endif
