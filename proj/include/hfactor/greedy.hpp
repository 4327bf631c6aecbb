#ifndef HFACTOR_GREEDY_HPP
#define HFACTOR_GREEDY_HPP

#include "bounds.hpp"
#include "factor_search.hpp"
#include "tournament.hpp"

#include <functional>
#include <optional>
#include <random>

namespace hfactor {

// Round selection for the greedy loop.  The theorems hold for arbitrary
// choices; Random samples uniformly among the first `pool` factors in
// canonical order (exact uniform sampling over all factors is exponential).
struct Strategy {
    enum class Kind { FirstFound, Random, Scripted, Callback };
    Kind kind = Kind::FirstFound;
    std::uint64_t seed = 0;
    long long pool = 1000;
    std::vector<Round> script;
    std::function<std::optional<Round>(const Graph&, const Tournament&)> chooser;

    static Strategy first_found() { return {}; }
    static Strategy random(std::uint64_t seed, long long pool = 1000) {
        Strategy s;
        s.kind = Kind::Random;
        s.seed = seed;
        s.pool = pool;
        return s;
    }
    static Strategy scripted(std::vector<Round> rounds) {
        Strategy s;
        s.kind = Kind::Scripted;
        s.script = std::move(rounds);
        return s;
    }
    static Strategy callback(std::function<std::optional<Round>(const Graph&, const Tournament&)> f) {
        Strategy s;
        s.kind = Kind::Callback;
        s.chooser = std::move(f);
        return s;
    }
};

struct GreedyReport {
    Tournament tournament;
    bool stuck = false;  // no factor remained when the loop ended
    int rounds_played = 0;
    long long guarantee = 0;
    Graph final_feasibility_graph;
};

// The greedy loop: extend by a factor of the current feasibility graph until
// none exists (or the script/chooser stops early).
inline GreedyReport run_greedy(int n, FactorShape shape, const Strategy& strategy) {
    Tournament t = Tournament::empty(n, shape);
    Graph g = Graph::complete(n);
    std::mt19937_64 rng(strategy.seed);
    std::size_t script_pos = 0;
    bool stuck = false;

    for (;;) {
        std::optional<Round> next;
        bool stopped_by_caller = false;
        switch (strategy.kind) {
        case Strategy::Kind::FirstFound: {
            FactorResult res = find_factor(g, shape);
            if (res.status == SearchStatus::Found) next = res.round;
            break;
        }
        case Strategy::Kind::Random: {
            auto pool = enumerate_factors(g, shape, strategy.pool);
            if (!pool.empty()) {
                std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
                next = pool[pick(rng)];
            }
            break;
        }
        case Strategy::Kind::Scripted: {
            if (script_pos < strategy.script.size()) {
                const Round& r = strategy.script[script_pos++];
                std::string why;
                if (!is_valid_factor(g, shape, r, &why))
                    throw ScriptedRoundError("scripted round " + std::to_string(script_pos) +
                                             " invalid: " + why);
                next = r;
            } else {
                stopped_by_caller = true;
            }
            break;
        }
        case Strategy::Kind::Callback: {
            next = strategy.chooser(g, t);
            if (next) {
                std::string why;
                if (!is_valid_factor(g, shape, *next, &why))
                    throw ScriptedRoundError("callback round invalid: " + why);
            } else {
                stopped_by_caller = true;
            }
            break;
        }
        }

        if (!next) {
            if (stopped_by_caller)
                stuck = find_factor(g, shape).status == SearchStatus::NotFound;
            else
                stuck = true;  // exact search exhausted the space
            break;
        }
        g = remove_round(g, shape, *next);
        t.rounds.push_back(*next);
    }

    GreedyReport rep;
    rep.tournament = std::move(t);
    rep.stuck = stuck;
    rep.rounds_played = rep.tournament.rounds_played();
    rep.guarantee = guarantee_bound(n, shape).guarantee;
    rep.final_feasibility_graph = std::move(g);
    return rep;
}

} // namespace hfactor

#endif
