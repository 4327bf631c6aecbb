#ifndef HFACTOR_FACTOR_SEARCH_HPP
#define HFACTOR_FACTOR_SEARCH_HPP

#include "graph.hpp"
#include "shape.hpp"

#include <functional>
#include <vector>

namespace hfactor {

enum class SearchStatus { Found, NotFound, BudgetExceeded };

struct SearchOptions {
    long long node_budget = -1;  // -1 = unbudgeted; acceptance paths run unbudgeted
};

struct FactorResult {
    SearchStatus status;
    Round round;           // meaningful only when status == Found
    long long nodes = 0;
};

namespace detail {

// Exact backtracking search for H-factors.  Always covers the lowest-index
// uncovered vertex, so emitted rounds come out in canonical order and every
// block is already in canonical form.
class FactorSearcher {
public:
    // visit returns false to stop the search early (e.g. enough factors found).
    FactorSearcher(const Graph& g, FactorShape shape, std::function<bool(const Round&)> visit,
                   long long budget)
        : g_(g), shape_(shape), visit_(std::move(visit)), budget_(budget) {}

    // Returns NotFound if the space was exhausted, Found if the visitor
    // stopped the search, BudgetExceeded if the node budget ran out.
    SearchStatus run() {
        if (g_.n() % shape_.k != 0)
            throw DivisibilityError("factor search: k does not divide n");
        alive_ = VertexSet::full(g_.n());
        if (!root_prune()) return SearchStatus::NotFound;
        stopped_ = false;
        exceeded_ = false;
        cover_next();
        if (stopped_) return SearchStatus::Found;
        if (exceeded_) return SearchStatus::BudgetExceeded;
        return SearchStatus::NotFound;
    }

    long long nodes() const { return nodes_; }

private:
    const Graph& g_;
    FactorShape shape_;
    std::function<bool(const Round&)> visit_;
    long long budget_;
    long long nodes_ = 0;
    VertexSet alive_;
    std::vector<Block> blocks_;
    std::vector<int> path_;
    bool stopped_ = false;
    bool exceeded_ = false;

    bool tick() {
        ++nodes_;
        if (budget_ >= 0 && nodes_ > budget_) {
            exceeded_ = true;
            return false;
        }
        return true;
    }

    void cover_next() {
        if (stopped_ || exceeded_) return;
        if (alive_.empty()) {
            Round r{blocks_};
            if (!visit_(r)) stopped_ = true;
            return;
        }
        if (!tick()) return;
        if (!degree_prune()) return;
        int v = alive_.lowest();
        alive_.remove(v);
        if (shape_.kind == ShapeKind::Clique) {
            path_.assign(1, v);
            extend_clique(v);
        } else {
            path_.assign(1, v);
            extend_cycle();
        }
        alive_.add(v);
    }

    // --- clique blocks: ascending choices, pairwise adjacency via row masks ---
    void extend_clique(int last) {
        if (stopped_ || exceeded_) return;
        if (int(path_.size()) == shape_.k) {
            blocks_.push_back(Block{path_});
            auto saved = path_;
            for (std::size_t i = 1; i < saved.size(); ++i) alive_.remove(saved[i]);
            cover_next();
            for (std::size_t i = 1; i < saved.size(); ++i) alive_.add(saved[i]);
            blocks_.pop_back();
            path_ = saved;
            return;
        }
        for (int c = last + 1; c < g_.n(); ++c) {
            if (!alive_.contains(c)) continue;
            bool ok = true;
            for (int u : path_)
                if (!g_.has_edge(u, c)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            path_.push_back(c);
            extend_clique(c);
            path_.pop_back();
            if (stopped_ || exceeded_) return;
        }
    }

    // --- cycle blocks: build a path, close at length k; reflections are
    // deduplicated by requiring second vertex < last vertex ---
    void extend_cycle() {
        if (stopped_ || exceeded_) return;
        int len = int(path_.size());
        int last = path_.back();
        if (len == shape_.k) {
            if (!g_.has_edge(last, path_[0])) return;
            if (shape_.k > 3 && path_[1] > path_[len - 1]) return;
            if (shape_.k == 3 && path_[1] > path_[2]) return;
            blocks_.push_back(Block{path_});
            auto saved = path_;
            cover_next();
            blocks_.pop_back();
            path_ = saved;
            return;
        }
        for (int c = 0; c < g_.n(); ++c) {
            if (!alive_.contains(c) || !g_.has_edge(last, c)) continue;
            path_.push_back(c);
            alive_.remove(c);
            extend_cycle();
            alive_.add(c);
            path_.pop_back();
            if (stopped_ || exceeded_) return;
        }
    }

    // Every uncovered vertex still needs deg_loss uncovered neighbors.
    bool degree_prune() {
        int need = shape_.kind == ShapeKind::Clique ? shape_.k - 1 : 2;
        for (int v = 0; v < g_.n(); ++v)
            if (alive_.contains(v) && covered_degree(g_, v, alive_) < need) return false;
        return true;
    }

    // Structural certificates checked once at the root.  All of them are sound
    // for arbitrary graphs; they exist to close out the adversarial instances
    // without exponential search.
    bool root_prune() {
        if (!degree_prune()) return false;
        if (!component_prune()) return false;
        if (shape_.kind == ShapeKind::Cycle && !bridge_prune()) return false;
        if (!independent_set_prune()) return false;
        return true;
    }

    // Every block is connected, so each connected component must have size
    // divisible by k.
    bool component_prune() {
        int n = g_.n();
        std::vector<int> comp(n, -1);
        for (int s = 0; s < n; ++s) {
            if (comp[s] >= 0) continue;
            int size = 0;
            std::vector<int> stack{s};
            comp[s] = s;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                ++size;
                for (int u = 0; u < n; ++u)
                    if (comp[u] < 0 && g_.has_edge(v, u)) {
                        comp[u] = s;
                        stack.push_back(u);
                    }
            }
            if (size % shape_.k != 0) return false;
        }
        return true;
    }

    // Cycle edges never cross a bridge, so after deleting bridges each
    // component must still have size divisible by k.
    bool bridge_prune() {
        int n = g_.n();
        std::vector<std::vector<int>> adj(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g_.has_edge(u, v)) {
                    adj[u].push_back(v);
                    adj[v].push_back(u);
                }
        std::vector<int> tin(n, -1), low(n, 0);
        std::vector<std::pair<int, int>> bridges;
        int timer = 0;
        // iterative Tarjan
        struct Frame {
            int v, parent;
            std::size_t idx;
        };
        for (int s = 0; s < n; ++s) {
            if (tin[s] >= 0) continue;
            std::vector<Frame> st{{s, -1, 0}};
            tin[s] = low[s] = timer++;
            while (!st.empty()) {
                Frame& f = st.back();
                if (f.idx < adj[f.v].size()) {
                    int to = adj[f.v][f.idx++];
                    if (to == f.parent) continue;
                    if (tin[to] >= 0) {
                        low[f.v] = std::min(low[f.v], tin[to]);
                    } else {
                        tin[to] = low[to] = timer++;
                        st.push_back({to, f.v, 0});
                    }
                } else {
                    int v = f.v, p = f.parent;
                    st.pop_back();
                    if (p >= 0) {
                        low[p] = std::min(low[p], low[v]);
                        if (low[v] > tin[p]) bridges.emplace_back(p, v);
                    }
                }
            }
        }
        if (bridges.empty()) return true;
        Graph h = g_;
        for (auto [u, v] : bridges) h.clear_edge(u, v);
        std::vector<int> comp(n, -1);
        for (int s = 0; s < n; ++s) {
            if (comp[s] >= 0) continue;
            int size = 0;
            std::vector<int> stack{s};
            comp[s] = s;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                ++size;
                for (int u = 0; u < n; ++u)
                    if (comp[u] < 0 && h.has_edge(v, u)) {
                        comp[u] = s;
                        stack.push_back(u);
                    }
            }
            if (size % shape_.k != 0) return false;
        }
        return true;
    }

    // A block of K_k holds at most one vertex of an independent set; a block
    // of C_k holds at most floor(k/2).  A greedy independent set from each
    // seed therefore lower-bounds the number of blocks needed.
    bool independent_set_prune() {
        int n = g_.n();
        int blocks = n / shape_.k;
        int cap = shape_.kind == ShapeKind::Clique ? 1 : shape_.k / 2;
        std::vector<char> forbidden(n);
        for (int seed = 0; seed < n; ++seed) {
            std::fill(forbidden.begin(), forbidden.end(), 0);
            int size = 0;
            auto take = [&](int v) {
                ++size;
                forbidden[v] = 1;
                for (int u = 0; u < n; ++u)
                    if (g_.has_edge(v, u)) forbidden[u] = 1;
            };
            take(seed);
            for (int v = 0; v < n; ++v)
                if (!forbidden[v]) take(v);
            if ((size + cap - 1) / cap > blocks) return false;
        }
        return true;
    }
};

} // namespace detail

// Find one H-factor of g, exactly.  NotFound means none exists.
inline FactorResult find_factor(const Graph& g, FactorShape shape, SearchOptions opts = {}) {
    FactorResult res;
    detail::FactorSearcher s(
        g, shape,
        [&](const Round& r) {
            res.round = r;
            return false;
        },
        opts.node_budget);
    res.status = s.run();
    res.nodes = s.nodes();
    return res;
}

// Up to `limit` distinct factors in canonical order.
inline std::vector<Round> enumerate_factors(const Graph& g, FactorShape shape, long long limit,
                                            SearchOptions opts = {}) {
    if (limit <= 0) throw Error("enumerate_factors: limit must be positive");
    std::vector<Round> out;
    detail::FactorSearcher s(
        g, shape,
        [&](const Round& r) {
            out.push_back(r);
            return (long long)out.size() < limit;
        },
        opts.node_budget);
    SearchStatus st = s.run();
    if (st == SearchStatus::BudgetExceeded)
        throw Error("enumerate_factors: node budget exhausted");
    return out;
}

// Visit every factor (or until the visitor declines).  Used by the oracle and
// the design searches.
inline SearchStatus for_each_factor(const Graph& g, FactorShape shape,
                                    const std::function<bool(const Round&)>& visit,
                                    SearchOptions opts = {}) {
    detail::FactorSearcher s(g, shape, visit, opts.node_budget);
    return s.run();
}

} // namespace hfactor

#endif
