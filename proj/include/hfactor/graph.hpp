#ifndef HFACTOR_GRAPH_HPP
#define HFACTOR_GRAPH_HPP

#include "errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace hfactor {

// Dense undirected simple graph on vertices 0..n-1.  Adjacency is kept as one
// bit row per vertex, which makes neighborhood intersections during
// backtracking a couple of word operations.  Mutating operations return a new
// graph; values are safe to share.
class Graph {
public:
    Graph() : n_(0), words_(0) {}

    explicit Graph(int n) : n_(n), words_((n + 63) / 64), rows_(std::size_t(n) * words_, 0) {
        if (n < 1) throw Error("Graph: vertex count must be positive");
    }

    static Graph complete(int n) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.set_edge(u, v);
        return g;
    }

    int n() const { return n_; }

    bool has_edge(int u, int v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }

    void set_edge(int u, int v) {
        if (u == v) throw Error("Graph: self-loop");
        row(u)[v >> 6] |= std::uint64_t(1) << (v & 63);
        row(v)[u >> 6] |= std::uint64_t(1) << (u & 63);
    }

    void clear_edge(int u, int v) {
        row(u)[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
        row(v)[u >> 6] &= ~(std::uint64_t(1) << (u & 63));
    }

    int degree(int v) const {
        int d = 0;
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
        return d;
    }

    int min_degree() const {
        int m = n_;  // any degree is < n
        for (int v = 0; v < n_; ++v) m = std::min(m, degree(v));
        return m;
    }

    int max_degree() const {
        int m = 0;
        for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
        return m;
    }

    long long edge_count() const {
        long long s = 0;
        for (int v = 0; v < n_; ++v) s += degree(v);
        return s / 2;
    }

    Graph complement() const {
        Graph g(n_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!has_edge(u, v)) g.set_edge(u, v);
        return g;
    }

    const std::uint64_t* row(int v) const { return rows_.data() + std::size_t(v) * words_; }
    std::uint64_t* row(int v) { return rows_.data() + std::size_t(v) * words_; }
    int words() const { return words_; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (has_edge(u, v)) e.emplace_back(u, v);
        return e;
    }

private:
    int n_;
    int words_;
    std::vector<std::uint64_t> rows_;
};

inline Graph complete_graph(int n) {
    if (n < 1) throw Error("complete_graph: n must be >= 1");
    return Graph::complete(n);
}

inline Graph complement(const Graph& g) { return g.complement(); }

inline int min_degree(const Graph& g) { return g.min_degree(); }

// Small helper used throughout: a bitset over vertices, one word array.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), bits_((n + 63) / 64, 0) {}

    static VertexSet full(int n) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) s.add(v);
        return s;
    }

    void add(int v) { bits_[v >> 6] |= std::uint64_t(1) << (v & 63); }
    void remove(int v) { bits_[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }
    bool contains(int v) const { return (bits_[v >> 6] >> (v & 63)) & 1u; }

    int count() const {
        int c = 0;
        for (auto w : bits_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : bits_) if (w) return false;
        return true;
    }

    int lowest() const {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) return int(i * 64 + std::countr_zero(bits_[i]));
        return -1;
    }

    int n() const { return n_; }
    const std::uint64_t* data() const { return bits_.data(); }
    std::uint64_t* data() { return bits_.data(); }
    int words() const { return int(bits_.size()); }

private:
    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Count of still-uncovered neighbors of v.
inline int covered_degree(const Graph& g, int v, const VertexSet& alive) {
    int d = 0;
    const std::uint64_t* r = g.row(v);
    const std::uint64_t* a = alive.data();
    for (int w = 0; w < g.words(); ++w) d += std::popcount(r[w] & a[w]);
    return d;
}

} // namespace hfactor

#endif
