#ifndef HFACTOR_SHAPE_HPP
#define HFACTOR_SHAPE_HPP

#include "errors.hpp"
#include "graph.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace hfactor {

enum class ShapeKind { Clique, Cycle };

// Template graph of a factor: K_k or C_k.
struct FactorShape {
    ShapeKind kind;
    int k;

    static FactorShape clique(int k) {
        if (k < 2) throw Error("Clique shape needs k >= 2");
        return {ShapeKind::Clique, k};
    }
    static FactorShape cycle(int k) {
        if (k < 3) throw Error("Cycle shape needs k >= 3");
        return {ShapeKind::Cycle, k};
    }

    // Edges every vertex loses when one factor of this shape is deleted.
    int degree_loss() const { return kind == ShapeKind::Clique ? k - 1 : 2; }

    // Edge count of one copy of H.
    int edges_per_block() const { return kind == ShapeKind::Clique ? k * (k - 1) / 2 : k; }

    bool operator==(const FactorShape& o) const { return kind == o.kind && k == o.k; }

    std::string name() const {
        return (kind == ShapeKind::Clique ? "clique" : "cycle") + std::string("(") +
               std::to_string(k) + ")";
    }
};

// One copy of H.  Cliques are kept sorted; cycles are kept as the canonical
// rotation/reflection: minimum vertex first, then the smaller of the two
// neighbors of it second.
struct Block {
    std::vector<int> verts;

    static Block clique(std::vector<int> vs) {
        std::sort(vs.begin(), vs.end());
        return Block{std::move(vs)};
    }

    static Block cycle(const std::vector<int>& vs) {
        int k = int(vs.size());
        int pos = int(std::min_element(vs.begin(), vs.end()) - vs.begin());
        std::vector<int> fwd(k), bwd(k);
        for (int i = 0; i < k; ++i) {
            fwd[i] = vs[(pos + i) % k];
            bwd[i] = vs[(pos - i + k) % k];
        }
        return Block{fwd[1] <= bwd[1] ? std::move(fwd) : std::move(bwd)};
    }

    static Block canonical(const FactorShape& shape, const std::vector<int>& vs) {
        if (int(vs.size()) != shape.k) throw Error("Block: wrong size");
        return shape.kind == ShapeKind::Clique ? clique(vs) : cycle(vs);
    }

    int size() const { return int(verts.size()); }

    // Edges induced by this block for the given shape.
    std::vector<std::pair<int, int>> edges(const FactorShape& shape) const {
        std::vector<std::pair<int, int>> e;
        int k = size();
        if (shape.kind == ShapeKind::Clique) {
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) e.emplace_back(verts[i], verts[j]);
        } else {
            for (int i = 0; i < k; ++i) {
                int u = verts[i], v = verts[(i + 1) % k];
                e.emplace_back(std::min(u, v), std::max(u, v));
            }
        }
        return e;
    }

    bool operator==(const Block& o) const { return verts == o.verts; }
    bool operator<(const Block& o) const { return verts < o.verts; }
};

// An H-factor: vertex-disjoint blocks covering all n vertices.
struct Round {
    std::vector<Block> blocks;

    void canonicalize() { std::sort(blocks.begin(), blocks.end()); }

    bool operator==(const Round& o) const { return blocks == o.blocks; }
    bool operator<(const Round& o) const { return blocks < o.blocks; }

    std::vector<std::pair<int, int>> edges(const FactorShape& shape) const {
        std::vector<std::pair<int, int>> e;
        for (const auto& b : blocks) {
            auto be = b.edges(shape);
            e.insert(e.end(), be.begin(), be.end());
        }
        return e;
    }
};

// True iff r is a partition of 0..n-1 into blocks of size k with all induced
// edges present in g.
inline bool is_valid_factor(const Graph& g, const FactorShape& shape, const Round& r,
                            std::string* why = nullptr) {
    int n = g.n();
    if (int(r.blocks.size()) * shape.k != n) {
        if (why) *why = "blocks do not cover n vertices";
        return false;
    }
    std::vector<char> seen(n, 0);
    for (const auto& b : r.blocks) {
        if (b.size() != shape.k) {
            if (why) *why = "block of wrong size";
            return false;
        }
        for (int v : b.verts) {
            if (v < 0 || v >= n || seen[v]) {
                if (why) *why = "vertex repeated or out of range";
                return false;
            }
            seen[v] = 1;
        }
        for (auto [u, v] : b.edges(shape))
            if (!g.has_edge(u, v)) {
                if (why)
                    *why = "missing edge " + std::to_string(u) + "-" + std::to_string(v);
                return false;
            }
    }
    return true;
}

// Delete all edges induced by r.  Throws MissingEdgeError if any induced edge
// is absent (the round is not edge-disjoint from earlier deletions).
inline Graph remove_round(const Graph& g, const FactorShape& shape, const Round& r) {
    Graph out = g;
    for (const auto& b : r.blocks)
        for (auto [u, v] : b.edges(shape)) {
            if (!out.has_edge(u, v))
                throw MissingEdgeError("remove_round: edge " + std::to_string(u) + "-" +
                                       std::to_string(v) + " not present");
            out.clear_edge(u, v);
        }
    return out;
}

} // namespace hfactor

#endif
