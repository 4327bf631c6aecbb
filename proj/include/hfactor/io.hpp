#ifndef HFACTOR_IO_HPP
#define HFACTOR_IO_HPP

#include "graph.hpp"
#include "tournament.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace hfactor {

// Edge-list format: first line "n m", then m lines "u v" with u < v.
inline void write_graph(std::ostream& os, const Graph& g) {
    auto e = g.edges();
    os << g.n() << ' ' << e.size() << '\n';
    for (auto [u, v] : e) os << u << ' ' << v << '\n';
}

inline Graph read_graph(std::istream& is) {
    int n;
    long long m;
    if (!(is >> n >> m)) throw IoError("graph: bad header");
    if (n < 1) throw IoError("graph: n must be positive");
    Graph g(n);
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(is >> u >> v)) throw IoError("graph: truncated edge list");
        if (u < 0 || v < 0 || u >= n || v >= n || u >= v)
            throw IoError("graph: edge out of range (want 0 <= u < v < n)");
        g.set_edge(u, v);
    }
    return g;
}

// Tournament format: header "shape k n r", then r rounds of n/k lines, one
// block per line, vertices space-separated (cycle blocks in canonical
// rotation).
inline void write_tournament(std::ostream& os, const Tournament& t) {
    os << (t.shape.kind == ShapeKind::Clique ? "clique" : "cycle") << ' ' << t.shape.k << ' '
       << t.n << ' ' << t.rounds.size() << '\n';
    for (const auto& r : t.rounds)
        for (const auto& b : r.blocks) {
            for (std::size_t i = 0; i < b.verts.size(); ++i)
                os << (i ? " " : "") << b.verts[i];
            os << '\n';
        }
}

inline Tournament read_tournament(std::istream& is) {
    std::string kind;
    int k, n;
    long long r;
    if (!(is >> kind >> k >> n >> r)) throw IoError("tournament: bad header");
    FactorShape shape = kind == "clique" ? FactorShape::clique(k)
                        : kind == "cycle" ? FactorShape::cycle(k)
                                          : throw IoError("tournament: unknown shape " + kind);
    Tournament t = Tournament::empty(n, shape);
    int blocks_per_round = n / k;
    for (long long ri = 0; ri < r; ++ri) {
        Round round;
        for (int bi = 0; bi < blocks_per_round; ++bi) {
            std::vector<int> vs(k);
            for (int i = 0; i < k; ++i)
                if (!(is >> vs[i])) throw IoError("tournament: truncated round");
            round.blocks.push_back(Block::canonical(shape, vs));
        }
        round.canonicalize();
        t.rounds.push_back(std::move(round));
    }
    return t;
}

inline std::string to_string(const Tournament& t) {
    std::ostringstream os;
    write_tournament(os, t);
    return os.str();
}

} // namespace hfactor

#endif
