#ifndef EVOALG_GRAPH_HPP
#define EVOALG_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "pattern.hpp"
#include "perm.hpp"

namespace evoalg {

/// Directed graph on n <= 8 vertices with 0/1 adjacency, edge i -> j stored as
/// bit (i, j).
class DirectedGraph {
public:
    DirectedGraph() : n_(0), adj_(0) {}
    DirectedGraph(int n, std::uint64_t adj) : n_(n), adj_(adj) {}
    explicit DirectedGraph(int n) : n_(n), adj_(0) {}

    int order() const { return n_; }
    std::uint64_t bits() const { return adj_; }
    bool edge(int i, int j) const { return (adj_ >> (i * n_ + j)) & 1u; }
    void set_edge(int i, int j, bool v = true) {
        std::uint64_t m = std::uint64_t(1) << (i * n_ + j);
        adj_ = v ? (adj_ | m) : (adj_ & ~m);
    }

    friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }
    friend bool operator<(const DirectedGraph& a, const DirectedGraph& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.adj_ < b.adj_;
    }

private:
    int n_;
    std::uint64_t adj_;
};

/// Graph of an evolution algebra from its support pattern: edge i -> j exactly
/// when the (j, i) structure constant is nonzero, so the adjacency matrix is
/// the transpose of the support.
inline DirectedGraph associated_graph(const SupportPattern& p) {
    DirectedGraph g(p.dim());
    for (int i = 0; i < p.dim(); ++i)
        for (int j = 0; j < p.dim(); ++j)
            if (p.get(j, i)) g.set_edge(i, j);
    return g;
}

/// Reachability closure per vertex as bitmasks (vertex i always reaches itself
/// as a length-0 path here only if there is a loop; mask excludes i unless
/// reachable).
inline std::vector<std::uint32_t> reachability(const DirectedGraph& g) {
    const int n = g.order();
    std::vector<std::uint32_t> reach(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.edge(i, j)) reach[i] |= 1u << j;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            std::uint32_t m = reach[i];
            for (int j = 0; j < n; ++j)
                if ((reach[i] >> j) & 1u) m |= reach[j];
            if (m != reach[i]) { reach[i] = m; changed = true; }
        }
    }
    return reach;
}

inline bool is_strongly_connected(const DirectedGraph& g) {
    const int n = g.order();
    if (n <= 1) return true;
    auto reach = reachability(g);
    const std::uint32_t full = (1u << n) - 1;
    for (int i = 0; i < n; ++i)
        if ((reach[i] | (1u << i)) != full) return false;
    return true;
}

/// Connectivity of the underlying undirected graph.
inline bool is_connected(const DirectedGraph& g) {
    const int n = g.order();
    if (n == 0) return true;
    std::uint32_t seen = 1u;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            if (!((seen >> i) & 1u)) continue;
            for (int j = 0; j < n; ++j) {
                if (((seen >> j) & 1u) == 0 && (g.edge(i, j) || g.edge(j, i))) {
                    seen |= 1u << j;
                    changed = true;
                }
            }
        }
    }
    return seen == (1u << n) - 1;
}

/// (out-degree, in-degree) per vertex, in vertex order.
inline std::vector<std::pair<int, int>> degree_profile(const DirectedGraph& g) {
    const int n = g.order();
    std::vector<std::pair<int, int>> out(n, {0, 0});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.edge(i, j)) { out[i].first++; out[j].second++; }
    return out;
}

inline std::vector<std::pair<int, int>> degree_multiset(const DirectedGraph& g) {
    auto d = degree_profile(g);
    std::sort(d.begin(), d.end());
    return d;
}

inline DirectedGraph relabel(const DirectedGraph& g, const Perm& sigma) {
    DirectedGraph h(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j)
            if (g.edge(sigma(i), sigma(j))) h.set_edge(i, j);
    return h;
}

/// Lexicographically minimal row-major adjacency over all vertex relabelings.
/// Exhaustive over S_n; two graphs are isomorphic iff canonical forms agree.
inline DirectedGraph canonical_graph(const DirectedGraph& g) {
    if (g.order() > 8) throw std::invalid_argument("canonical_graph: order > 8");
    static const PermGroup* cache[9] = {};
    int n = g.order();
    if (!cache[n]) cache[n] = new PermGroup(PermGroup::symmetric(n));
    DirectedGraph best = g;
    for (const Perm& s : cache[n]->elements()) {
        DirectedGraph h = relabel(g, s);
        if (h < best) best = h;
    }
    return best;
}

/// Adjacency rows of 0/1 characters, one row per line.
inline std::string graph_str(const DirectedGraph& g) {
    std::string s;
    for (int i = 0; i < g.order(); ++i) {
        for (int j = 0; j < g.order(); ++j) s += g.edge(i, j) ? '1' : '0';
        s += '\n';
    }
    return s;
}

} // namespace evoalg

#endif
