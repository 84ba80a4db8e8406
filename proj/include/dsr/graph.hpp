#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "dsr/errors.hpp"

namespace dsr {

// Simple undirected graph on vertices 0..n-1. Immutable once built except
// through add_edge during construction; no self-loops, no multi-edges.
class Graph {
public:
    explicit Graph(int order) : n_(order), adj_(static_cast<std::size_t>(order) * order, false) {
        if (order < 1) throw std::invalid_argument("graph order must be >= 1");
    }

    int order() const { return n_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return adj_[idx(u, v)];
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        adj_[idx(u, v)] = true;
        adj_[idx(v, u)] = true;
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[idx(u, v)] = false;
        adj_[idx(v, u)] = false;
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (int u = 0; u < n_; ++u)
            if (adj_[idx(v, u)]) ++d;
        return d;
    }

    std::vector<int> neighbors(int v) const {
        check_vertex(v);
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (adj_[idx(v, u)]) out.push_back(u);
        return out;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adj_[idx(u, v)]) out.emplace_back(u, v);
        return out;
    }

    int edge_count() const {
        int m = 0;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adj_[idx(u, v)]) ++m;
        return m;
    }

    int min_degree() const {
        int best = n_;
        for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
        return best;
    }

    bool is_connected() const {
        std::vector<char> seen(n_, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u = 0; u < n_; ++u) {
                if (adj_[idx(v, u)] && !seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    q.push(u);
                }
            }
        }
        return reached == n_;
    }

    // Connected components as sorted vertex lists, ordered by smallest vertex.
    std::vector<std::vector<int>> components() const {
        std::vector<char> seen(n_, 0);
        std::vector<std::vector<int>> comps;
        for (int s = 0; s < n_; ++s) {
            if (seen[s]) continue;
            std::vector<int> comp;
            std::queue<int> q;
            q.push(s);
            seen[s] = 1;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                comp.push_back(v);
                for (int u = 0; u < n_; ++u) {
                    if (adj_[idx(v, u)] && !seen[u]) {
                        seen[u] = 1;
                        q.push(u);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

private:
    std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
    }

    int n_;
    std::vector<bool> adj_;
};

// Pairwise shortest-path distances of a connected graph. Row-major integers.
class DistanceMatrix {
public:
    explicit DistanceMatrix(int order) : n_(order), d_(static_cast<std::size_t>(order) * order, 0) {}

    int order() const { return n_; }
    int at(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, int v) { d_[static_cast<std::size_t>(i) * n_ + j] = v; }

    long long row_sum(int i) const {
        long long s = 0;
        for (int j = 0; j < n_; ++j) s += at(i, j);
        return s;
    }

private:
    int n_;
    std::vector<int> d_;
};

enum class StandardKind { Complete, Cycle, Star };

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

// K_{1,n}: vertex 0 is the center, n leaves.
inline Graph star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star requires >= 1 leaf");
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

inline Graph standard_graph(StandardKind kind, int n) {
    switch (kind) {
        case StandardKind::Complete: return complete_graph(n);
        case StandardKind::Cycle: return cycle_graph(n);
        case StandardKind::Star: return star_graph(n);
    }
    throw std::invalid_argument("unknown standard graph kind");
}

// Vertices of g1 keep their labels; vertices of g2 are shifted by |V(g1)|.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
    int n1 = g1.order();
    Graph g(n1 + g2.order());
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(u + n1, v + n1);
    return g;
}

inline Graph join(const Graph& g1, const Graph& g2) {
    int n1 = g1.order();
    Graph g = disjoint_union(g1, g2);
    for (int u = 0; u < n1; ++u)
        for (int v = n1; v < g.order(); ++v) g.add_edge(u, v);
    return g;
}

// BFS from every source. Rejects disconnected input: the distance spectral
// radius is defined for connected graphs only.
inline DistanceMatrix all_pairs_distances(const Graph& g) {
    int n = g.order();
    DistanceMatrix d(n);
    std::vector<int> dist(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.neighbors(v)) {
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    q.push(u);
                }
            }
        }
        for (int j = 0; j < n; ++j) {
            if (dist[j] < 0) throw std::invalid_argument("graph is disconnected: distances undefined");
            d.set(s, j, dist[j]);
        }
    }
    return d;
}

inline int min_degree(const Graph& g) { return g.min_degree(); }
inline bool is_connected(const Graph& g) { return g.is_connected(); }

} // namespace dsr
