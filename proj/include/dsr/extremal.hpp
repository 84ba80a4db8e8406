#pragma once

#include <optional>
#include <string>

#include "dsr/graph.hpp"

namespace dsr {

// The two extremal shapes K_s v (K_a + b*K_1):
//   family A: a = n - 2s - k,    b = s + k      (k >= 1)
//   family B: a = n - ks - s - 1, b = ks + 1    (k >= 2)
enum class Family { A, B };

inline char family_letter(Family f) { return f == Family::A ? 'A' : 'B'; }

struct ExtremalParams {
    Family family;
    int n;
    int s; // hub clique size; equals the minimum degree of the built graph
    int k;

    int clique_size() const {
        return family == Family::A ? n - 2 * s - k : n - k * s - s - 1;
    }
    int independent_size() const {
        return family == Family::A ? s + k : k * s + 1;
    }

    bool valid() const {
        if (s < 1 || clique_size() < 1) return false;
        if (family == Family::A && k < 1) return false;
        if (family == Family::B && k < 2) return false;
        return true;
    }

    void validate() const {
        if (!valid())
            throw std::invalid_argument("invalid extremal parameters (family " +
                                        std::string(1, family_letter(family)) + ", n=" +
                                        std::to_string(n) + ", s=" + std::to_string(s) +
                                        ", k=" + std::to_string(k) + ")");
    }
};

// K_s v (K_a + b*K_1) with contiguous blocks: hub 0..s-1, clique s..s+a-1,
// independent vertices last.
inline Graph extremal_graph(const ExtremalParams& p) {
    p.validate();
    int s = p.s;
    int a = p.clique_size();
    Graph g(p.n);
    for (int u = 0; u < s; ++u)
        for (int v = u + 1; v < p.n; ++v) g.add_edge(u, v);
    for (int u = s; u < s + a; ++u)
        for (int v = u + 1; v < s + a; ++v) g.add_edge(u, v);
    return g;
}

// Structural signature of a K_s v (K_a + b*K_1) graph, recovered from degrees.
struct ExtremalStructure {
    int hub_count;    // s, also the minimum degree
    int clique_size;  // a
    int isolated_count; // b
};

// Recognizes graphs of shape K_s v (K_a + b*K_1) with s,a >= 1 and b >= 1.
// Hubs are exactly the vertices of degree n-1; after deleting them the rest
// must split into one clique and isolated vertices. This signature determines
// the graph up to isomorphism, so it doubles as the isomorphism test against
// a target extremal graph.
inline std::optional<ExtremalStructure> detect_extremal(const Graph& g) {
    int n = g.order();
    std::vector<int> hubs, rest;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1)
            hubs.push_back(v);
        else
            rest.push_back(v);
    }
    int s = static_cast<int>(hubs.size());
    if (s < 1 || rest.empty()) return std::nullopt;

    std::vector<int> clique, isolated;
    for (int v : rest) {
        int d = 0;
        for (int u : rest)
            if (u != v && g.has_edge(u, v)) ++d;
        if (d == 0)
            isolated.push_back(v);
        else
            clique.push_back(v);
    }
    if (isolated.empty()) return std::nullopt;
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!g.has_edge(clique[i], clique[j])) return std::nullopt;
    return ExtremalStructure{s, static_cast<int>(clique.size()), static_cast<int>(isolated.size())};
}

inline bool matches_extremal(const Graph& g, const ExtremalParams& p) {
    auto st = detect_extremal(g);
    if (!st) return false;
    int a = p.clique_size();
    int b = p.independent_size();
    // A size-1 "clique" vertex is indistinguishable from an isolated one.
    if (a == 1) {
        a = 0;
        b += 1;
    }
    return st->hub_count == p.s && st->clique_size == a && st->isolated_count == b;
}

} // namespace dsr
