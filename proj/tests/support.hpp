#pragma once

#include <random>
#include <vector>

#include "tw/graph.hpp"

// Small named graphs for tests. Vertex ids start at 1 to match the usual
// hand-drawn examples.
namespace tw::testing {

inline Graph path_graph(int n) {
    Graph g;
    g.add_vertex(1);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n, 1);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g;
    for (int v = 1; v <= n; ++v) g.add_vertex(v);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

// r x c grid, row-major ids from 1.
inline Graph grid_graph(int r, int c) {
    Graph g;
    auto id = [&](int i, int j) { return i * c + j + 1; };
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            g.add_vertex(id(i, j));
            if (i + 1 < r) g.add_edge(id(i, j), id(i + 1, j));
            if (j + 1 < c) g.add_edge(id(i, j), id(i, j + 1));
        }
    return g;
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
    Graph g;
    std::bernoulli_distribution coin(p);
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline VSet random_subset(const Graph& g, int size, std::mt19937& rng) {
    VSet vs = g.vertices();
    std::shuffle(vs.begin(), vs.end(), rng);
    vs.resize(std::min<std::size_t>(vs.size(), size));
    return make_set(vs);
}

}  // namespace tw::testing
