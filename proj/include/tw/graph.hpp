#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tw/vset.hpp"

namespace tw {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Undirected simple graph over small non-negative ids. Ids are kept as is by
// every derived graph (induced subgraphs, torsos), so results never need
// translating back.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);  // vertices 0..n-1, no edges

    void add_vertex(int v);
    void add_edge(int u, int v);

    bool has_vertex(int v) const {
        return v >= 0 && v < static_cast<int>(present_.size()) && present_[v];
    }
    bool adjacent(int u, int v) const { return has_vertex(u) && contains(adj_[u], v); }

    const VSet& vertices() const { return verts_; }
    const VSet& neighbors(int v) const { return adj_[v]; }
    int order() const { return static_cast<int>(verts_.size()); }
    bool empty() const { return verts_.empty(); }
    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const;
    // one past the largest id that was ever allocated
    int id_bound() const { return static_cast<int>(present_.size()); }

    Graph induced(const VSet& s) const;
    Graph remove(const VSet& s) const { return induced(set_minus(verts_, s)); }

    bool operator==(const Graph& o) const { return verts_ == o.verts_ && edges() == o.edges(); }

  private:
    void grow(int v);

    VSet verts_;
    std::vector<VSet> adj_;
    std::vector<char> present_;
};

// Open neighbourhood of s: vertices outside s adjacent to something in s.
VSet neighborhood(const Graph& g, const VSet& s);
// N[s] = s plus its open neighbourhood.
VSet closed_neighborhood(const Graph& g, const VSet& s);

// Vertices of g \ s reachable from x \ s.
VSet reach(const Graph& g, const VSet& x, const VSet& s);
// (x ∩ s) ∪ N(reach(g, x, s)).
VSet reach_boundary(const Graph& g, const VSet& x, const VSet& s);

// Connected components of g \ s, ordered by smallest vertex.
std::vector<VSet> components(const Graph& g, const VSet& s = {});

bool is_clique(const Graph& g, const VSet& s);
bool is_connected(const Graph& g);
// True iff no path from x \ s to y \ s avoids s.
bool separates(const Graph& g, const VSet& x, const VSet& y, const VSet& s);

Graph clique_union(Graph g, const VSet& s);
Graph torso(const Graph& g, const VSet& x);

struct Separation {
    VSet a, s, b;
    int order() const { return static_cast<int>(s.size()); }
    bool strict() const { return !a.empty() && !b.empty(); }
};

bool is_separation(const Graph& g, const Separation& sep);

// Lower bound on tw(g): the largest minimum degree seen while repeatedly
// contracting a minimum-degree vertex into its least-degree neighbour.
int contraction_degeneracy(const Graph& g);

// True only if tw(g) > k. Joins non-adjacent pairs with at least k+1 common
// neighbours (no width-k decomposition can keep them apart) until none are
// left, then compares the contraction degeneracy with k.
bool exceeds_width(const Graph& g, int k);

}  // namespace tw
