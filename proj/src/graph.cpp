#include "tw/graph.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace tw {

std::string to_string(const VSet& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
    return os.str();
}

Graph::Graph(int n) {
    for (int v = 0; v < n; ++v) add_vertex(v);
}

void Graph::grow(int v) {
    if (v >= static_cast<int>(present_.size())) {
        present_.resize(v + 1, 0);
        adj_.resize(v + 1);
    }
}

void Graph::add_vertex(int v) {
    if (v < 0) throw Error("negative vertex id");
    grow(v);
    if (!present_[v]) {
        present_[v] = 1;
        verts_ = tw::with(std::move(verts_), v);
    }
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw Error("self-loop on vertex " + std::to_string(u));
    add_vertex(u);
    add_vertex(v);
    adj_[u] = tw::with(std::move(adj_[u]), v);
    adj_[v] = tw::with(std::move(adj_[v]), u);
}

std::size_t Graph::edge_count() const {
    std::size_t m = 0;
    for (int v : verts_) m += adj_[v].size();
    return m / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u : verts_)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const VSet& s) const {
    Graph h;
    h.present_.assign(present_.size(), 0);
    h.adj_.resize(present_.size());
    for (int v : s) {
        if (!has_vertex(v)) continue;
        h.present_[v] = 1;
        h.verts_.push_back(v);
    }
    for (int v : h.verts_) {
        VSet& row = h.adj_[v];
        for (int u : adj_[v])
            if (h.present_[u]) row.push_back(u);
    }
    return h;
}

VSet neighborhood(const Graph& g, const VSet& s) {
    VSet out;
    for (int v : s)
        if (g.has_vertex(v))
            for (int u : g.neighbors(v)) out.push_back(u);
    return set_minus(make_set(std::move(out)), s);
}

VSet closed_neighborhood(const Graph& g, const VSet& s) {
    VSet in;
    for (int v : s)
        if (g.has_vertex(v)) in.push_back(v);
    return set_union(in, neighborhood(g, in));
}

VSet reach(const Graph& g, const VSet& x, const VSet& s) {
    std::vector<char> seen(g.id_bound(), 0);
    for (int v : s)
        if (g.has_vertex(v)) seen[v] = 1;
    std::vector<int> stack;
    VSet out;
    for (int v : x)
        if (g.has_vertex(v) && !seen[v]) {
            seen[v] = 1;
            stack.push_back(v);
        }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        out.push_back(v);
        for (int u : g.neighbors(v))
            if (!seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    return make_set(std::move(out));
}

VSet reach_boundary(const Graph& g, const VSet& x, const VSet& s) {
    return set_union(set_meet(x, s), neighborhood(g, reach(g, x, s)));
}

std::vector<VSet> components(const Graph& g, const VSet& s) {
    std::vector<char> seen(g.id_bound(), 0);
    for (int v : s)
        if (g.has_vertex(v)) seen[v] = 1;
    std::vector<VSet> out;
    for (int root : g.vertices()) {
        if (seen[root]) continue;
        VSet comp;
        std::vector<int> stack{root};
        seen[root] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        out.push_back(make_set(std::move(comp)));
    }
    return out;
}

bool is_clique(const Graph& g, const VSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool separates(const Graph& g, const VSet& x, const VSet& y, const VSet& s) {
    return !intersects(reach(g, x, s), y);
}

Graph clique_union(Graph g, const VSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) g.add_edge(s[i], s[j]);
    return g;
}

Graph torso(const Graph& g, const VSet& x) {
    Graph t = g.induced(x);
    for (const VSet& c : components(g, x)) t = clique_union(std::move(t), neighborhood(g, c));
    return t;
}

bool is_separation(const Graph& g, const Separation& sep) {
    const VSet& a = sep.a;
    const VSet& s = sep.s;
    const VSet& b = sep.b;
    if (intersects(a, s) || intersects(a, b) || intersects(s, b)) return false;
    if (set_union(set_union(a, s), b) != g.vertices()) return false;
    for (int v : a)
        if (intersects(g.neighbors(v), b)) return false;
    return true;
}

int contraction_degeneracy(const Graph& g) {
    std::vector<VSet> adj(g.id_bound());
    VSet alive = g.vertices();
    for (int v : alive) adj[v] = g.neighbors(v);
    int bound = 0;
    while (alive.size() > 1) {
        int v = *std::min_element(alive.begin(), alive.end(),
                                  [&](int a, int b) { return adj[a].size() < adj[b].size(); });
        bound = std::max(bound, static_cast<int>(adj[v].size()));
        alive = without(alive, v);
        if (adj[v].empty()) continue;
        int u = *std::min_element(adj[v].begin(), adj[v].end(),
                                  [&](int a, int b) { return adj[a].size() < adj[b].size(); });
        for (int w : adj[v]) {
            adj[w] = without(adj[w], v);
            if (w != u) {
                adj[w] = with(adj[w], u);
                adj[u] = with(adj[u], w);
            }
        }
        adj[v].clear();
    }
    return bound;
}

bool exceeds_width(const Graph& g, int k) {
    if (g.order() > 0 && k < 0) return true;
    Graph h = g;
    for (bool grew = true; grew;) {
        grew = false;
        const VSet& vs = h.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                int u = vs[i], v = vs[j];
                if (h.adjacent(u, v)) continue;
                if (static_cast<int>(set_meet(h.neighbors(u), h.neighbors(v)).size()) > k) {
                    h.add_edge(u, v);
                    grew = true;
                }
            }
    }
    return contraction_degeneracy(h) > k;
}

}  // namespace tw
