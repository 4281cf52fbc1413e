#include "tw/treedec.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <set>

namespace tw {

int TreeDecomposition::width() const {
    int w = 0;
    for (const VSet& b : bags) w = std::max(w, static_cast<int>(b.size()));
    return w - 1;
}

int TreeDecomposition::count_bags_of_size(int s) const {
    int c = 0;
    for (const VSet& b : bags)
        if (static_cast<int>(b.size()) == s) ++c;
    return c;
}

std::vector<std::vector<int>> TreeDecomposition::adjacency() const {
    std::vector<std::vector<int>> adj(bags.size());
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

TreeDecomposition single_bag(VSet bag) {
    TreeDecomposition td;
    td.add_node(std::move(bag));
    td.root = 0;
    return td;
}

const char* failure_name(ValidationReport::Failure f) {
    switch (f) {
        case ValidationReport::Failure::none: return "ok";
        case ValidationReport::Failure::tree: return "tree";
        case ValidationReport::Failure::vertex: return "vertex";
        case ValidationReport::Failure::edge: return "edge";
        case ValidationReport::Failure::connected: return "connected";
        case ValidationReport::Failure::foreign: return "foreign";
    }
    return "?";
}

bool is_tree(const TreeDecomposition& td) {
    int n = td.size();
    if (n == 0 || static_cast<int>(td.edges.size()) != n - 1) return false;
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int a) {
        while (uf[a] != a) a = uf[a] = uf[uf[a]];
        return a;
    };
    for (auto [a, b] : td.edges) {
        if (a < 0 || b < 0 || a >= n || b >= n) return false;
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        uf[ra] = rb;
    }
    return true;
}

ValidationReport validate(const Graph& g, const TreeDecomposition& td) {
    using F = ValidationReport::Failure;
    ValidationReport rep;
    if (!is_tree(td)) {
        rep.failure = F::tree;
        rep.detail = "node/edge structure is not a tree";
        return rep;
    }
    for (int t = 0; t < td.size(); ++t)
        for (int v : td.bags[t])
            if (!g.has_vertex(v)) {
                rep.failure = F::foreign;
                rep.vertex = v;
                rep.node = t;
                rep.detail = "bag " + std::to_string(t) + " holds non-vertex " + std::to_string(v);
                return rep;
            }
    std::vector<int> count(g.id_bound(), 0);
    for (const VSet& b : td.bags)
        for (int v : b) ++count[v];
    for (int v : g.vertices())
        if (count[v] == 0) {
            rep.failure = F::vertex;
            rep.vertex = v;
            rep.detail = "vertex " + std::to_string(v) + " is in no bag";
            return rep;
        }
    for (auto [u, v] : g.edges()) {
        bool found = false;
        for (const VSet& b : td.bags)
            if (contains(b, u) && contains(b, v)) {
                found = true;
                break;
            }
        if (!found) {
            rep.failure = F::edge;
            rep.vertex = u;
            rep.other = v;
            rep.detail = "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag";
            return rep;
        }
    }
    // In a tree, c nodes induce a connected subgraph iff they span c-1 edges.
    std::vector<int> inner(g.id_bound(), 0);
    for (auto [a, b] : td.edges)
        for (int v : set_meet(td.bags[a], td.bags[b])) ++inner[v];
    for (int v : g.vertices())
        if (inner[v] != count[v] - 1) {
            rep.failure = F::connected;
            rep.vertex = v;
            rep.detail = "bags holding " + std::to_string(v) + " are not connected";
            return rep;
        }
    return rep;
}

ValidationReport validate_torso(const Graph& g, const TorsoTreeDecomposition& ttd) {
    return validate(torso(g, ttd.x), ttd.td);
}

TreeDecomposition shrink(const TreeDecomposition& td) {
    int n = td.size();
    std::vector<std::set<int>> adj(n);
    for (auto [a, b] : td.edges) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    std::vector<char> alive(n, 1);
    int root = td.root;
    auto absorb = [&](int gone, int keep) {
        for (int c : adj[gone])
            if (c != keep) {
                adj[c].erase(gone);
                adj[c].insert(keep);
                adj[keep].insert(c);
            }
        adj[keep].erase(gone);
        adj[gone].clear();
        alive[gone] = 0;
        if (root == gone) root = keep;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < n; ++a) {
            if (!alive[a]) continue;
            for (int b : adj[a]) {
                if (is_subset(td.bags[a], td.bags[b])) {
                    absorb(a, b);
                    changed = true;
                    break;
                }
            }
        }
    }
    std::vector<int> id(n, -1);
    TreeDecomposition out;
    for (int a = 0; a < n; ++a)
        if (alive[a]) id[a] = out.add_node(td.bags[a]);
    for (int a = 0; a < n; ++a)
        for (int b : adj[a])
            if (a < b) out.add_edge(id[a], id[b]);
    out.root = root >= 0 ? id[root] : -1;
    return out;
}

int find_bag(const TreeDecomposition& td, const VSet& s) {
    for (int t = 0; t < td.size(); ++t)
        if (is_subset(s, td.bags[t])) return t;
    return -1;
}

TreeDecomposition join_on(const TreeDecomposition& a, const TreeDecomposition& b, const VSet& s) {
    int ta = find_bag(a, s);
    int tb = find_bag(b, s);
    if (ta < 0 || tb < 0) throw Error("join_on: no bag contains " + to_string(s));
    TreeDecomposition out = a;
    int off = out.size();
    for (const VSet& bag : b.bags) out.add_node(bag);
    for (auto [x, y] : b.edges) out.add_edge(x + off, y + off);
    out.add_edge(ta, tb + off);
    return out;
}

RootedTree rooted(const TreeDecomposition& td, int root) {
    RootedTree rt;
    int n = td.size();
    rt.root = root;
    rt.parent.assign(n, -1);
    rt.depth.assign(n, 0);
    rt.children.assign(n, {});
    auto adj = td.adjacency();
    std::vector<char> seen(n, 0);
    std::deque<int> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
        int t = queue.front();
        queue.pop_front();
        rt.order.push_back(t);
        for (int c : adj[t])
            if (!seen[c]) {
                seen[c] = 1;
                rt.parent[c] = t;
                rt.depth[c] = rt.depth[t] + 1;
                rt.children[t].push_back(c);
                queue.push_back(c);
            }
    }
    return rt;
}

std::vector<int> forget_nodes(const TreeDecomposition& td, const RootedTree& rt, int id_bound) {
    std::vector<int> f(id_bound, -1);
    for (int t : rt.order)
        for (int v : td.bags[t])
            if (v < id_bound && f[v] == -1) f[v] = t;
    return f;
}

std::vector<int> depth_weights(const TreeDecomposition& td, int root, int id_bound) {
    RootedTree rt = rooted(td, root);
    std::vector<int> f = forget_nodes(td, rt, id_bound);
    std::vector<int> d(id_bound, 0);
    for (int v = 0; v < id_bound; ++v)
        if (f[v] >= 0) d[v] = rt.depth[f[v]] + 1;
    return d;
}

namespace {

struct NiceBuilder {
    const TreeDecomposition& td;
    const RootedTree& rt;
    TreeDecomposition out;

    // Adds a node above `below` (or a fresh leaf if below < 0).
    int stack_on(int below, VSet bag) {
        int id = out.add_node(std::move(bag));
        if (below >= 0) out.add_edge(id, below);
        return id;
    }

    // Walks from a node with bag `from` to a node with bag `to`, removing
    // first so intermediate bags never exceed the larger endpoint.
    int stretch(int below, const VSet& from, const VSet& to) {
        VSet cur = from;
        for (int v : set_minus(from, to)) below = stack_on(below, cur = without(cur, v));
        for (int v : set_minus(to, from)) below = stack_on(below, cur = with(cur, v));
        return below;
    }

    int build(int t) {
        const VSet& bag = td.bags[t];
        std::vector<int> kids = rt.children[t];
        auto key = [&](int c) { return td.bags[c].empty() ? INT32_MAX : td.bags[c].front(); };
        std::stable_sort(kids.begin(), kids.end(), [&](int a, int b) { return key(a) < key(b); });
        if (kids.empty()) return stretch(stack_on(-1, {}), {}, bag);
        std::vector<int> tops;
        for (int c : kids) tops.push_back(stretch(build(c), td.bags[c], bag));
        int cur = tops[0];
        for (std::size_t i = 1; i < tops.size(); ++i) {
            int j = out.add_node(bag);
            out.add_edge(j, cur);
            out.add_edge(j, tops[i]);
            cur = j;
        }
        return cur;
    }
};

}  // namespace

TreeDecomposition nice_form(const Graph& g, const TreeDecomposition& td) {
    (void)g;
    if (td.size() == 0) return single_bag({});
    int r = td.root >= 0 ? td.root : 0;
    RootedTree rt = rooted(td, r);
    NiceBuilder nb{td, rt, {}};
    int top = nb.stretch(nb.build(r), td.bags[r], {});
    TreeDecomposition raw = std::move(nb.out);
    raw.root = top;

    // A forget node must have exactly one child: splice in a copy of any
    // forgetting join or leaf.
    RootedTree rr = rooted(raw, top);
    TreeDecomposition fixed;
    fixed.bags = raw.bags;
    for (int t = 0; t < raw.size(); ++t) {
        int p = rr.parent[t];
        if (p < 0) continue;
        bool forgets = !is_subset(raw.bags[t], raw.bags[p]);
        if (forgets && rr.children[t].size() != 1) {
            int copy = fixed.add_node(raw.bags[t]);
            fixed.add_edge(p, copy);
            fixed.add_edge(copy, t);
        } else {
            fixed.add_edge(p, t);
        }
    }
    fixed.root = top;
    return fixed;
}

}  // namespace tw
