#include "tw/flow.hpp"

#include <algorithm>
#include <cassert>
#include <span>

namespace tw {

namespace {

constexpr int kInf = 1 << 28;

// Vertex-split network: v_in = 2v, v_out = 2v+1, then source and sink.
struct Network {
    struct Edge {
        int to, cap, orig;
    };

    struct Storage {
        std::vector<Edge> edges;
        std::vector<int> first, arc_ids, fill;
    };
    // Networks are built millions of times on tiny graphs; recycling their
    // vectors keeps the allocator out of the hot path.
    static std::vector<Storage>& pool() {
        thread_local std::vector<Storage> p;
        return p;
    }
    static Storage take() {
        auto& p = pool();
        if (p.empty()) return {};
        Storage s = std::move(p.back());
        p.pop_back();
        return s;
    }

    Storage store = take();
    int src, snk, nodes;
    std::vector<Edge>& edges = store.edges;
    // Arcs leaving each node, in compressed form: arc_ids[first[u] .. first[u+1]).
    std::vector<int>& first = store.first;
    std::vector<int>& arc_ids = store.arc_ids;
    int value = 0;

    Network(const Network&) = delete;
    Network& operator=(const Network&) = delete;
    ~Network() { pool().push_back(std::move(store)); }

    static int in_node(int v) { return 2 * v; }
    static int out_node(int v) { return 2 * v + 1; }

    Network(const Graph& g, const VSet& x, const VSet& y, const VSet& undeletable) {
        int n = g.id_bound();
        src = 2 * n;
        snk = 2 * n + 1;
        nodes = 2 * n + 2;
        edges.clear();
        for (int v : g.vertices()) add(in_node(v), out_node(v), contains(undeletable, v) ? kInf : 1);
        for (int u : g.vertices())
            for (int v : g.neighbors(u)) add(out_node(u), in_node(v), kInf);
        for (int v : x)
            if (g.has_vertex(v)) add(src, in_node(v), kInf);
        for (int v : y)
            if (g.has_vertex(v)) add(out_node(v), snk, kInf);

        first.assign(nodes + 1, 0);
        for (std::size_t e = 0; e < edges.size(); ++e) ++first[edges[e ^ 1].to + 1];
        for (int u = 0; u < nodes; ++u) first[u + 1] += first[u];
        arc_ids.resize(edges.size());
        std::vector<int>& fill = store.fill;
        fill.assign(first.begin(), first.end() - 1);
        for (std::size_t e = 0; e < edges.size(); ++e) arc_ids[fill[edges[e ^ 1].to]++] = static_cast<int>(e);
    }

    void add(int u, int v, int cap) {
        edges.push_back({v, cap, cap});
        edges.push_back({u, 0, 0});
    }

    std::span<const int> out(int u) const { return {arc_ids.data() + first[u], arc_ids.data() + first[u + 1]}; }

    // Edmonds-Karp; stops once the value exceeds `limit`.
    void run(int limit) {
        thread_local std::vector<int> via, queue;
        via.resize(static_cast<std::size_t>(nodes));
        while (value <= limit) {
            std::fill(via.begin(), via.end(), -1);
            queue.assign(1, src);
            via[src] = -2;
            for (std::size_t head = 0; head < queue.size() && via[snk] == -1; ++head) {
                int u = queue[head];
                for (int e : out(u)) {
                    int v = edges[e].to;
                    if (edges[e].cap > 0 && via[v] == -1) {
                        via[v] = e;
                        queue.push_back(v);
                    }
                }
            }
            if (via[snk] == -1) return;
            int push = std::min(kInf, limit == INT_MAX ? kInf : limit + 1 - value);
            for (int v = snk; v != src; v = edges[via[v] ^ 1].to) push = std::min(push, edges[via[v]].cap);
            for (int v = snk; v != src; v = edges[via[v] ^ 1].to) {
                edges[via[v]].cap -= push;
                edges[via[v] ^ 1].cap += push;
            }
            value += push;
        }
    }

    std::vector<char> from_source() const {
        std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
        std::vector<int> stack{src};
        seen[src] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int e : out(u))
                if (edges[e].cap > 0 && !seen[edges[e].to]) {
                    seen[edges[e].to] = 1;
                    stack.push_back(edges[e].to);
                }
        }
        return seen;
    }

    std::vector<char> to_sink() const {
        std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
        std::vector<int> stack{snk};
        seen[snk] = 1;
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            for (int e : out(w)) {
                int u = edges[e].to;
                if (edges[e ^ 1].cap > 0 && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        return seen;
    }

    // Classify vertices by a node set closed toward the sink (sink_side)
    // or closed from the source (!sink_side).
    Separation cut(const Graph& g, const std::vector<char>& side, bool sink_side) const {
        Separation sep;
        for (int v : g.vertices()) {
            bool in_near = sink_side ? !side[in_node(v)] : side[in_node(v)];
            bool out_near = sink_side ? !side[out_node(v)] : side[out_node(v)];
            if (in_near && out_near)
                sep.a.push_back(v);
            else if (in_near)
                sep.s.push_back(v);
            else
                sep.b.push_back(v);
        }
        return sep;
    }

    std::vector<std::vector<int>> paths() {
        std::vector<std::vector<int>> result;
        for (int e0 : out(src)) {
            const Edge& first = edges[e0];
            if (first.orig == 0 || first.orig - first.cap <= 0) continue;
            int v = first.to / 2;
            std::vector<int> path{v};
            for (;;) {
                int next = -1;
                for (int e : out(out_node(v))) {
                    Edge& ed = edges[e];
                    if (ed.orig > 0 && ed.orig - ed.cap > 0) {
                        ed.cap += 1;  // consume so the walk never reuses it
                        next = e;
                        break;
                    }
                }
                assert(next != -1);
                if (edges[next].to == snk) break;
                v = edges[next].to / 2;
                path.push_back(v);
            }
            result.push_back(std::move(path));
        }
        return result;
    }
};

}  // namespace

FlowResult flow(const Graph& g, const VSet& x, const VSet& y) {
    Network net(g, x, y, {});
    net.run(INT_MAX);
    FlowResult r;
    r.value = net.value;
    r.min_separator = net.cut(g, net.to_sink(), true).s;
    r.paths = net.paths();
    assert(static_cast<int>(r.paths.size()) == r.value);
    return r;
}

int flow_value(const Graph& g, const VSet& x, const VSet& y, const VSet& undeletable, int limit) {
    Network net(g, x, y, undeletable);
    net.run(limit);
    return net.value;
}

Separation min_separation(const Graph& g, const VSet& x, const VSet& y) {
    Network net(g, x, y, {});
    net.run(INT_MAX);
    return net.cut(g, net.to_sink(), true);
}

Separation min_separation_near_x(const Graph& g, const VSet& x, const VSet& y) {
    Network net(g, x, y, {});
    net.run(INT_MAX);
    return net.cut(g, net.from_source(), false);
}

std::optional<Separation> min_separation_avoiding(const Graph& g, const VSet& x, const VSet& y,
                                                  const VSet& undeletable, int limit) {
    Network net(g, x, y, undeletable);
    net.run(limit);
    if (net.value > limit) return std::nullopt;
    return net.cut(g, net.to_sink(), true);
}

bool is_linked(const Graph& g, const VSet& x, const VSet& y) {
    return flow_value(g, x, y, {}, static_cast<int>(x.size())) == static_cast<int>(x.size());
}

std::optional<VSet> other_min_separator(const Graph& g, const VSet& x, const VSet& y) {
    Network net(g, x, y, {});
    net.run(INT_MAX);
    int f = net.value;
    bool avoid_x = static_cast<int>(x.size()) == f;
    bool avoid_y = static_cast<int>(y.size()) == f;
    auto acceptable = [&](const VSet& s) { return (!avoid_x || s != x) && (!avoid_y || s != y); };

    VSet far = net.cut(g, net.to_sink(), true).s;
    if (acceptable(far)) return far;
    VSet near = net.cut(g, net.from_source(), false).s;
    if (acceptable(near)) return near;

    // Both extreme cuts are trivial. A separator other than x misses some
    // a ∈ x \ y; the minimum cuts avoiding a form a sublattice, and its cut
    // closest to x differs from y unless that sublattice is {y}. Symmetric
    // when only y has to be avoided.
    bool from_x = avoid_x;
    for (int a : from_x ? set_minus(x, y) : set_minus(y, x)) {
        Network sub(g, x, y, {a});
        sub.run(f);
        if (sub.value != f) continue;
        VSet s = from_x ? sub.cut(g, sub.from_source(), false).s : sub.cut(g, sub.to_sink(), true).s;
        if (acceptable(s)) return s;
    }
    return std::nullopt;
}

bool is_strictly_linked(const Graph& g, const VSet& x, const VSet& y) {
    if (!is_linked(g, x, y)) return false;
    return !other_min_separator(g, x, y).has_value();
}

int flow_potential(const Graph& g, const VSet& x, const VSet& y) {
    int nx = static_cast<int>(x.size());
    if (is_subset(g.vertices(), x)) return nx;
    Network net(g, x, y, {});
    net.run(INT_MAX);
    // The cut closest to x leaves the largest possible far side.
    if (!net.cut(g, net.from_source(), false).b.empty()) return net.value;
    int best = nx;  // (∅, x, V \ x) always qualifies
    for (int b : set_minus(g.vertices(), x)) {
        int f = flow_value(g, x, with(y, b), {b}, best);
        best = std::min(best, f);
    }
    return best;
}

}  // namespace tw
