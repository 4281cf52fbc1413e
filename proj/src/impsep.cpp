#include "tw/impsep.hpp"

#include <cassert>

#include "tw/flow.hpp"

namespace tw {

VSet unique_min_important(const Graph& g, const VSet& a, const VSet& b) {
    return min_separation(g, a, b).s;
}

bool is_important(const Graph& g, const VSet& a, const VSet& b, const VSet& s) {
    if (!separates(g, a, b, s)) return false;
    for (int v : s)
        if (separates(g, a, b, without(s, v))) return false;
    VSet r = reach(g, a, s);
    VSet grow = set_minus(set_meet(s, set_union(neighborhood(g, r), a)), b);
    int size = static_cast<int>(s.size());
    for (int v : grow) {
        VSet keep = with(r, v);
        if (flow_value(g, set_union(a, keep), b, keep, size) <= size) return false;
    }
    return true;
}

namespace {

struct Enumerator {
    const Graph& g;
    const VSet& a;
    const VSet& b;
    const std::function<bool(const VSet&)>& emit;
    bool stopped = false;

    // h = g minus `taken`; `fixed` are source vertices barred from the
    // separator.
    void run(const Graph& h, const VSet& src, const VSet& fixed, int budget, const VSet& taken) {
        if (stopped) return;
        VSet sink = set_meet(b, h.vertices());
        auto cut = min_separation_avoiding(h, src, sink, fixed, budget);
        if (!cut) return;
        if (cut->s.empty()) {
            if (is_important(g, a, b, taken) && !emit(taken)) stopped = true;
            return;
        }
        int v = cut->s.front();
        run(h.remove({v}), without(src, v), fixed, budget - 1, with(taken, v));
        if (!contains(sink, v)) run(h, with(src, v), with(fixed, v), budget, taken);
    }
};

}  // namespace

void enumerate_important(const Graph& g, const VSet& a, const VSet& b, int k,
                         const std::function<bool(const VSet&)>& emit) {
    if (k < 0) return;
    Enumerator e{g, a, b, emit};
    e.run(g, set_meet(a, g.vertices()), {}, k, {});
}

std::vector<VSet> important_separators(const Graph& g, const VSet& a, const VSet& b, int k) {
    std::vector<VSet> out;
    enumerate_important(g, a, b, k, [&](const VSet& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

VSet smallest_dominating_important(const Graph& g, const VSet& a, const VSet& b, const VSet& s) {
    if (!separates(g, a, b, s)) throw Error("smallest_dominating_important: not a separator");
    // Every dominating separator avoids R(a,s); the furthest minimum cut
    // among those is important and as small as possible.
    VSet r = reach(g, a, s);
    auto sep = min_separation_avoiding(g, set_union(a, r), b, r, static_cast<int>(s.size()));
    assert(sep);
    return sep->s;
}

namespace {

VSet hitting_rec(const Graph& g, const VSet& a, const VSet& b, int k) {
    int f = flow_value(g, a, b, {}, k);
    if (f == 0 || k < f) return {};
    VSet s = unique_min_important(g, a, b);
    VSet sb = set_meet(s, b);
    if (!sb.empty()) return {sb.front()};
    int v = s.front();
    VSet next = set_union(s, g.neighbors(v));
    assert(flow_value(g, next, b) > f);
    return with(hitting_rec(g, next, b, k), v);
}

}  // namespace

VSet hitting_set(const Graph& g, const VSet& a, const VSet& b, int k) {
    VSet h = hitting_rec(g, set_meet(a, g.vertices()), set_meet(b, g.vertices()), k);
    assert(static_cast<int>(h.size()) <= std::max(0, k));
    return h;
}

}  // namespace tw
