#include "tw/oracle.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <numeric>

namespace tw::oracle {

namespace {

using Mask = std::uint32_t;

// Graph on local indices 0..n-1 with adjacency bitmasks.
struct Local {
    std::vector<int> ids;
    std::vector<Mask> adj;
    int n = 0;

    Local(const Graph& g, int cap) {
        ids = g.vertices();
        n = static_cast<int>(ids.size());
        if (n > cap) throw Error("oracle limited to " + std::to_string(cap) + " vertices");
        adj.assign(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (g.adjacent(ids[i], ids[j])) adj[i] |= Mask(1) << j;
    }

    Mask mask(const VSet& s) const {
        Mask m = 0;
        for (int i = 0; i < n; ++i)
            if (contains(s, ids[i])) m |= Mask(1) << i;
        return m;
    }

    VSet set(Mask m) const {
        VSet s;
        for (int i = 0; i < n; ++i)
            if (m >> i & 1) s.push_back(ids[i]);
        return s;
    }

    // Closure of `from` within `allowed`.
    Mask flood(Mask from, Mask allowed) const {
        Mask seen = from & allowed;
        Mask frontier = seen;
        while (frontier) {
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
            next &= allowed & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    Mask all() const { return n == 32 ? ~Mask(0) : (Mask(1) << n) - 1; }
};

}  // namespace

VSet reach(const Graph& g, const VSet& x, const VSet& s) {
    Local l(g, 32);
    return l.set(l.flood(l.mask(x), l.all() & ~l.mask(s)));
}

TwResult exact_tw(const Graph& g) {
    Local l(g, 20);
    int n = l.n;
    if (n == 0) return {-1, {}};
    std::size_t states = std::size_t(1) << n;
    std::vector<signed char> best(states, 0);
    std::vector<signed char> last(states, -1);
    best[0] = -1;
    for (Mask s = 1; s < states; ++s) {
        int b = INT_MAX;
        for (Mask rest = s; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            Mask before = s & ~(Mask(1) << v);
            if (best[before] >= b) continue;
            // Vertices outside the eliminated prefix that v sees through it.
            Mask inside = l.flood(Mask(1) << v, before | (Mask(1) << v));
            Mask seen = 0;
            for (Mask f = inside; f; f &= f - 1) seen |= l.adj[std::countr_zero(f)];
            seen &= ~s;
            int val = std::max<int>(best[before], std::popcount(seen));
            if (val < b) {
                b = val;
                last[s] = static_cast<signed char>(v);
            }
        }
        best[s] = static_cast<signed char>(b);
    }
    TwResult r;
    r.width = best[states - 1];
    std::vector<int> rev;
    for (Mask s = static_cast<Mask>(states - 1); s; s &= ~(Mask(1) << last[s])) rev.push_back(l.ids[last[s]]);
    r.order.assign(rev.rbegin(), rev.rend());
    return r;
}

namespace {

// Width of the elimination game along `perm` (local indices).
int elimination_width(const Local& l, const std::vector<int>& perm) {
    std::vector<Mask> adj = l.adj;
    Mask gone = 0;
    int w = -1;
    for (int v : perm) {
        Mask nb = adj[v] & ~gone;
        w = std::max(w, std::popcount(nb));
        for (Mask f = nb; f; f &= f - 1) adj[std::countr_zero(f)] |= nb & ~(Mask(1) << std::countr_zero(f));
        gone |= Mask(1) << v;
    }
    return w;
}

}  // namespace

int exact_tw_orderings(const Graph& g) {
    Local l(g, 8);
    if (l.n == 0) return -1;
    std::vector<int> perm(l.n);
    std::iota(perm.begin(), perm.end(), 0);
    int best = INT_MAX;
    do best = std::min(best, elimination_width(l, perm));
    while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

TreeDecomposition td_from_elimination(const Graph& g, const std::vector<int>& order) {
    TreeDecomposition td;
    int n = static_cast<int>(order.size());
    if (n == 0) return single_bag({});
    std::vector<int> pos(g.id_bound(), -1);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<VSet> later(g.id_bound());
    for (int v : order)
        for (int u : g.neighbors(v))
            if (pos[u] > pos[v]) later[v].push_back(u);
    for (int v : order) later[v] = make_set(later[v]);
    std::vector<int> parent(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        const VSet& nb = later[v];
        td.add_node(with(nb, v));
        // Fill: the earliest later neighbour inherits the rest.
        int next = -1;
        for (int u : nb)
            if (next < 0 || pos[u] < pos[next]) next = u;
        if (next < 0) continue;
        parent[i] = pos[next];
        for (int u : nb)
            if (u != next) later[next] = with(later[next], u);
    }
    int top = n - 1;
    for (int i = 0; i < n; ++i) {
        if (parent[i] >= 0)
            td.add_edge(i, parent[i]);
        else if (i != top)
            td.add_edge(i, top);
    }
    td.root = top;
    return td;
}

namespace {

struct SepTable {
    std::vector<Mask> seps;     // every separator mask, any size
    std::vector<Mask> reaches;  // R(a, S) per separator
};

bool separates_mask(const Local& l, Mask a, Mask b, Mask s) {
    return (l.flood(a & ~s, l.all() & ~s) & b & ~s) == 0;
}

}  // namespace

std::vector<VSet> all_separators_bruteforce(const Graph& g, const VSet& a, const VSet& b, int k) {
    Local l(g, 15);
    Mask am = l.mask(a), bm = l.mask(b);
    std::vector<VSet> out;
    for (Mask s = 0; s <= l.all(); ++s) {
        if (std::popcount(s) <= k && separates_mask(l, am, bm, s)) out.push_back(l.set(s));
        if (s == l.all()) break;
    }
    return out;
}

std::vector<VSet> all_important_bruteforce(const Graph& g, const VSet& a, const VSet& b, int k) {
    Local l(g, 15);
    Mask am = l.mask(a), bm = l.mask(b);
    SepTable tab;
    for (Mask s = 0;; ++s) {
        if (separates_mask(l, am, bm, s)) {
            tab.seps.push_back(s);
            tab.reaches.push_back(l.flood(am & ~s, l.all() & ~s));
        }
        if (s == l.all()) break;
    }
    std::vector<VSet> out;
    for (std::size_t i = 0; i < tab.seps.size(); ++i) {
        Mask s = tab.seps[i];
        int size = std::popcount(s);
        if (size > k) continue;
        bool minimal = true;
        for (Mask f = s; f && minimal; f &= f - 1)
            if (separates_mask(l, am, bm, s & ~(f & -f))) minimal = false;
        if (!minimal) continue;
        bool important = true;
        for (std::size_t j = 0; j < tab.seps.size() && important; ++j) {
            if (std::popcount(tab.seps[j]) > size) continue;
            Mask r = tab.reaches[i], r2 = tab.reaches[j];
            if ((r & ~r2) == 0 && r != r2) important = false;
        }
        if (important) out.push_back(l.set(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int min_separator_size(const Graph& g, const VSet& x, const VSet& y) {
    Local l(g, 20);
    Mask xm = l.mask(x), ym = l.mask(y);
    int best = l.n;
    for (Mask s = 0;; ++s) {
        if (std::popcount(s) < best && separates_mask(l, xm, ym, s)) best = std::popcount(s);
        if (s == l.all()) break;
    }
    return best;
}

int flow_potential(const Graph& g, const VSet& x, const VSet& y) {
    Local l(g, 20);
    Mask xm = l.mask(x), ym = l.mask(y);
    if (xm == l.all()) return static_cast<int>(x.size());
    int best = INT_MAX;
    for (Mask s = 0;; ++s) {
        int size = std::popcount(s);
        if (size < best) {
            // Components of G \ S are each forced to A (touch x) or B (touch
            // y); a component touching both kills S, a free or y-side one
            // lets B be nonempty.
            Mask left = l.all() & ~s;
            bool ok = true, far_side = false;
            while (left && ok) {
                Mask comp = l.flood(left & -left, l.all() & ~s);
                left &= ~comp;
                bool tx = comp & xm, ty = comp & ym;
                if (tx && ty) ok = false;
                if (!tx) far_side = true;
            }
            if (ok && far_side) best = size;
        }
        if (s == l.all()) break;
    }
    return best;
}

bool is_valid_decomposition(const Graph& g, const TreeDecomposition& td) {
    int n = td.size();
    if (n == 0) return false;
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : td.edges) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b) return false;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    if (static_cast<int>(td.edges.size()) != n - 1) return false;
    // Connected with n-1 edges means a tree.
    auto spread = [&](int start, auto&& allowed) {
        std::vector<char> seen(n, 0);
        std::vector<int> st{start};
        seen[start] = 1;
        int cnt = 0;
        while (!st.empty()) {
            int t = st.back();
            st.pop_back();
            ++cnt;
            for (int c : adj[t])
                if (!seen[c] && allowed(c)) {
                    seen[c] = 1;
                    st.push_back(c);
                }
        }
        return cnt;
    };
    if (spread(0, [](int) { return true; }) != n) return false;
    for (const VSet& bag : td.bags)
        for (int v : bag)
            if (!g.has_vertex(v)) return false;
    for (int v : g.vertices()) {
        std::vector<int> holders;
        for (int t = 0; t < n; ++t)
            if (std::find(td.bags[t].begin(), td.bags[t].end(), v) != td.bags[t].end()) holders.push_back(t);
        if (holders.empty()) return false;
        auto holds = [&](int t) { return std::find(holders.begin(), holders.end(), t) != holders.end(); };
        if (spread(holders[0], holds) != static_cast<int>(holders.size())) return false;
    }
    for (int u : g.vertices())
        for (int v : g.neighbors(u)) {
            bool ok = false;
            for (const VSet& bag : td.bags) {
                bool hu = std::find(bag.begin(), bag.end(), u) != bag.end();
                bool hv = std::find(bag.begin(), bag.end(), v) != bag.end();
                if (hu && hv) {
                    ok = true;
                    break;
                }
            }
            if (!ok) return false;
        }
    return true;
}

}  // namespace tw::oracle
