#include "tw/improve.hpp"

#include <cassert>

#include "tw/debug.hpp"
#include "tw/flow.hpp"

namespace tw {

std::int64_t weight_of(const VSet& s, const std::vector<int>& d) {
    std::int64_t sum = 0;
    for (int v : s) sum += v < static_cast<int>(d.size()) ? d[v] : 0;
    return sum;
}

std::int64_t phi_d(const Graph& g, const VSet& x, const std::vector<int>& d, int k) {
    return static_cast<std::int64_t>(x.size()) * g.order() * (k + 1) + weight_of(x, d);
}

TorsoTreeDecomposition pull(const Graph& g, const TorsoTreeDecomposition& ttd, const Separation& sep, int r) {
    if (!is_separation(g, sep)) throw Error("pull: not a separation");
    if (r < 0 || r >= ttd.td.size()) throw Error("pull: bad node");
    VSet sb = set_union(sep.s, sep.b);
    VSet target = set_meet(ttd.td.bags[r], sb);
    FlowResult f = flow(g.induced(sb), sep.s, target);
    if (f.value < sep.order()) throw Error("pull: separator not linked into the bag");

    TorsoTreeDecomposition out;
    out.x = set_union(set_meet(ttd.x, sep.a), sep.s);
    out.td.edges = ttd.td.edges;
    out.td.root = ttd.td.root;
    for (const VSet& bag : ttd.td.bags) {
        VSet nb = set_meet(bag, sep.a);
        for (const auto& p : f.paths)
            for (int v : p)
                if (contains(bag, v)) {
                    nb.push_back(p.front());
                    break;
                }
        out.td.add_node(make_set(std::move(nb)));
    }
    return out;
}

bool is_witness(const Graph& g, const VSet& w, const TorsoTreeDecomposition& ttd, const std::vector<int>& d,
                const DLinkWitness& wit) {
    if (wit.node < 0 || wit.node >= ttd.td.size()) return false;
    const VSet& bag = ttd.td.bags[wit.node];
    if (!separates(g, bag, w, wit.separator)) return false;
    if (wit.separator.size() < bag.size()) return true;
    return wit.separator.size() == bag.size() && weight_of(wit.separator, d) < weight_of(bag, d);
}

TorsoTreeDecomposition refine_cover(const Graph& g, const VSet& w, const TorsoTreeDecomposition& ttd,
                                    const std::vector<int>& d, const DLinkWitness& wit) {
    if (!ttd.covers(w)) throw Error("refine_cover: decomposition does not cover W");
    if (!is_witness(g, w, ttd, d, wit)) throw Error("refine_cover: invalid witness");
    const VSet& bag = ttd.td.bags[wit.node];
    VSet s = wit.separator;
    if (flow_value(g, w, bag, {}, static_cast<int>(s.size())) < static_cast<int>(s.size()))
        s = min_separation(g, w, bag).s;
    Separation sep;
    sep.s = s;
    sep.a = reach(g, w, s);
    sep.b = set_minus(g.vertices(), set_union(sep.a, s));
    return pull(g, ttd, sep, wit.node);
}

std::variant<TreeDecomposition, DLinkWitness> improve_step(const Graph& g, const TreeDecomposition& td,
                                                           const TorsoTreeDecomposition& ttd) {
    int r = td.root;
    if (r < 0 || r >= td.size()) throw Error("improve_step: decomposition is not rooted");
    int k = td.width();
    const VSet& w = td.bags[r];
    if (static_cast<int>(w.size()) != k + 1) throw Error("improve_step: root bag is not a largest bag");
    if (!ttd.covers(w)) throw Error("improve_step: torso decomposition does not cover the root bag");
    if (ttd.width() > k - 1) throw Error("improve_step: torso decomposition too wide");

    RootedTree rt = rooted(td, r);
    std::vector<int> fv = forget_nodes(td, rt, g.id_bound());
    // Euler intervals give O(1) strict-descendant tests.
    std::vector<int> tin(td.size()), tout(td.size());
    {
        int clock = 0;
        std::vector<std::pair<int, std::size_t>> stack{{r, 0}};
        tin[r] = clock++;
        while (!stack.empty()) {
            auto& [t, i] = stack.back();
            if (i < rt.children[t].size()) {
                int c = rt.children[t][i++];
                tin[c] = clock++;
                stack.push_back({c, 0});
            } else {
                tout[t] = clock++;
                stack.pop_back();
            }
        }
    }
    auto strictly_below = [&](int a, int t) { return a != t && tin[t] < tin[a] && tout[a] < tout[t]; };

    const TreeDecomposition& tx = ttd.td;
    int xroot = tx.root >= 0 ? tx.root : 0;
    RootedTree rx = rooted(tx, xroot);
    std::vector<int> fx = forget_nodes(tx, rx, g.id_bound());

    TreeDecomposition out = tx;
    for (const VSet& c : components(g, ttd.x)) {
        VSet nc = neighborhood(g, c);
        VSet closed = set_union(c, nc);
        int attach = xroot;
        int best = -1;
        for (int v : nc)
            if (rx.depth[fx[v]] > best) {
                best = rx.depth[fx[v]];
                attach = fx[v];
            }
        assert(is_subset(nc, tx.bags[attach]));

        std::vector<int> nodes;
        std::vector<VSet> bags;
        for (int t = 0; t < td.size(); ++t) {
            if (!intersects(td.bags[t], c)) continue;
            VSet below;
            for (int v : nc)
                if (strictly_below(fv[v], t)) below.push_back(v);
            VSet bc = set_union(set_meet(td.bags[t], closed), below);
            if (bc != td.bags[t] && bc.size() >= td.bags[t].size()) {
                VSet s = set_union(set_minus(tx.bags[attach], below), set_minus(td.bags[t], closed));
                return DLinkWitness{attach, s};
            }
            nodes.push_back(t);
            bags.push_back(std::move(bc));
        }
        std::vector<int> id(td.size(), -1);
        int top = -1;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            id[nodes[i]] = out.add_node(bags[i]);
            if (top < 0 || rt.depth[nodes[i]] < rt.depth[top]) top = nodes[i];
        }
        for (auto [a, b] : td.edges)
            if (id[a] >= 0 && id[b] >= 0) out.add_edge(id[a], id[b]);
        out.add_edge(id[top], attach);
    }
    out.root = -1;
    return shrink(out);
}

TreeDecomposition improve(const Graph& g, const TreeDecomposition& td, TorsoTreeDecomposition ttd,
                          ImproveStats* stats) {
    int k = td.width();
    VSet w = td.bags.at(td.root);
    ttd.td = shrink(ttd.td);
    std::vector<int> d = depth_weights(td, td.root, g.id_bound());
    int kx = ttd.width();
    std::int64_t phi = phi_d(g, ttd.x, d, kx);
    std::int64_t bound = phi;
    int before = td.count_bags_of_size(k + 1);
    for (int iter = 0;; ++iter) {
        auto step = improve_step(g, td, ttd);
        if (auto* done = std::get_if<TreeDecomposition>(&step)) {
            if (stats) *stats = {iter, bound};
            debug::check(done->width() <= k, "improve: width grew");
            debug::check(done->count_bags_of_size(k + 1) < before, "improve: no fewer largest bags");
            debug::check(done->size() <= std::max(1, g.order()), "improve: too many nodes");
            return std::move(*done);
        }
        ttd = refine_cover(g, w, ttd, d, std::get<DLinkWitness>(step));
        std::int64_t next = phi_d(g, ttd.x, d, kx);
        debug::check(next < phi, "improve: phi_d did not decrease");
        debug::check(iter + 1 <= bound, "improve: iteration bound exceeded");
        if (next >= phi) throw Error("improve: no progress");
        phi = next;
    }
}

}  // namespace tw
