#include "tw/drivers.hpp"

#include <algorithm>
#include <cassert>

#include "tw/debug.hpp"
#include "tw/improve.hpp"
#include "tw/pstw.hpp"
#include "tw/stw.hpp"

namespace tw {

namespace {

using Cover = std::function<std::optional<TorsoTreeDecomposition>(const Graph&, const VSet&)>;

std::vector<VSet> singletons(const VSet& w) {
    std::vector<VSet> out;
    for (int v : w) out.push_back({v});
    return out;
}

int largest_bag(const TreeDecomposition& td) {
    int best = 0;
    for (int i = 1; i < td.size(); ++i)
        if (td.bags[i].size() > td.bags[best].size()) best = i;
    return best;
}

// Iterative compression over one connected component: keeps a width-≤ width
// decomposition of the inserted prefix, asking `cover` for a torso
// decomposition of every bag that grew one too large.
std::optional<TreeDecomposition> compress(const Graph& g, const VSet& comp, int width, const Cover& cover,
                                          DriverStats* stats) {
    TreeDecomposition td;
    VSet prefix;
    for (int v : comp) {
        prefix = with(prefix, v);
        Graph gp = g.induced(prefix);
        if (td.size() == 0) {
            td = single_bag({v});
        } else {
            for (VSet& bag : td.bags) bag = with(bag, v);
            td = shrink(td);
        }
        if (stats) ++stats->insertions;
        while (td.width() > width) {
            assert(td.width() == width + 1);
            td.root = largest_bag(td);
            auto ttd = cover(gp, td.bags[td.root]);
            if (!ttd) return std::nullopt;
            td = shrink(improve(gp, td, std::move(*ttd)));
            if (stats) ++stats->improvements;
        }
        if (debug::enabled()) debug::check(validate(gp, td).ok(), "compress: prefix decomposition invalid");
    }
    return td;
}

// Runs compress on every component and chains the results.
std::optional<TreeDecomposition> by_components(const Graph& g, int width, const Cover& cover, DriverStats* stats) {
    TreeDecomposition out;
    for (const VSet& comp : components(g)) {
        auto part = compress(g, comp, width, cover, stats);
        if (!part) return std::nullopt;
        int offset = out.size();
        for (VSet& bag : part->bags) out.add_node(std::move(bag));
        for (auto [a, b] : part->edges) out.add_edge(a + offset, b + offset);
        if (offset > 0) out.add_edge(0, offset);
    }
    if (out.size() == 0) return single_bag({});
    assert(validate(g, out).ok());
    return out;
}

// Block index of every vertex, for refinement tests.
std::vector<int> labels(const std::vector<VSet>& parts, int id_bound) {
    std::vector<int> at(id_bound, -1);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int v : parts[i]) at[v] = static_cast<int>(i);
    return at;
}

// Every block of `fine` lies inside one block of `coarse`.
bool refines(const std::vector<VSet>& fine, const std::vector<int>& coarse_label) {
    for (const VSet& block : fine)
        for (int v : block)
            if (coarse_label[v] != coarse_label[block.front()]) return false;
    return true;
}

void check_eps(Ratio eps) {
    if (eps.q <= 0 || eps.p <= 0 || eps.p > eps.q) throw Error("eps must lie in (0, 1]");
}

}  // namespace

const char* backend_name(Backend b) { return b == Backend::stw ? "stw" : "pstw"; }

std::optional<TreeDecomposition> exact(const Graph& g, int k, const DriverOptions& opt) {
    if (k < 0) throw Error("exact: k must be non-negative");
    if (opt.lower_bound && exceeds_width(g, k)) {
        if (opt.stats) ++opt.stats->lower_bound_cuts;
        return std::nullopt;
    }
    Cover cover = [&](const Graph& gp, const VSet& w) -> std::optional<TorsoTreeDecomposition> {
        if (opt.stats) ++opt.stats->backend_calls;
        if (opt.backend == Backend::stw) return solve_stw(gp, w, k, opt.budget);
        return solve(make_pstw(gp, singletons(w), k), opt.budget);
    };
    return by_components(g, k, cover, opt.stats);
}

int approx_width(int k, Ratio eps) { return static_cast<int>((eps.q + eps.p) * k / eps.q); }

int approx_parts(Ratio eps) { return static_cast<int>((16 * eps.q + eps.p - 1) / eps.p) + 1; }

void for_each_partition(const VSet& w, int blocks, int max_size,
                        const std::function<bool(const std::vector<VSet>&)>& emit) {
    int n = static_cast<int>(w.size());
    if (blocks < 1 || blocks > n) return;
    std::vector<VSet> parts;
    bool stop = false;
    // Restricted growth string: w[i] joins an open block or opens the next.
    std::function<void(int)> go = [&](int i) {
        if (stop) return;
        int open = static_cast<int>(parts.size());
        if (n - i < blocks - open) return;
        if (i == n) {
            if (!emit(parts)) stop = true;
            return;
        }
        for (int b = 0; b < open && !stop; ++b) {
            if (static_cast<int>(parts[b].size()) >= max_size) continue;
            parts[b].push_back(w[i]);
            go(i + 1);
            parts[b].pop_back();
        }
        if (open < blocks && !stop) {
            parts.push_back({w[i]});
            go(i + 1);
            parts.pop_back();
        }
    };
    go(0);
}

std::optional<TreeDecomposition> approx(const Graph& g, int k, Ratio eps, const DriverOptions& opt) {
    if (k < 0) throw Error("approx: k must be non-negative");
    check_eps(eps);
    int width = approx_width(k, eps);
    if (opt.lower_bound && exceeds_width(g, k)) {
        if (opt.stats) ++opt.stats->lower_bound_cuts;
        return std::nullopt;
    }
    int max_parts = approx_parts(eps);
    Cover cover = [&](const Graph& gp, const VSet& w) -> std::optional<TorsoTreeDecomposition> {
        int n = static_cast<int>(w.size());
        if (n > 4 * k + 4) throw Error("approx: largest bag exceeds 4k+4");
        // Finest partitions first. A solution for a partition also solves
        // every refinement of it (fewer clique edges, same terminals), so a
        // NO rules out all coarsenings.
        std::vector<std::vector<VSet>> no;
        std::optional<TorsoTreeDecomposition> found;
        for (int blocks = std::min(n, max_parts); blocks >= 1 && !found; --blocks) {
            for_each_partition(w, blocks, width + 1, [&](const std::vector<VSet>& parts) {
                std::vector<int> lab = labels(parts, gp.id_bound());
                if (std::any_of(no.begin(), no.end(), [&](const auto& fine) { return refines(fine, lab); })) {
                    if (opt.stats) ++opt.stats->partitions_pruned;
                    return true;
                }
                if (opt.stats) {
                    ++opt.stats->partitions_tried;
                    ++opt.stats->backend_calls;
                }
                found = solve(make_pstw(gp, parts, width), opt.budget);
                if (!found) no.push_back(parts);
                return !found;
            });
            // Every partition coarsens the all-singletons one.
            if (!found && blocks == n) break;
        }
        return found;
    };
    return by_components(g, width, cover, opt.stats);
}

TreewidthResult treewidth(const Graph& g, std::optional<Ratio> eps, const DriverOptions& opt) {
    if (g.empty()) return {-1, single_bag({})};
    for (int k = 0;; ++k) {
        auto td = eps ? approx(g, k, *eps, opt) : exact(g, k, opt);
        if (td) return {td->width(), std::move(*td)};
    }
}

PartitionCheck partition_exists_check(const Graph& g, const VSet& w, const TreeDecomposition& td, Ratio eps) {
    check_eps(eps);
    if (!is_subset(w, g.vertices())) throw Error("partition_exists_check: W outside the graph");
    PartitionCheck out;
    long k = td.width();
    long n_w = static_cast<long>(w.size());
    out.width_limit = approx_width(static_cast<int>(k), eps);
    bool trivial = eps.p * k < eps.q;  // eps k < 1
    // |W| / (eps k / 2) = 2 q |W| / (p k)
    out.part_limit = trivial ? static_cast<int>(n_w) : static_cast<int>(2 * eps.q * n_w / (eps.p * k)) + 1;
    if (trivial) {
        out.parts = singletons(w);
        out.td = td;
    } else {
        TreeDecomposition nice = nice_form(g, td);
        RootedTree rt = rooted(nice, nice.root);
        std::vector<int> forget = forget_nodes(nice, rt, g.id_bound());
        std::vector<VSet> forgotten_here(nice.size());
        for (int v : w) forgotten_here[forget[v]].push_back(v);
        std::vector<char> removed(nice.size(), 0);
        for (auto it = rt.order.rbegin(); it != rt.order.rend(); ++it) {
            int t = *it;
            std::vector<int> d{t};
            for (std::size_t i = 0; i < d.size(); ++i)
                for (int c : rt.children[d[i]])
                    if (!removed[c]) d.push_back(c);
            VSet part;
            for (int x : d) part = set_union(part, forgotten_here[x]);
            bool enough = 2 * eps.q * static_cast<long>(part.size()) >= eps.p * k;
            if (!enough && t != rt.root) continue;
            if (!part.empty()) {
                for (int x : d) nice.bags[x] = set_union(nice.bags[x], part);
                out.parts.push_back(part);
            }
            for (int x : d) removed[x] = 1;
        }
        out.td = std::move(nice);
    }

    Graph gc = g;
    VSet seen;
    for (const VSet& part : out.parts) {
        if (intersects(seen, part)) out.detail = "parts overlap";
        seen = set_union(seen, part);
        gc = clique_union(std::move(gc), part);
        if (out.detail.empty() && !trivial && eps.q * static_cast<long>(part.size()) > eps.p * k)
            out.detail = "part larger than eps k";
    }
    ValidationReport rep = validate(gc, out.td);
    if (out.detail.empty() && seen != w) out.detail = "parts do not cover W";
    if (out.detail.empty() && static_cast<int>(out.parts.size()) > out.part_limit) out.detail = "too many parts";
    if (out.detail.empty() && !rep.ok()) out.detail = "invalid decomposition: " + rep.detail;
    if (out.detail.empty() && out.td.width() > out.width_limit) out.detail = "width above k + eps k";
    out.ok = out.detail.empty();
    return out;
}

}  // namespace tw
