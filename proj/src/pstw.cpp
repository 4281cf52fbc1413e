#include "tw/pstw.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <set>
#include <string>

#include "tw/debug.hpp"
#include "tw/flow.hpp"
#include "tw/impsep.hpp"

namespace tw {

VSet PstwInstance::terminals() const {
    VSet u;
    for (const VSet& w : cliques) u = set_union(u, w);
    return u;
}

VSet PstwInstance::others(int i) const {
    VSet u;
    for (int j = 0; j < t(); ++j)
        if (j != i) u = set_union(u, cliques[j]);
    return u;
}

bool PstwInstance::well_formed() const {
    if (t() > k + 2) return false;
    for (const VSet& w : cliques)
        if (static_cast<int>(w.size()) > k + 1 || !is_clique(g, w) || !is_subset(w, g.vertices())) return false;
    return std::adjacent_find(cliques.begin(), cliques.end()) == cliques.end();
}

namespace {

std::vector<VSet> normalized(std::vector<VSet> cs) {
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return cs;
}

}  // namespace

PstwInstance make_pstw(Graph g, std::vector<VSet> cliques, int k) {
    PstwInstance in;
    in.k = k;
    in.cliques = normalized(std::move(cliques));
    for (const VSet& w : in.cliques) {
        if (static_cast<int>(w.size()) > k + 1) throw Error("terminal clique larger than k+1");
        g = clique_union(std::move(g), w);
    }
    in.g = std::move(g);
    return in;
}

PstwInstance restrict(const PstwInstance& in, const VSet& a, const VSet& s) {
    if (static_cast<int>(s.size()) > in.k + 1) throw Error("restrict: separator larger than k+1");
    PstwInstance out;
    out.k = in.k;
    out.g = clique_union(in.g.induced(set_union(a, s)), s);
    bool covered = false;
    for (const VSet& w : in.cliques)
        if (intersects(w, a)) {
            out.cliques.push_back(w);
            covered = covered || is_subset(s, w);
        }
    if (!covered) out.cliques.push_back(s);
    out.cliques = normalized(std::move(out.cliques));
    return out;
}

PstwInstance merge(const PstwInstance& in, const VSet& wi, const VSet& wj) {
    VSet u = set_union(wi, wj);
    if (static_cast<int>(u.size()) > in.k + 1) throw Error("merge: union larger than k+1");
    PstwInstance out;
    out.k = in.k;
    out.g = clique_union(in.g, u);
    for (const VSet& w : in.cliques)
        if (w != wi && w != wj) out.cliques.push_back(w);
    out.cliques.push_back(u);
    out.cliques = normalized(std::move(out.cliques));
    return out;
}

PstwInstance push(const PstwInstance& in, const VSet& wi, const VSet& a) {
    if (intersects(wi, a)) throw Error("push: added vertices already in the clique");
    VSet u = set_union(wi, a);
    if (static_cast<int>(u.size()) > in.k + 1) throw Error("push: clique larger than k+1");
    PstwInstance out;
    out.k = in.k;
    out.g = clique_union(in.g, u);
    for (const VSet& w : in.cliques) out.cliques.push_back(w == wi ? u : w);
    out.cliques = normalized(std::move(out.cliques));
    return out;
}

namespace {

Separation split_off_first(const Graph& g, const VSet& s, const std::vector<VSet>& comps) {
    Separation sep;
    sep.s = s;
    sep.a = comps.front();
    for (std::size_t i = 1; i < comps.size(); ++i) sep.b = set_union(sep.b, comps[i]);
    assert(is_separation(g, sep));
    return sep;
}

}  // namespace

std::optional<Separation> find_safe_separation(const PstwInstance& in) {
    const Graph& g = in.g;
    // Separators inside one clique: W_a itself, or W_a minus one vertex.
    for (const VSet& wa : in.cliques) {
        auto comps = components(g, wa);
        if (comps.size() >= 2) return split_off_first(g, wa, comps);
        for (int w : wa) {
            VSet s = without(wa, w);
            comps = components(g, s);
            if (comps.size() >= 2) return split_off_first(g, s, comps);
        }
    }
    // Minimum separators between two cliques other than the cliques.
    for (const VSet& wa : in.cliques)
        for (const VSet& wb : in.cliques) {
            if (wa == wb || wa.size() > wb.size()) continue;
            int f = flow_value(g, wa, wb, {}, static_cast<int>(wa.size()));
            std::optional<VSet> s;
            if (f < static_cast<int>(wa.size()))
                s = min_separation(g, wa, wb).s;
            else
                s = other_min_separator(g, wa, wb);
            if (!s) continue;
            Separation sep;
            sep.s = *s;
            sep.a = reach(g, wa, sep.s);
            sep.b = set_minus(g.vertices(), set_union(sep.a, sep.s));
            assert(sep.strict());
            return sep;
        }
    return std::nullopt;
}

std::optional<TorsoTreeDecomposition> small_case(const PstwInstance& in) {
    VSet all = in.terminals();
    if (in.t() <= 1 || static_cast<int>(all.size()) <= in.k + 1) return TorsoTreeDecomposition{all, single_bag(all)};
    if (in.g.order() > in.k + 2) throw Error("small_case: instance is not small");
    // Here the terminals are all k+2 vertices: a width-k decomposition of G
    // itself is needed, which exists iff some pair is non-adjacent.
    const VSet& vs = in.g.vertices();
    for (int u : vs)
        for (int v : vs)
            if (u < v && !in.g.adjacent(u, v)) {
                TreeDecomposition td;
                td.add_node(without(vs, u));
                td.add_node(without(vs, v));
                td.add_edge(0, 1);
                return TorsoTreeDecomposition{vs, td};
            }
    return std::nullopt;
}

namespace {
std::atomic<bool> pruning_on{true};
}  // namespace

void set_pruning(bool on) { pruning_on = on; }
bool pruning() { return pruning_on; }

bool terminals_fit(const PstwInstance& in) {
    VSet x = in.terminals();
    if (exceeds_width(in.g.induced(x), in.k)) return false;
    // If y stays out of a solution, its neighbours in x end up in one torso
    // clique. When that alone breaks width k, y is in every solution.
    for (bool grew = true; grew;) {
        grew = false;
        for (int y : set_minus(in.g.vertices(), x)) {
            VSet nb = set_meet(in.g.neighbors(y), x);
            if (nb.size() < 2) continue;
            if (static_cast<int>(nb.size()) <= in.k + 1 && !exceeds_width(clique_union(in.g.induced(x), nb), in.k))
                continue;
            x = with(x, y);
            if (exceeds_width(in.g.induced(x), in.k)) return false;
            grew = true;
        }
    }
    return true;
}

int measure(const PstwInstance& in) {
    int sum = 0;
    for (int i = 0; i < in.t(); ++i) sum += 3 * in.k + 3 - flow_potential(in.g, in.cliques[i], in.others(i));
    return sum;
}

TorsoTreeDecomposition combine(const TorsoTreeDecomposition& a, const TorsoTreeDecomposition& b, const VSet& s) {
    return {set_union(a.x, b.x), join_on(a.td, b.td, s)};
}

namespace {

struct Solver {
    SearchBudget* budget = nullptr;
    PstwStats* stats = nullptr;
    bool checking = debug::enabled();
    // Instances already known to have no solution; different merge and
    // push orders reach the same instance many times.
    std::set<std::string> failed;

    using Result = std::optional<TorsoTreeDecomposition>;

    static std::string key(const PstwInstance& in) {
        std::string s;
        auto put = [&](int x) { s.append(reinterpret_cast<const char*>(&x), sizeof x); };
        for (int v : in.g.vertices()) put(v);
        put(-1);
        for (auto [u, v] : in.g.edges()) put(u), put(v);
        for (const VSet& w : in.cliques) {
            put(-2);
            for (int v : w) put(v);
        }
        return s;
    }

    Result run(const PstwInstance& in) {
        std::string id = key(in);
        if (failed.count(id)) return std::nullopt;
        Result r = expand(in);
        if (!r) failed.insert(std::move(id));
        return r;
    }

    Result expand(const PstwInstance& in) {
        if (budget) budget->tick();
        if (stats) ++stats->nodes;
        if (checking) debug::check(in.well_formed(), "pstw: malformed instance");
        int k = in.k;
        if (in.t() <= 1 || in.g.order() <= k + 2) return small_case(in);
        if (pruning() && !terminals_fit(in)) return std::nullopt;

        int phi = checking ? measure(in) : 0;

        if (auto sep = find_safe_separation(in)) {
            if (stats) ++stats->safe_splits;
            PstwInstance left = restrict(in, sep->a, sep->s);
            PstwInstance right = restrict(in, sep->b, sep->s);
            if (checking) {
                debug::count_check();
                debug::check(measure(left) <= phi, "pstw: safe separation raised the measure");
                debug::check(measure(right) <= phi, "pstw: safe separation raised the measure");
            }
            Result a = run(left);
            if (!a) return std::nullopt;
            Result b = run(right);
            if (!b) return std::nullopt;
            return combine(*a, *b, sep->s);
        }

        for (int i = 0; i < in.t(); ++i)
            for (int j = i + 1; j < in.t(); ++j) {
                if (static_cast<int>(set_union(in.cliques[i], in.cliques[j]).size()) > k + 1) continue;
                if (stats) ++stats->merges;
                PstwInstance next = merge(in, in.cliques[i], in.cliques[j]);
                if (checking) {
                    debug::count_check();
                    debug::check(measure(next) <= phi - (k + 1), "pstw: merge did not drop the measure by k+1");
                }
                if (Result r = run(next)) return r;
            }

        for (int i = 0; i < in.t(); ++i)
            for (int j = 0; j < in.t(); ++j)
                if (i != j && is_subset(in.cliques[i], in.cliques[j])) return std::nullopt;

        VSet all = in.terminals();
        for (int i = 0; i < in.t(); ++i) {
            const VSet& wi = in.cliques[i];
            int size = static_cast<int>(wi.size());
            if (size > k) continue;
            bool not_largest = false;
            for (int j = 0; j < in.t(); ++j)
                if (j != i && static_cast<int>(in.cliques[j].size()) >= size) not_largest = true;
            if (!not_largest) continue;
            for (int w : wi) {
                Graph h = in.g.remove(without(wi, w));
                VSet hs = hitting_set(h, {w}, set_minus(all, wi), k);
                for (int v : hs) {
                    if (v == w) continue;
                    if (stats) ++stats->pushes;
                    PstwInstance next = push(in, wi, {v});
                    if (checking) {
                        debug::count_check();
                        debug::check(measure(next) <= phi - 1, "pstw: leaf push did not drop the measure");
                    }
                    if (Result r = run(next)) return r;
                }
            }
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<TorsoTreeDecomposition> solve(const PstwInstance& in, SearchBudget* budget, PstwStats* stats) {
    Solver s;
    s.budget = budget;
    s.stats = stats;
    return s.run(in);
}

}  // namespace tw
