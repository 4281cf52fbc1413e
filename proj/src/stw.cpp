#include "tw/stw.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <set>
#include <string>

#include "tw/debug.hpp"
#include "tw/impsep.hpp"

namespace tw {

int StwInstance::ctc(const VSet& w) const {
    return static_cast<int>(std::count(tc.begin(), tc.end(), w));
}

bool StwInstance::covers_ok() const {
    const Graph& go = *original_g;
    for (std::size_t i = 0; i < original_w.size(); ++i) {
        if (!std::binary_search(cliques().begin(), cliques().end(), tc[i])) return false;
        if (!separates(go, {original_w[i]}, g().vertices(), tc[i])) return false;
    }
    Graph t = torso(go, g().vertices());
    for (auto [u, v] : t.edges())
        if (!g().adjacent(u, v)) return false;
    return true;
}

StwInstance make_stw(const Graph& g, const VSet& w, int k) {
    if (!is_subset(w, g.vertices())) throw Error("terminals outside the graph");
    StwInstance in;
    std::vector<VSet> singles;
    for (int v : w) singles.push_back({v});
    in.base = make_pstw(g, singles, k);
    in.tc = singles;
    in.original_g = std::make_shared<const Graph>(g);
    in.original_w = w;
    return in;
}

StwInstance restrict_ext(const StwInstance& in, const VSet& a, const VSet& s) {
    StwInstance out = in;
    out.base = restrict(in.base, a, s);
    const VSet* target = nullptr;
    for (const VSet& w : out.base.cliques)
        if (is_subset(s, w)) {
            target = &w;  // cliques are sorted, so this is the lexicographically first
            break;
        }
    assert(target);
    for (VSet& c : out.tc)
        if (!intersects(c, a)) c = *target;
    return out;
}

StwInstance merge_ext(const StwInstance& in, const VSet& wi, const VSet& wj) {
    StwInstance out = in;
    out.base = merge(in.base, wi, wj);
    VSet u = set_union(wi, wj);
    for (VSet& c : out.tc)
        if (c == wi || c == wj) c = u;
    return out;
}

StwInstance push_ext(const StwInstance& in, const VSet& wi, const VSet& a) {
    StwInstance out = in;
    out.base = push(in.base, wi, a);
    VSet u = set_union(wi, a);
    for (VSet& c : out.tc)
        if (c == wi) c = u;
    return out;
}

bool is_degenerate(const StwInstance& in, const Separation& sep) {
    int sum = sep.order();
    for (const VSet& w : in.cliques())
        if (intersects(w, sep.a)) sum += in.ctc(w);
    return sum <= in.k() + 1;
}

TorsoTreeDecomposition lift(const Recipe& recipe, TorsoTreeDecomposition sol) {
    for (auto it = recipe.rbegin(); it != recipe.rend(); ++it) {
        int at = find_bag(sol.td, it->anchor);
        if (at < 0) throw Error("lift: no bag contains the attachment separator");
        int node = sol.td.add_node(it->bag);
        sol.td.add_edge(at, node);
        sol.x = set_union(sol.x, it->bag);
    }
    return sol;
}

namespace {

// Set partitions of w into blocks of at most `cap` vertices, as
// restricted growth strings.
void for_each_partition(const VSet& w, int cap, const std::function<bool(const std::vector<VSet>&)>& emit) {
    std::vector<VSet> blocks;
    bool go = true;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (!go) return;
        if (i == w.size()) {
            go = emit(blocks);
            return;
        }
        for (std::size_t b = 0; b < blocks.size() && go; ++b) {
            if (static_cast<int>(blocks[b].size()) >= cap) continue;
            blocks[b].push_back(w[i]);
            rec(i + 1);
            blocks[b].pop_back();
        }
        if (!go) return;
        blocks.push_back({w[i]});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
}

struct Prebrancher {
    const std::function<bool(const StwInstance&, const Recipe&)>& emit;
    Recipe recipe;

    bool process(const StwInstance& in, const std::vector<VSet>& processed) {
        int i = 0;
        while (i < in.t() && std::find(processed.begin(), processed.end(), in.cliques()[i]) != processed.end()) ++i;
        if (i == in.t()) return emit(in, recipe);

        const VSet wi = in.cliques()[i];
        std::vector<VSet> marked = processed;
        marked.push_back(wi);
        if (!process(in, marked)) return false;

        int room = in.k() + 1 - in.ctc(wi);
        if (room < 0) return true;
        const Graph& g = in.g();
        bool go = true;
        enumerate_important(g, wi, in.base.others(i), room, [&](const VSet& s) {
            VSet a = reach(g, wi, s);
            if (!intersects(a, wi)) return true;
            VSet b = set_minus(g.vertices(), set_union(a, s));
            StwInstance next = restrict_ext(in, b, s);
            std::vector<VSet> kept;
            for (const VSet& w : next.cliques())
                if (w == s || std::find(processed.begin(), processed.end(), w) != processed.end()) kept.push_back(w);
            VSet bag = set_union(wi, s);
            if (static_cast<int>(bag.size()) > in.k() + 1) throw Error("prebranch: attachment bag too large");
            recipe.push_back({bag, s});
            go = process(next, kept);
            recipe.pop_back();
            return go;
        });
        return go;
    }
};

}  // namespace

void prebranch(const Graph& g, const VSet& w, int k,
               const std::function<bool(const StwInstance&, const Recipe&)>& emit) {
    if (static_cast<int>(w.size()) != k + 2) throw Error("prebranch needs exactly k+2 terminals");
    StwInstance start = make_stw(g, w, k);
    Prebrancher pb{emit, {}};
    for_each_partition(w, k + 1, [&](const std::vector<VSet>& blocks) {
        StwInstance in = start;
        for (const VSet& raw : blocks) {
            VSet b = make_set(raw);
            in.base.g = clique_union(std::move(in.base.g), b);
            for (VSet& c : in.tc)
                if (contains(b, c.front())) c = b;
        }
        in.base.cliques.clear();
        for (const VSet& raw : blocks) in.base.cliques.push_back(make_set(raw));
        std::sort(in.base.cliques.begin(), in.base.cliques.end());
        return pb.process(in, {});
    });
}

double stw_measure(const StwInstance& in) {
    int k = in.k();
    if (in.t() == 1) return 1;
    double lg = std::log2(static_cast<double>(k));
    double delta = k + 2 - k / lg;
    int q = in.q;
    int big = 0;
    double sum = 0;
    for (const VSet& w : in.cliques()) {
        int size = static_cast<int>(w.size());
        if (size >= q) ++big;
        int low = std::min(q, size);
        if (q >= delta)
            sum += size >= delta ? (k + 2 - low) * lg + 4 * k : 6 * k;
        else
            sum += static_cast<double>(k + 2 - low) * in.ctc(w) + 6 * k;
    }
    int cq = std::min(2, big);
    return static_cast<double>(k + 2 - q) * 3 * k + static_cast<double>(2 - cq) * k + sum;
}

namespace {

struct Solver {
    SearchBudget* budget = nullptr;
    StwStats* stats = nullptr;
    bool checking = debug::enabled();
    // Instances already shown invalid. The solver only reads tc through
    // ctc, so the key records counts rather than the map itself.
    std::set<std::string> invalid;

    using Result = std::optional<TorsoTreeDecomposition>;

    static std::string key(const StwInstance& in) {
        std::string s;
        auto put = [&](int x) { s.append(reinterpret_cast<const char*>(&x), sizeof x); };
        put(in.q);
        for (int v : in.g().vertices()) put(v);
        put(-1);
        for (auto [u, v] : in.g().edges()) put(u), put(v);
        for (const VSet& w : in.cliques()) {
            put(-2);
            put(in.ctc(w));
            for (int v : w) put(v);
        }
        return s;
    }

    bool telemetry(const StwInstance& in) const { return checking && in.k() >= 2 && in.t() >= 2; }

    void expect_at_most(const StwInstance& child, double bound, const char* what) {
        debug::count_check();
        debug::check(stw_measure(child) <= bound + 1e-9, what);
    }

    Result run(const StwInstance& in) {
        std::string id = key(in);
        if (invalid.count(id)) return std::nullopt;
        Result r = expand(in);
        if (!r) invalid.insert(std::move(id));
        return r;
    }

    Result split(const StwInstance& in, const Separation& sep) {
        Result a = run(restrict_ext(in, sep.a, sep.s));
        if (!a) return std::nullopt;
        Result b = run(restrict_ext(in, sep.b, sep.s));
        if (!b) return std::nullopt;
        return combine(*a, *b, sep.s);
    }

    Result expand(const StwInstance& in) {
        if (budget) budget->tick();
        if (stats) ++stats->nodes;
        if (checking) debug::check(in.base.well_formed() && in.covers_ok(), "stw: malformed instance");
        int k = in.k(), q = in.q;
        const Graph& g = in.g();
        if (in.t() <= 1 || g.order() <= k + 2) return small_case(in.base);
        if (pruning() && !terminals_fit(in.base)) return std::nullopt;

        bool tele = telemetry(in);
        double phi = tele ? stw_measure(in) : 0;
        VSet all = in.base.terminals();

        if (auto sep = find_safe_separation(in.base)) {
            if (sep->order() < q && intersects(all, sep->a) && intersects(all, sep->b)) return std::nullopt;
            if (stats) ++stats->safe_splits;
            if (tele) {
                expect_at_most(restrict_ext(in, sep->a, sep->s), phi, "stw: safe separation raised the measure");
                expect_at_most(restrict_ext(in, sep->b, sep->s), phi, "stw: safe separation raised the measure");
            }
            return split(in, *sep);
        }

        for (int i = 0; i < in.t(); ++i)
            for (int j = i + 1; j < in.t(); ++j) {
                const VSet& wi = in.cliques()[i];
                const VSet& wj = in.cliques()[j];
                if (static_cast<int>(set_union(wi, wj).size()) > k + 1) continue;
                if (stats) ++stats->merges;
                StwInstance next = merge_ext(in, wi, wj);
                if (tele) expect_at_most(next, phi - k, "stw: merge did not drop the measure by k");
                if (Result r = run(next)) return r;
            }

        if (q > k + 1) return std::nullopt;

        int big = 0;
        for (const VSet& w : in.cliques())
            if (static_cast<int>(w.size()) >= q) ++big;

        if (big < 2) {
            for (int i = 0; i < in.t(); ++i) {
                const VSet wi = in.cliques()[i];
                int size = static_cast<int>(wi.size());
                if (size >= q) continue;
                bool not_largest = false;
                for (int j = 0; j < in.t(); ++j)
                    if (j != i && static_cast<int>(in.cliques()[j].size()) >= size) not_largest = true;
                if (!not_largest) continue;
                VSet rest = set_minus(all, wi);
                for (int w : wi) {
                    Graph h = g.remove(without(wi, w));
                    Result found;
                    enumerate_important(h, {w}, rest, k, [&](const VSet& s) {
                        int grown = static_cast<int>(set_union(wi, s).size());
                        if (grown < q + 1 || grown > k + 1) return true;
                        if (stats) ++stats->pushes;
                        StwInstance next = push_ext(in, wi, set_minus(s, wi));
                        if (tele) expect_at_most(next, phi - k, "stw: leaf push did not drop the measure by k");
                        found = run(next);
                        return !found;
                    });
                    if (found) return found;
                }
            }
        } else {
            // q-biased bipartitions: cliques of size ≥ q always go right.
            std::vector<int> small;
            for (int i = 0; i < in.t(); ++i)
                if (static_cast<int>(in.cliques()[i].size()) < q) small.push_back(i);
            for (unsigned mask = 1; mask < (1u << small.size()); ++mask) {
                VSet left, right;
                std::vector<char> is_left(in.t(), 0);
                for (std::size_t b = 0; b < small.size(); ++b)
                    if (mask >> b & 1) is_left[small[b]] = 1;
                for (int i = 0; i < in.t(); ++i)
                    (is_left[i] ? left : right) = set_union(is_left[i] ? left : right, in.cliques()[i]);
                Result found;
                enumerate_important(g, left, right, q, [&](const VSet& s) {
                    if (static_cast<int>(s.size()) != q) return true;
                    Separation sep;
                    sep.s = s;
                    sep.a = reach(g, left, s);
                    sep.b = set_minus(g.vertices(), set_union(sep.a, s));
                    int covered = 0;
                    for (const VSet& w : in.cliques())
                        if (intersects(w, sep.a)) covered += in.ctc(w);
                    if (covered <= k + 1 - q) return true;
                    if (checking) debug::check(!is_degenerate(in, sep), "stw: branched on a degenerate separation");
                    if (stats) ++stats->q_splits;
                    if (tele) {
                        for (const VSet* side : {&sep.a, &sep.b}) {
                            StwInstance child = restrict_ext(in, *side, s);
                            double bound = child.t() < in.t() ? phi - k : phi;
                            expect_at_most(child, bound, "stw: order-q split raised the measure");
                        }
                    }
                    found = split(in, sep);
                    return !found;
                });
                if (found) return found;
            }
        }

        StwInstance next = in;
        next.q = q + 1;
        if (stats) ++stats->q_raises;
        if (tele) expect_at_most(next, phi - k, "stw: raising q did not drop the measure by k");
        return run(next);
    }
};

}  // namespace

std::optional<TorsoTreeDecomposition> solve_valid(const StwInstance& in, SearchBudget* budget, StwStats* stats) {
    Solver s;
    s.budget = budget;
    s.stats = stats;
    return s.run(in);
}

std::optional<TorsoTreeDecomposition> solve_stw(const Graph& g, const VSet& w, int k, SearchBudget* budget,
                                                StwStats* stats) {
    Solver s;
    s.budget = budget;
    s.stats = stats;
    std::optional<TorsoTreeDecomposition> result;
    // Every pre-branched instance refines this one, so a certified NO here
    // covers them all.
    if (pruning() && static_cast<int>(w.size()) == k + 2 && !terminals_fit(make_stw(g, w, k).base)) return result;
    prebranch(g, w, k, [&](const StwInstance& in, const Recipe& recipe) {
        if (stats) ++stats->prebranched;
        if (auto sol = s.run(in)) {
            result = lift(recipe, std::move(*sol));
            return false;
        }
        return true;
    });
    if (result) assert(validate_torso(g, *result).ok() && result->covers(w) && result->width() <= k);
    return result;
}

}  // namespace tw
