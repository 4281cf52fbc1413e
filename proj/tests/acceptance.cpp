// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failures, so ctest fails if any criterion does.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "support.hpp"
#include "tw/debug.hpp"
#include "tw/drivers.hpp"
#include "tw/flow.hpp"
#include "tw/impsep.hpp"
#include "tw/improve.hpp"
#include "tw/io.hpp"
#include "tw/oracle.hpp"
#include "tw/pstw.hpp"

using namespace tw;
using namespace tw::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(const char* name, bool ok, const std::string& detail) {
    std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// 300 seeded G(n,p) graphs, n in [4,10], p in {0.2,0.4,0.6,0.8}.
struct Entry {
    Graph g;
    int tw;
};

std::vector<Entry> build_corpus() {
    std::vector<Entry> out;
    for (int i = 0; i < 300; ++i) {
        Graph g = gnp(4 + i % 7, 0.2 + 0.2 * ((i / 7) % 4), 2024 + i);
        out.push_back({g, oracle::exact_tw(g).width});
    }
    return out;
}

bool valid_within(const Graph& g, const TreeDecomposition& td, int width) {
    return validate(g, td).ok() && oracle::is_valid_decomposition(g, td) && td.width() <= width;
}

void oracle_equivalence(const std::vector<Entry>& corpus) {
    auto start = Clock::now();
    int mismatches = 0, invalid = 0;
    for (const Entry& e : corpus) {
        TreewidthResult r = treewidth(e.g);
        if (r.width != e.tw) ++mismatches;
        if (!valid_within(e.g, r.td, r.width)) ++invalid;
    }
    double t = seconds_since(start);
    report("oracle-equivalence", mismatches == 0 && invalid == 0 && t < 600,
           fmt("%zu graphs, %d width mismatches, %d invalid decompositions, %.1f s", corpus.size(), mismatches,
               invalid, t));
}

void named_families() {
    int checked = 0, bad = 0;
    auto expect = [&](const Graph& g, int want) {
        ++checked;
        TreewidthResult r = treewidth(g);
        if (r.width != want || oracle::exact_tw(g).width != want || !valid_within(g, r.td, want)) ++bad;
    };
    for (int n = 1; n <= 6; ++n) expect(complete_graph(n), n - 1);
    for (int n = 3; n <= 8; ++n) expect(cycle(n), 2);
    expect(grid(3, 3), 3);
    // Forests: paths, stars, random trees and unions of them.
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        Graph f;
        int n = 2 + i % 9;
        for (int v = 1; v <= n; ++v) {
            f.add_vertex(v);
            if (v > 1 && rng() % 4 != 0) f.add_edge(v, 1 + static_cast<int>(rng() % (v - 1)));
        }
        ++checked;
        TreewidthResult r = treewidth(f);
        int want = f.edge_count() ? 1 : 0;
        if (r.width != want || r.width > 1 || oracle::exact_tw(f).width != want || !valid_within(f, r.td, 1)) ++bad;
    }
    expect(path_graph(7), 1);
    report("named-families", bad == 0, fmt("%d graphs (K1..K6, C3..C8, 3x3 grid, forests), %d wrong", checked, bad));
}

void backend_agreement(const std::vector<Entry>& corpus) {
    auto start = Clock::now();
    // The driver lower bound would answer most NO instances before either
    // backend runs, so it is off here.
    int pairs = 0, disagree = 0, wrong = 0;
    for (const Entry& e : corpus) {
        for (int k = 0; k <= e.tw; ++k) {
            bool got[2];
            for (Backend b : {Backend::stw, Backend::pstw}) {
                auto td = exact(e.g, k, {.backend = b, .lower_bound = false});
                got[b == Backend::pstw] = td.has_value();
                if (td && !valid_within(e.g, *td, k)) ++wrong;
            }
            ++pairs;
            if (got[0] != got[1]) ++disagree;
            if (got[0] != (k >= e.tw)) ++wrong;
        }
    }
    // Repeat on the smaller graphs with the in-solver width pruning off too.
    set_pruning(false);
    int raw_pairs = 0;
    for (const Entry& e : corpus) {
        if (e.g.order() > 7) continue;
        for (int k = 0; k <= e.tw; ++k) {
            auto s = exact(e.g, k, {.backend = Backend::stw, .lower_bound = false});
            auto p = exact(e.g, k, {.backend = Backend::pstw, .lower_bound = false});
            ++raw_pairs;
            if (s.has_value() != p.has_value()) ++disagree;
            if (s.has_value() != (k >= e.tw)) ++wrong;
        }
    }
    set_pruning(true);
    report("backend-agreement", disagree == 0 && wrong == 0,
           fmt("%d (g,k) pairs plus %d without pruning, %d disagreements, %d wrong answers, %.1f s", pairs,
               raw_pairs, disagree, wrong, seconds_since(start)));
}

void approximation_contract(const std::vector<Entry>& corpus) {
    auto start = Clock::now();
    int runs = 0, missed = 0, too_wide = 0, below_tw = 0;
    for (Ratio eps : {Ratio{1, 4}, Ratio{1, 2}, Ratio{1, 1}}) {
        for (const Entry& e : corpus) {
            for (int k = 0; k <= e.tw; ++k) {
                ++runs;
                auto td = approx(e.g, k, eps, {.lower_bound = false});
                if (!td) {
                    if (k == e.tw) ++missed;
                    continue;
                }
                int bound = (int)std::floor((1.0 + eps.value()) * k + 1e-9);
                if (!valid_within(e.g, *td, bound)) ++too_wide;
                if (td->width() < e.tw) ++below_tw;
            }
        }
    }
    report("approximation-contract", missed == 0 && too_wide == 0 && below_tw == 0,
           fmt("%d runs over eps 1/4,1/2,1; %d failures at k=tw, %d invalid or over (1+eps)k, %d below tw, %.1f s",
               runs, missed, too_wide, below_tw, seconds_since(start)));
}

void important_separator_suite() {
    auto start = Clock::now();
    long instances = 0, bad = 0;
    for (int i = 0; i < 150; ++i) {
        int n = 3 + i % 6;
        Graph g = gnp(n, 0.25 + 0.15 * (i % 4), 500 + i);
        std::vector<VSet> small;
        for (int u = 1; u <= n; ++u) {
            small.push_back({u});
            for (int v = u + 1; v <= n; ++v) small.push_back({u, v});
        }
        for (const VSet& a : small)
            for (const VSet& b : small) {
                if (intersects(a, b)) continue;
                auto all = oracle::all_important_bruteforce(g, a, b, n);
                int f = flow_value(g, a, b);
                for (int k = 0; k <= 4; ++k) {
                    ++instances;
                    std::vector<VSet> brute;
                    for (const VSet& s : all)
                        if ((int)s.size() <= k) brute.push_back(s);
                    auto mine = important_separators(g, a, b, k);
                    std::sort(mine.begin(), mine.end());
                    bool ok = mine == brute && mine.size() <= std::pow(4.0, k);
                    if (k >= f) ok = ok && mine.size() <= std::pow(double(k), double(k - f));
                    if (k >= 1) {
                        VSet h = hitting_set(g, a, b, k);
                        ok = ok && (int)h.size() <= k;
                        for (const VSet& s : brute)
                            if (!s.empty()) ok = ok && intersects(h, s);
                    }
                    if (!ok) ++bad;
                }
            }
    }
    report("important-separators", bad == 0,
           fmt("150 graphs, %ld (a,b,k) instances, %ld violations, %.1f s", instances, bad, seconds_since(start)));
}

TorsoTreeDecomposition optimal_torso_td(const Graph& g, const VSet& x) {
    Graph t = torso(g, x);
    auto r = oracle::exact_tw(t);
    return {x, oracle::td_from_elimination(t, r.order)};
}

void pull_and_improve_suite() {
    std::mt19937 rng(3);
    int pulls = 0, pull_bad = 0;
    for (int i = 0; pulls < 200; ++i) {
        Graph g = gnp(4 + i % 7, 0.3 + 0.1 * (i % 4), 900 + i);
        VSet x = random_subset(g, 2 + i % (g.order() - 1), rng);
        TorsoTreeDecomposition ttd = optimal_torso_td(g, x);
        int r = static_cast<int>(rng() % ttd.td.size());
        VSet seed = random_subset(g, 1 + i % 3, rng);
        Separation sep = min_separation(g, seed, ttd.td.bags[r]);
        sep.a = reach(g, seed, sep.s);
        sep.b = set_minus(g.vertices(), set_union(sep.a, sep.s));
        TorsoTreeDecomposition out = pull(g, ttd, sep, r);
        ++pulls;
        bool ok = is_subset(sep.s, out.td.bags[r]) && validate_torso(g, out).ok();
        for (int t = 0; t < ttd.td.size(); ++t) ok = ok && out.td.bags[t].size() <= ttd.td.bags[t].size();
        if (!ok) ++pull_bad;
    }

    int runs = 0, improve_bad = 0;
    for (int i = 0; runs < 200 && i < 5000; ++i) {
        Graph g = gnp(5 + i % 6, 0.3 + 0.1 * (i % 4), 3000 + i);
        std::vector<int> order = g.vertices();
        std::shuffle(order.begin(), order.end(), rng);
        TreeDecomposition td = shrink(oracle::td_from_elimination(g, order));
        int k = td.width();
        for (int t = 0; t < td.size(); ++t)
            if ((int)td.bags[t].size() == k + 1) {
                td.root = t;
                break;
            }
        VSet x = set_union(td.bags[td.root], random_subset(g, i % g.order(), rng));
        TorsoTreeDecomposition ttd = optimal_torso_td(g, x);
        if (ttd.width() > k - 1) continue;
        ++runs;
        ImproveStats st;
        TreeDecomposition out = improve(g, td, ttd, &st);
        bool ok = validate(g, out).ok() && out.width() <= k &&
                  out.count_bags_of_size(k + 1) < td.count_bags_of_size(k + 1) && st.iterations <= st.initial_phi;
        if (!ok) ++improve_bad;
    }
    report("pull-improve", pull_bad == 0 && improve_bad == 0 && runs == 200,
           fmt("%d pulls with %d violations, %d improve runs with %d violations", pulls, pull_bad, runs,
               improve_bad));
}

void measure_assertions(const std::vector<Entry>& corpus) {
    auto start = Clock::now();
    debug::reset();
    debug::set_enabled(true);
    int wrong = 0;
    for (const Entry& e : corpus)
        for (Backend b : {Backend::stw, Backend::pstw})
            for (int k = std::max(0, e.tw - 1); k <= e.tw; ++k)
                if (exact(e.g, k, {.backend = b, .lower_bound = false}).has_value() != (k >= e.tw)) ++wrong;
    for (const Entry& e : corpus)
        if (!approx(e.g, e.tw, Ratio{1, 2}, {.lower_bound = false})) ++wrong;
    debug::set_enabled(false);
    std::size_t checks = debug::checks_run(), violations = debug::violation_count();
    std::string detail = fmt("%zu checks, %zu violations, %d wrong answers, %.1f s", checks, violations, wrong,
                             seconds_since(start));
    for (const std::string& v : debug::violation_log()) detail += "; " + v;
    report("measure-assertions", checks > 0 && violations == 0 && wrong == 0, detail);
}

void scale_smoke() {
    double worst = 0;
    int runs = 0, bad = 0, exhausted = 0;
    for (int k = 1; k <= 4; ++k)
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            Graph g = drop_edges(ktree(40, k, seed), 0.05, seed + 1);
            SearchBudget budget;
            budget.limit = 50'000'000;
            auto start = Clock::now();
            try {
                TreewidthResult r = treewidth(g, std::nullopt, {.budget = &budget});
                if (r.width > k || !validate(g, r.td).ok() || r.td.width() != r.width) ++bad;
            } catch (const BudgetExceeded&) {
                ++exhausted;
            }
            double t = seconds_since(start);
            worst = std::max(worst, t);
            if (t >= 60) ++bad;
            ++runs;
        }
    report("scale-smoke", bad == 0 && exhausted == 0,
           fmt("%d ktree instances (n=40, k=1..4, 5%% edges dropped), worst %.2f s, %d budget hits, %d bad", runs,
               worst, exhausted, bad));
}

}  // namespace

int main() {
    auto corpus = build_corpus();
    oracle_equivalence(corpus);
    named_families();
    backend_agreement(corpus);
    approximation_contract(corpus);
    important_separator_suite();
    pull_and_improve_suite();
    measure_assertions(corpus);
    scale_smoke();
    return failures;
}
