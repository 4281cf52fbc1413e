#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "tw/debug.hpp"
#include "tw/oracle.hpp"
#include "tw/pstw.hpp"

using namespace tw;
using namespace tw::testing;

namespace {

std::vector<VSet> singletons(const VSet& w) {
    std::vector<VSet> out;
    for (int v : w) out.push_back({v});
    return out;
}

void check_solution(const PstwInstance& in, const TorsoTreeDecomposition& sol) {
    CHECK(validate_torso(in.g, sol).ok());
    CHECK(sol.covers(in.terminals()));
    CHECK(sol.width() <= in.k);
}

}  // namespace

TEST_CASE("restrict") {
    PstwInstance in = make_pstw(path_graph(4), {{1}, {4}}, 1);
    PstwInstance r = restrict(in, {1}, {2});
    CHECK(r.g.vertices() == VSet{1, 2});
    CHECK(r.g.adjacent(1, 2));
    CHECK(r.cliques == std::vector<VSet>{{1}, {2}});
    // s already a clique inside a ∪ s: nothing inserted.
    PstwInstance r2 = restrict(make_pstw(path_graph(4), {{1, 2}, {4}}, 1), {1}, {2});
    CHECK(r2.cliques == std::vector<VSet>{{1, 2}});
    PstwInstance r3 = restrict(in, {1, 3, 4}, {2});
    CHECK(r3.cliques == std::vector<VSet>{{1}, {2}, {4}});
    CHECK_THROWS_AS(restrict(in, {1}, {2, 3, 4}), Error);
}

TEST_CASE("merge and push") {
    PstwInstance in = make_pstw(path_graph(4), {{1}, {4}}, 1);
    PstwInstance m = merge(in, {1}, {4});
    CHECK(m.cliques == std::vector<VSet>{{1, 4}});
    CHECK(m.g == cycle_graph(4));
    PstwInstance nested = make_pstw(path_graph(4), {{1}, {1, 2}}, 2);
    CHECK(merge(nested, {1}, {1, 2}).cliques == std::vector<VSet>{{1, 2}});
    CHECK_THROWS_AS(merge(make_pstw(path_graph(4), {{1, 2}, {3}}, 1), {1, 2}, {3}), Error);

    PstwInstance p = push(in, {1}, {2});
    CHECK(p.cliques == std::vector<VSet>{{1, 2}, {4}});
    CHECK(push(in, {1}, {}).cliques == in.cliques);
    CHECK_THROWS_AS(push(in, {1}, {2, 3}), Error);
}

TEST_CASE("terminals_fit") {
    // K5 terminals cannot fit width 3.
    CHECK_FALSE(terminals_fit(make_pstw(complete_graph(5), singletons({1, 2, 3, 4, 5}), 3)));
    CHECK(terminals_fit(make_pstw(complete_graph(5), singletons({1, 2, 3, 4, 5}), 4)));
    // A hub seeing all of a 4-cycle: left out it makes the cycle a clique,
    // taken in it gives a wheel; both need width 3.
    Graph wheel = cycle_graph(4);
    for (int v = 1; v <= 4; ++v) wheel.add_edge(0, v);
    CHECK(terminals_fit(make_pstw(wheel, singletons({1, 2, 3, 4}), 3)));
    CHECK_FALSE(terminals_fit(make_pstw(wheel, singletons({1, 2, 3, 4}), 2)));
    CHECK(terminals_fit(make_pstw(cycle_graph(6), singletons({1, 3, 5}), 1)));
}

TEST_CASE("find_safe_separation") {
    PstwInstance p4 = make_pstw(path_graph(4), {{1}, {4}}, 1);
    auto sep = find_safe_separation(p4);
    REQUIRE(sep);
    CHECK(sep->order() == 1);
    CHECK(sep->strict());
    CHECK(is_separation(p4.g, *sep));

    PstwInstance k4 = make_pstw(complete_graph(4), {{1}, {2}}, 2);
    CHECK_FALSE(find_safe_separation(k4));

    // Removing clique {2,3} of a path on 5 leaves {1} and {4,5}.
    PstwInstance cut = make_pstw(path_graph(5), {{2, 3}, {5}}, 2);
    auto s2 = find_safe_separation(cut);
    REQUIRE(s2);
    CHECK(is_subset(s2->s, {2, 3}));
}

TEST_CASE("small_case") {
    PstwInstance one = make_pstw(path_graph(3), {{1, 2}}, 1);
    auto a = small_case(one);
    REQUIRE(a);
    CHECK(a->td.bags == std::vector<VSet>{{1, 2}});
    PstwInstance k4 = make_pstw(complete_graph(4), singletons({1, 2, 3, 4}), 2);
    CHECK_FALSE(small_case(k4));
    PstwInstance c4 = make_pstw(cycle_graph(4), singletons({1, 2, 3, 4}), 2);
    auto c = small_case(c4);
    REQUIRE(c);
    CHECK(c->td.size() == 2);
    check_solution(c4, *c);
    CHECK_THROWS_AS(small_case(make_pstw(path_graph(6), {{1}, {6}, {3}}, 1)), Error);
}

TEST_CASE("solve examples") {
    debug::set_enabled(true);
    debug::reset();
    PstwInstance p4 = make_pstw(path_graph(4), {{1}, {4}}, 1);
    auto a = solve(p4);
    REQUIRE(a);
    check_solution(p4, *a);

    Graph almost;
    for (auto [u, v] : complete_graph(4).edges())
        if (!(u == 1 && v == 2)) almost.add_edge(u, v);
    PstwInstance ke = make_pstw(almost, singletons({1, 2, 3, 4}), 2);
    // The clique-ified singletons are points, so the graph is unchanged.
    auto b = solve(ke);
    REQUIRE(b);
    check_solution(ke, *b);

    PstwInstance c4 = make_pstw(cycle_graph(4), singletons({1, 2, 3}), 1);
    CHECK_FALSE(solve(c4));
    CHECK(measure(p4) == 2 * (3 * 1 + 2));
    set_pruning(false);
    CHECK_FALSE(solve(c4));
    set_pruning(true);
    CHECK(debug::violation_count() == 0);
    debug::set_enabled(false);
}

TEST_CASE("random soundness and completeness") {
    // The branching alone decides; the pruned run must agree with it.
    debug::set_enabled(true);
    debug::reset();
    std::mt19937 rng(51);
    int yes = 0, no = 0;
    for (int iter = 0; iter < 220; ++iter) {
        int n = 4 + iter % 5;
        Graph g = random_graph(n, 0.25 + 0.15 * (iter % 4), rng);
        int tw = oracle::exact_tw(g).width;
        for (int k = std::max(0, tw - 1); k <= tw && k + 2 <= n; ++k) {
            VSet w = random_subset(g, k + 2, rng);
            PstwInstance in = make_pstw(g, singletons(w), k);
            set_pruning(false);
            auto sol = solve(in);
            set_pruning(true);
            CHECK(solve(in).has_value() == sol.has_value());
            if (sol) {
                ++yes;
                check_solution(in, *sol);
            } else {
                ++no;
                // No solution means even the whole graph has no width-k decomposition.
                CHECK(tw > k);
            }
            if (tw <= k) CHECK(sol.has_value());
        }
    }
    CHECK(yes > 50);
    CHECK(no > 20);
    CHECK(debug::violation_count() == 0);
    for (const auto& m : debug::violation_log()) MESSAGE(m);
    debug::set_enabled(false);
}
