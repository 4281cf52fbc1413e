#pragma once

#include <optional>
#include <vector>

#include "tw/budget.hpp"
#include "tw/graph.hpp"
#include "tw/treedec.hpp"

namespace tw {

// (G, {W_1..W_t}, k): find a torso decomposition of width ≤ k covering
// every terminal clique.
struct PstwInstance {
    Graph g;
    std::vector<VSet> cliques;  // sorted, distinct
    int k = 0;

    int t() const { return static_cast<int>(cliques.size()); }
    VSet terminals() const;
    // Union of every clique except cliques[i].
    VSet others(int i) const;
    bool well_formed() const;
};

// Sorts and dedups the cliques, and makes each one a clique of g.
PstwInstance make_pstw(Graph g, std::vector<VSet> cliques, int k);

PstwInstance restrict(const PstwInstance& in, const VSet& a, const VSet& s);
PstwInstance merge(const PstwInstance& in, const VSet& wi, const VSet& wj);
PstwInstance push(const PstwInstance& in, const VSet& wi, const VSet& a);

std::optional<Separation> find_safe_separation(const PstwInstance& in);

// Only for t ≤ 1 or |V| ≤ k+2; empty result means no solution exists.
std::optional<TorsoTreeDecomposition> small_case(const PstwInstance& in);

// Quick necessary condition for a solution: G[x] lies inside every
// candidate torso for x the terminals plus the vertices forced into every
// solution, so it must not be certified to exceed width k.
bool terminals_fit(const PstwInstance& in);

// Whether the solvers consult terminals_fit before branching (default on).
// Off leaves every NO to the branching itself.
void set_pruning(bool on);
bool pruning();

// Sum over cliques of 3k+3 - flp(W_i, others).
int measure(const PstwInstance& in);

struct PstwStats {
    std::uint64_t nodes = 0;
    std::uint64_t safe_splits = 0;
    std::uint64_t merges = 0;
    std::uint64_t pushes = 0;
};

std::optional<TorsoTreeDecomposition> solve(const PstwInstance& in, SearchBudget* budget = nullptr,
                                            PstwStats* stats = nullptr);

// Glue two child solutions along the clique s.
TorsoTreeDecomposition combine(const TorsoTreeDecomposition& a, const TorsoTreeDecomposition& b, const VSet& s);

}  // namespace tw
