#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "tw/budget.hpp"
#include "tw/pstw.hpp"

namespace tw {

// Partitioned instance plus the bookkeeping of the subset solver: every
// original terminal w = original_w[i] is covered by the clique tc[i], i.e.
// tc[i] separates w from V(g) in the original graph.
struct StwInstance {
    PstwInstance base;
    std::vector<VSet> tc;
    int q = 0;
    std::shared_ptr<const Graph> original_g;
    VSet original_w;

    const Graph& g() const { return base.g; }
    const std::vector<VSet>& cliques() const { return base.cliques; }
    int k() const { return base.k; }
    int t() const { return base.t(); }
    // Number of original terminals mapped to w.
    int ctc(const VSet& w) const;
    // tc targets are cliques, every tc[i] covers original_w[i], and g keeps
    // every torso edge of the original graph.
    bool covers_ok() const;
};

// Singleton cliques over w with tc(w) = {w} and q = 0.
StwInstance make_stw(const Graph& g, const VSet& w, int k);

StwInstance restrict_ext(const StwInstance& in, const VSet& a, const VSet& s);
StwInstance merge_ext(const StwInstance& in, const VSet& wi, const VSet& wj);
StwInstance push_ext(const StwInstance& in, const VSet& wi, const VSet& a);

// |S| plus the terminals covered by cliques meeting A is at most k+1.
bool is_degenerate(const StwInstance& in, const Separation& sep);

// A leaf bag to glue back on during reconstruction: `bag` goes next to
// some bag containing `anchor`.
struct Attachment {
    VSet bag;
    VSet anchor;
};
using Recipe = std::vector<Attachment>;

// Undo the recipe on a solution of the emitted instance.
TorsoTreeDecomposition lift(const Recipe& recipe, TorsoTreeDecomposition sol);

// Emits every pre-branched instance with its recipe; stops once `emit`
// returns false.
void prebranch(const Graph& g, const VSet& w, int k,
               const std::function<bool(const StwInstance&, const Recipe&)>& emit);

// Telemetry measure of the subset solver (needs k ≥ 2).
double stw_measure(const StwInstance& in);

struct StwStats {
    std::uint64_t prebranched = 0;
    std::uint64_t nodes = 0;
    std::uint64_t safe_splits = 0;
    std::uint64_t merges = 0;
    std::uint64_t pushes = 0;
    std::uint64_t q_splits = 0;
    std::uint64_t q_raises = 0;
};

// Solution of the instance, or nothing when the instance is invalid.
std::optional<TorsoTreeDecomposition> solve_valid(const StwInstance& in, SearchBudget* budget = nullptr,
                                                  StwStats* stats = nullptr);

// Torso decomposition of g of width ≤ k covering w, if one exists.
std::optional<TorsoTreeDecomposition> solve_stw(const Graph& g, const VSet& w, int k,
                                                SearchBudget* budget = nullptr, StwStats* stats = nullptr);

}  // namespace tw
