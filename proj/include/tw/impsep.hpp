#pragma once

#include <functional>
#include <vector>

#include "tw/graph.hpp"

namespace tw {

// The unique important (a,b)-separator of size flow(a,b); ∅ when b is
// unreachable from a.
VSet unique_min_important(const Graph& g, const VSet& a, const VSet& b);

// Exact importance test: s is a minimal (a,b)-separator and no separator of
// size ≤ |s| reaches strictly more from a.
bool is_important(const Graph& g, const VSet& a, const VSet& b, const VSet& s);

// Calls `emit` once for every important (a,b)-separator of size ≤ k.
// Returning false from `emit` stops the enumeration early.
void enumerate_important(const Graph& g, const VSet& a, const VSet& b, int k,
                         const std::function<bool(const VSet&)>& emit);
std::vector<VSet> important_separators(const Graph& g, const VSet& a, const VSet& b, int k);

// Smallest important separator whose a-side contains that of s.
VSet smallest_dominating_important(const Graph& g, const VSet& a, const VSet& b, const VSet& s);

// At most k vertices meeting every nonempty important (a,b)-separator of
// size ≤ k.
VSet hitting_set(const Graph& g, const VSet& a, const VSet& b, int k);

}  // namespace tw
